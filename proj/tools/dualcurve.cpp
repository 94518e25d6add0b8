#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualcurve/cli.hpp"

namespace cli = dualcurve::cli;

namespace {

const std::map<std::string, cli::Format> kFormats = {{"csv", cli::Format::Csv}, {"json", cli::Format::Json}};

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "table format")->check(CLI::IsMember({"csv", "json"}))->type_name("csv|json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, catalog families and numerical checks for curves in the dual plane"};
  app.require_subcommand(1);

  cli::FamilyArgs family;
  auto* fam = app.add_subcommand("family", "Sample a catalog family");
  fam->add_option("family", family.family, "flat | pure-dual | elliptic | hyperbolic | lclass | kappa-real-only | "
                                           "lightlike | straight-line")
      ->required();
  fam->add_option("-p,--param", family.params, "key=value (comma-separated values form an array)");
  std::vector<double> domain{0.0, 1.0};
  fam->add_option("--domain", domain, "parameter interval")->expected(2)->type_name("LO HI");
  fam->add_option("--samples", family.samples, "sample intervals (rows = samples + 1)")->check(CLI::PositiveNumber);
  fam->add_option("--out", family.out, "output path (default stdout)");
  std::string family_format = "csv";
  add_format(fam, family_format);
  fam->add_flag("--emit-spec", family.emit_spec, "write the curve document instead of a table");

  cli::InvariantsArgs inv;
  auto* invc = app.add_subcommand("invariants", "Tabulate invariants along a curve document");
  invc->add_option("spec", inv.spec_path, "curve document (JSON)")->required();
  invc->add_option("--geometry", inv.geometry, "equiaffine | lorentz (default: from the document)");
  invc->add_option("--samples", inv.samples, "sample intervals")->check(CLI::PositiveNumber);
  invc->add_option("--out", inv.out, "output path (default stdout)");
  std::string inv_format = "csv";
  add_format(invc, inv_format);

  cli::VerifyArgs ver;
  auto* verc = app.add_subcommand("verify", "Run named numerical checks");
  verc->add_option("check", ver.check, "check id");
  verc->add_flag("--all", ver.all, "run every registered check");
  verc->add_option("--seed", ver.seed, "RNG seed");
  verc->add_option("--tol", ver.tol, "override the check tolerance");

  cli::TransformArgs tr;
  auto* trc = app.add_subcommand("transform", "Apply an equiaffine or Lorentz transform to a curve document");
  trc->add_option("spec", tr.spec_path, "curve document (JSON)")->required();
  trc->add_option("transform", tr.transform_path, "transform document (JSON)")->required();
  trc->add_option("--out", tr.out, "path for the transformed curve document")->required();
  trc->add_option("--table", tr.table, "path for the invariant table (default stdout)");
  trc->add_option("--samples", tr.samples, "sample intervals")->check(CLI::PositiveNumber);
  std::string tr_format = "csv";
  add_format(trc, tr_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kBadInput;
  }

  family.lo = domain[0];
  family.hi = domain[1];
  family.format = kFormats.at(family_format);
  inv.format = kFormats.at(inv_format);
  tr.format = kFormats.at(tr_format);

  if (fam->parsed()) return cli::cmd_family(family, std::cout, std::cerr);
  if (invc->parsed()) return cli::cmd_invariants(inv, std::cout, std::cerr);
  if (verc->parsed()) return cli::cmd_verify(ver, std::cout, std::cerr);
  return cli::cmd_transform(tr, std::cout, std::cerr);
}
