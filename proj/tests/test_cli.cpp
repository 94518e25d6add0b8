#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dualcurve/cli.hpp"

using namespace dualcurve;
namespace fs = std::filesystem;

namespace {

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string cell(std::size_t row, const std::string& col) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == col) return rows.at(row).at(i);
    }
    throw std::runtime_error("no column " + col);
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(line);
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);
  csv.header = split(line);
  while (std::getline(ss, line)) csv.rows.push_back(split(line));
  return csv;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("dualcurve-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

const char* kWorkedExample = R"J({"kind": "analytic",
  "params": {"alpha": ["sin(s)", "-cos(s)"], "beta": ["cos(s)", "sin(s)"]},
  "domain": [0, 6.283185307179586]})J";

const char* kLightlike = R"J({"kind": "lightlike",
  "params": {"p": [0, 0], "v": [1, 1], "beta": {"kind": "analytic", "params": {"alpha": ["t^2", "0"], "beta": ["0", "0"]}}},
  "domain": [-1, 1]})J";

}  // namespace

TEST(CliFamily, EllipticRowsHaveUnitCurvature) {
  cli::FamilyArgs a;
  a.family = "elliptic";
  a.params = {"r=1", "c0=1", "c1=0"};
  a.lo = 0;
  a.hi = 6.283;
  a.samples = 8;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_family(a, out, err), 0) << err.str();
  const Csv csv = parse_csv(out.str());
  EXPECT_EQ(csv.header, io::table_columns());
  ASSERT_EQ(csv.rows.size(), 9u);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    EXPECT_NEAR(std::stod(csv.cell(i, "kappa_re")), 1.0, 1e-12);
    EXPECT_NEAR(std::stod(csv.cell(i, "kappa_du")), 0.0, 1e-12);
  }
}

TEST(CliFamily, FlatZeroConstantsHaveZeroDualPart) {
  cli::FamilyArgs a;
  a.family = "flat";
  a.samples = 4;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_family(a, out, err), 0);
  const Csv csv = parse_csv(out.str());
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    EXPECT_EQ(csv.cell(i, "beta_x"), "0");
    EXPECT_EQ(csv.cell(i, "beta_y"), "0");
  }
}

TEST(CliFamily, BadParamsExitTwo) {
  std::ostringstream out, err;
  cli::FamilyArgs a;
  a.family = "elliptic";
  a.params = {"r=-1"};
  EXPECT_EQ(cli::cmd_family(a, out, err), cli::kBadInput);
  EXPECT_NE(err.str().find("BadParams"), std::string::npos);
  a.params = {"r=1", "bogus=3"};
  EXPECT_EQ(cli::cmd_family(a, out, err), cli::kBadInput);
  a.family = "no-such-family";
  a.params = {};
  EXPECT_EQ(cli::cmd_family(a, out, err), cli::kBadInput);
}

TEST(CliFamily, EmitSpecRoundTripsThroughInvariants) {
  TempDir dir;
  cli::FamilyArgs a;
  a.family = "lclass";
  a.params = {"r=2", "m=0.5", "n=-1", "causal=timelike", "beta0=1,2"};
  a.lo = -1;
  a.hi = 1;
  a.samples = 10;
  std::ostringstream table, err;
  ASSERT_EQ(cli::cmd_family(a, table, err), 0) << err.str();
  a.emit_spec = true;
  a.out = dir.path("spec.json");
  std::ostringstream unused;
  ASSERT_EQ(cli::cmd_family(a, unused, err), 0) << err.str();

  cli::InvariantsArgs inv;
  inv.spec_path = *a.out;
  inv.samples = 10;
  std::ostringstream again;
  ASSERT_EQ(cli::cmd_invariants(inv, again, err), 0) << err.str();
  EXPECT_EQ(table.str(), again.str());
}

TEST(CliFamily, JsonFormat) {
  cli::FamilyArgs a;
  a.family = "pure-dual";
  a.params = {"m=2"};
  a.samples = 2;
  a.format = cli::Format::Json;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_family(a, out, err), 0);
  const io::json j = io::json::parse(out.str());
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][1]["kappa_du"].get<double>(), 2.0);
  EXPECT_TRUE(j["rows"][1]["causal"].is_null());
}

TEST(CliInvariants, WorkedExample) {
  TempDir dir;
  cli::InvariantsArgs a;
  a.spec_path = dir.file("ex.json", kWorkedExample);
  a.samples = 20;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_invariants(a, out, err), 0) << err.str();
  const Csv csv = parse_csv(out.str());
  ASSERT_EQ(csv.rows.size(), 21u);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    EXPECT_NEAR(std::stod(csv.cell(i, "residual")), 0.0, 1e-12);
    EXPECT_NEAR(std::stod(csv.cell(i, "kappa_re")), 1.0, 1e-12);
  }
}

TEST(CliInvariants, SlowWorkedExampleIsReparametrized) {
  TempDir dir;
  cli::InvariantsArgs a;
  a.spec_path = dir.file("ex.json", R"J({"kind": "analytic",
    "params": {"alpha": ["sin(t/2)", "-cos(t/2)"], "beta": ["cos(t/2)", "sin(t/2)"]}, "domain": [0, 12.566370614359172]})J");
  a.samples = 10;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_invariants(a, out, err), 0) << err.str();
  const Csv csv = parse_csv(out.str());
  EXPECT_NEAR(std::stod(csv.cell(10, "s")), 6.283185307, 1e-8);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) EXPECT_NEAR(std::stod(csv.cell(i, "kappa_re")), 1.0, 1e-8);
}

TEST(CliInvariants, InadmissibleCurveKeepsResiduals) {
  TempDir dir;
  cli::InvariantsArgs a;
  a.spec_path = dir.file("c.json", R"J({"kind": "analytic", "params": {"alpha": ["t", "t^2/2"], "beta": ["t^3", "0"]}, "domain": [0, 1]})J");
  a.samples = 4;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_invariants(a, out, err), 0) << err.str();
  const Csv csv = parse_csv(out.str());
  EXPECT_NEAR(std::stod(csv.cell(4, "residual")), -3.0, 1e-12);
  EXPECT_EQ(csv.cell(4, "kappa_re"), "");
  EXPECT_EQ(csv.cell(4, "kappa_du"), "");
}

TEST(CliInvariants, LightlikeHasNoCurvature) {
  TempDir dir;
  cli::InvariantsArgs a;
  a.spec_path = dir.file("l.json", kLightlike);
  a.samples = 4;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_invariants(a, out, err), 0) << err.str();
  const Csv csv = parse_csv(out.str());
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    EXPECT_EQ(csv.cell(i, "causal"), "lightlike");
    EXPECT_EQ(csv.cell(i, "kappa_re"), "");
  }
}

TEST(CliInvariants, ErrorsMapToExitCodes) {
  TempDir dir;
  std::ostringstream out, err;
  cli::InvariantsArgs a;
  a.spec_path = dir.file("bad.json", "{not json");
  EXPECT_EQ(cli::cmd_invariants(a, out, err), cli::kBadInput);
  a.spec_path = dir.file("expr.json", R"J({"kind": "analytic", "params": {"alpha": ["q", "0"], "beta": ["0", "0"]}, "domain": [0, 1]})J");
  EXPECT_EQ(cli::cmd_invariants(a, out, err), cli::kBadInput);
  a.spec_path = dir.path("missing.json");
  EXPECT_EQ(cli::cmd_invariants(a, out, err), cli::kIoError);
  a.spec_path = dir.file("line.json", R"J({"kind": "analytic", "params": {"alpha": ["t", "2*t"], "beta": ["0", "0"]}, "domain": [0, 1]})J");
  EXPECT_EQ(cli::cmd_invariants(a, out, err), cli::kPrecondition);
  a.spec_path = dir.file("ok.json", kWorkedExample);
  a.out = dir.path("no-such-dir/out.csv");
  EXPECT_EQ(cli::cmd_invariants(a, out, err), cli::kIoError);
}

TEST(CliVerify, ExitCodes) {
  std::ostringstream out, err;
  cli::VerifyArgs a;
  a.check = "lclass-dual-part";
  a.seed = 5;
  ASSERT_EQ(cli::cmd_verify(a, out, err), 0);
  const io::json j = io::json::parse(out.str());
  EXPECT_EQ(j["check"], "lclass-dual-part");
  EXPECT_LE(j["maxError"].get<double>(), 1e-8);
  EXPECT_TRUE(j["passed"].get<bool>());

  a.check = "bogus-check";
  EXPECT_EQ(cli::cmd_verify(a, out, err), cli::kBadInput);
  a.check = "exeq-fd-oracle";
  a.tol = 1e-30;
  EXPECT_EQ(cli::cmd_verify(a, out, err), cli::kCheckFailed);
}

TEST(CliTransform, IdentityGivesIdenticalTable) {
  TempDir dir;
  const std::string spec = dir.file("ex.json", kWorkedExample);
  cli::InvariantsArgs inv;
  inv.spec_path = spec;
  inv.samples = 16;
  std::ostringstream before, err;
  ASSERT_EQ(cli::cmd_invariants(inv, before, err), 0);

  cli::TransformArgs t;
  t.spec_path = spec;
  t.transform_path = dir.file("id.json", R"J({"kind": "equiaffine", "A": [[1, 0], [0, 1]], "b": [0, 0]})J");
  t.out = dir.path("out.json");
  t.samples = 16;
  std::ostringstream after;
  ASSERT_EQ(cli::cmd_transform(t, after, err), 0) << err.str();
  EXPECT_EQ(before.str(), after.str());

  inv.spec_path = t.out;
  std::ostringstream reread;
  ASSERT_EQ(cli::cmd_invariants(inv, reread, err), 0);
  EXPECT_EQ(before.str(), reread.str());
}

TEST(CliTransform, BoostKeepsLclassCurvature) {
  TempDir dir;
  const std::string spec =
      dir.file("l.json", R"J({"kind": "catalog", "family": "lclass", "params": {"r": 1, "m": 2, "n": 0.5}, "domain": [-1, 1]})J");
  cli::TransformArgs t;
  t.spec_path = spec;
  t.transform_path = dir.file("boost.json", R"J({"kind": "lorentz", "phi": 1, "b": [[0.5, 1], 2]})J");
  t.out = dir.path("out.json");
  t.samples = 10;
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_transform(t, out, err), 0) << err.str();
  const Csv csv = parse_csv(out.str());
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    EXPECT_NEAR(std::stod(csv.cell(i, "kappa_re")), 1.0, 1e-8);
    EXPECT_NEAR(std::stod(csv.cell(i, "kappa_du")), 2.0, 1e-8);
    EXPECT_EQ(csv.cell(i, "causal"), "spacelike");
  }
}

TEST(CliTransform, RejectsNonUnimodularAndNonIsometry) {
  TempDir dir;
  const std::string spec = dir.file("ex.json", kWorkedExample);
  std::ostringstream out, err;
  cli::TransformArgs t;
  t.spec_path = spec;
  t.out = dir.path("out.json");
  t.transform_path = dir.file("s.json", R"J({"kind": "equiaffine", "A": [[2, 0], [0, 1]]})J");
  EXPECT_EQ(cli::cmd_transform(t, out, err), cli::kBadInput);
  t.transform_path = dir.file("d.json", R"J({"kind": "equiaffine", "A": [[[1, 1], 0], [0, 1]]})J");
  EXPECT_EQ(cli::cmd_transform(t, out, err), cli::kBadInput);
  t.transform_path = dir.file("l.json", R"J({"kind": "lorentz", "A": [[0, 1], [1, 0.5]]})J");
  EXPECT_EQ(cli::cmd_transform(t, out, err), cli::kBadInput);
  t.transform_path = dir.file("k.json", R"J({"kind": "projective"})J");
  EXPECT_EQ(cli::cmd_transform(t, out, err), cli::kBadInput);
}

TEST(Io, ParamValues) {
  EXPECT_EQ(cli::parse_param_value("1.5"), io::json(1.5));
  EXPECT_EQ(cli::parse_param_value("1,-2"), io::json::array({1.0, -2.0}));
  EXPECT_EQ(cli::parse_param_value("timelike"), io::json("timelike"));
}

TEST(Io, CsvFormattingIsLocaleFree) {
  EXPECT_EQ(io::format_number(0.1), "0.1");
  EXPECT_EQ(io::format_number(-0.0), "0");
  EXPECT_EQ(io::format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(io::format_number(1e-20), "1e-20");
}

TEST(Io, DocumentsWithTransformsAndFdDerivatives) {
  const CurveSpec a = io::parse_curve_text(kWorkedExample);
  const CurveSpec fd = io::parse_curve_text(R"J({"kind": "analytic", "derivatives": "fd",
    "params": {"alpha": ["sin(s)", "-cos(s)"], "beta": ["cos(s)", "sin(s)"]}, "domain": [0, 6.283185307179586]})J");
  EXPECT_TRUE(a.has_analytic_jet());
  EXPECT_FALSE(fd.has_analytic_jet());
  EXPECT_NEAR(equiaffine_curvature(jet(fd, 3.0), 1e-5).re(), 1.0, 1e-4);

  const CurveSpec moved = io::parse_curve_text(R"J({"kind": "catalog", "family": "elliptic",
    "params": {"r": 1, "c0": 1}, "domain": [0, 6],
    "transforms": [{"kind": "equiaffine", "A": [[[1, 2], 0.5], [0, [1, -2]]], "b": [1, 2]}]})J");
  EXPECT_NEAR(equiaffine_curvature(jet(moved, 2.0)).re(), 1.0, 1e-12);
  EXPECT_NEAR(equiaffine_curvature(jet(moved, 2.0)).du(), 0.0, 1e-12);
}
