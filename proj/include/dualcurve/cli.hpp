#pragma once

// Command implementations behind the dualcurve executable. Each command
// writes its primary output to `out` (or to a file), diagnostics to `err`,
// and returns a process exit status.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualcurve/equiaffine.hpp"
#include "dualcurve/io.hpp"
#include "dualcurve/lorentz.hpp"
#include "dualcurve/verify.hpp"

namespace dualcurve::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadInput = 2, kIoError = 3, kPrecondition = 4 };

enum class Format { Csv, Json };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadParams:
    case ErrorCode::BadDomain:
    case ErrorCode::ParseError:
    case ErrorCode::NotUnimodular:
    case ErrorCode::NotIsometry:
    case ErrorCode::UnknownCheck:
      return kBadInput;
    default:
      return kPrecondition;
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return text;
}

/// Writes to `path`, or to `out` when no path is given.
inline void write_output(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + *path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("error writing '" + *path + "'");
}

/// Runs `body`, mapping library and I/O failures to exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const io::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

// ---------------------------------------------------------------------------
// Invariant tables.

inline constexpr double kUnitSpeedTolerance = 1e-8;

namespace detail {

inline io::SampleRow position_row(const CurveSpec& spec, double s) {
  io::SampleRow row;
  row.s = s;
  const DualVec2 p = spec.point(s);
  row.alpha = p.real();
  row.beta = p.dual();
  return row;
}

inline std::optional<CurveJet> try_jet(const CurveSpec& spec, double s, std::string& note) {
  try {
    return jet(spec, s);
  } catch (const Error& e) {
    note = e.what();
    return std::nullopt;
  }
}

inline bool is_equiaffine_unit_speed(const CurveSpec& spec, int samples) {
  for (double s : sample_grid(spec.domain(), samples)) {
    std::string note;
    const auto j = try_jet(spec, s, note);
    if (!j) return false;
    const Dual speed = det2((*j)[1], (*j)[2]);
    if (std::abs(speed.re() - 1.0) > kUnitSpeedTolerance || std::abs(speed.du()) > kUnitSpeedTolerance) return false;
  }
  return true;
}

inline std::vector<io::SampleRow> equiaffine_sample(const CurveSpec& spec, int samples, bool with_kappa,
                                                    const std::string& note) {
  std::vector<io::SampleRow> rows;
  for (double s : sample_grid(spec.domain(), samples)) {
    io::SampleRow row = position_row(spec, s);
    const auto j = try_jet(spec, s, row.note);
    if (j) {
      const EquiaffineReport r = equiaffine_report(*j);
      row.nondeg = r.nondeg;
      row.residual = r.admissibility_residual;
      if (with_kappa) row.kappa = r.kappa;
      if (!note.empty()) row.note = note;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Unit-speed curves are sampled as given; admissible non-degenerate curves
/// are reparametrized by equiaffine arc length first; anything else gets
/// residual columns only, with κ left empty.
inline std::vector<io::SampleRow> equiaffine_rows(const CurveSpec& spec, int samples) {
  if (detail::is_equiaffine_unit_speed(spec, samples)) return detail::equiaffine_sample(spec, samples, true, "");
  bool any_nondegenerate = false;
  for (double t : sample_grid(spec.domain(), samples)) {
    std::string note;
    const auto j = detail::try_jet(spec, t, note);
    any_nondegenerate |= j && std::abs(nondegeneracy(*j)) > 1e-12;
  }
  if (!any_nondegenerate) throw Error(ErrorCode::DegeneratePoint, "(α′,α″) vanishes on the whole domain");
  try {
    return detail::equiaffine_sample(reparametrize_equiaffine(spec, samples), samples, true, "");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAdmissible && e.code() != ErrorCode::DegeneratePoint &&
        e.code() != ErrorCode::StencilClipped) {
      throw;
    }
    return detail::equiaffine_sample(spec, samples, false, e.what());
  }
}

inline std::vector<io::SampleRow> lorentz_rows(const CurveSpec& spec, int samples) {
  std::vector<io::SampleRow> rows;
  bool any_jet = false;
  bool any_tangent = false;
  for (double s : sample_grid(spec.domain(), samples)) {
    io::SampleRow row = detail::position_row(spec, s);
    const auto j = detail::try_jet(spec, s, row.note);
    if (j) {
      any_jet = true;
      const CausalClass c = causal_character(j->alpha(1));
      any_tangent |= c != CausalClass::NullVectorZero;
      row.causal = to_string(c);
      row.residual = lorentz_admissibility(*j);
      if (c == CausalClass::Lightlike) {
        row.note = "lightlike tangent: no Frenet frame";
      } else if (c != CausalClass::NullVectorZero) {
        try {
          row.kappa = frenet(*j, kUnitSpeedTolerance).kappa;
        } catch (const Error& e) {
          row.note = e.what();
        }
      }
    }
    rows.push_back(std::move(row));
  }
  if (!any_jet) throw Error(ErrorCode::StencilClipped, "no sample point admits a jet");
  if (!any_tangent) throw Error(ErrorCode::DegeneratePoint, "α′ vanishes on the whole domain");
  return rows;
}

inline std::vector<io::SampleRow> invariant_rows(const CurveSpec& spec, io::FamilyGeometry g, int samples) {
  return g == io::FamilyGeometry::Equiaffine ? equiaffine_rows(spec, samples) : lorentz_rows(spec, samples);
}

inline std::string render(const std::vector<io::SampleRow>& rows, Format format) {
  if (format == Format::Json) return io::rows_to_json(rows).dump(2) + '\n';
  std::ostringstream os;
  io::write_csv(os, rows);
  return os.str();
}

// ---------------------------------------------------------------------------
// Commands.

struct FamilyArgs {
  std::string family;
  std::vector<std::string> params;  ///< key=value; comma-separated values become arrays
  double lo = 0.0;
  double hi = 1.0;
  int samples = 100;
  std::optional<std::string> out;
  Format format = Format::Csv;
  bool emit_spec = false;
};

/// "1.5" → number, "1,2" → [1, 2], anything else → string.
inline io::json parse_param_value(const std::string& text) {
  auto number = [](const std::string& s) -> std::optional<double> {
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || s.empty()) return std::nullopt;
    return v;
  };
  if (text.find(',') != std::string::npos) {
    io::json arr = io::json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto v = number(item);
      if (!v) throw Error(ErrorCode::BadParams, "array entry '" + item + "' is not a number");
      arr.push_back(*v);
    }
    return arr;
  }
  if (const auto v = number(text)) return *v;
  return text;
}

inline io::json family_document(const FamilyArgs& a) {
  io::json params = io::json::object();
  for (const std::string& kv : a.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::BadParams, "expected key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = parse_param_value(kv.substr(eq + 1));
  }
  io::json doc = io::json::object();
  doc["kind"] = "catalog";
  doc["family"] = a.family;
  doc["params"] = std::move(params);
  doc["domain"] = {a.lo, a.hi};
  return doc;
}

inline int cmd_family(const FamilyArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::json doc = family_document(a);
    const CurveSpec spec = io::parse_curve(doc);
    if (a.emit_spec) {
      write_output(a.out, doc.dump(2) + '\n', out);
      return kOk;
    }
    write_output(a.out, render(invariant_rows(spec, io::natural_geometry(doc), a.samples), a.format), out);
    return kOk;
  });
}

struct InvariantsArgs {
  std::string spec_path;
  std::optional<std::string> geometry;  ///< "equiaffine" | "lorentz"; defaults to the document's own
  int samples = 100;
  std::optional<std::string> out;
  Format format = Format::Csv;
};

inline io::FamilyGeometry parse_geometry(const std::optional<std::string>& g, const io::json& doc) {
  if (!g) return io::natural_geometry(doc);
  if (*g == "equiaffine") return io::FamilyGeometry::Equiaffine;
  if (*g == "lorentz") return io::FamilyGeometry::Lorentz;
  throw Error(ErrorCode::BadParams, "geometry must be equiaffine or lorentz");
}

inline int cmd_invariants(const InvariantsArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::json doc = io::parse_json(read_file(a.spec_path));
    const CurveSpec spec = io::parse_curve(doc);
    const io::FamilyGeometry g = parse_geometry(a.geometry, doc);
    write_output(a.out, render(invariant_rows(spec, g, a.samples), a.format), out);
    return kOk;
  });
}

struct VerifyArgs {
  std::optional<std::string> check;
  bool all = false;
  std::uint64_t seed = 0;
  std::optional<double> tol;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (a.all == a.check.has_value()) throw Error(ErrorCode::BadParams, "give exactly one of a check id or --all");
    if (a.all) {
      const std::vector<CheckReport> reports = run_all(a.seed, a.tol);
      io::json arr = io::json::array();
      bool ok = true;
      for (const CheckReport& r : reports) {
        ok &= r.passed;
        if (!r.passed) err << "FAIL " << r.check << " maxError=" << r.max_error << '\n';
        arr.push_back(io::to_json(r));
      }
      out << arr.dump(2) << '\n';
      return ok ? kOk : kCheckFailed;
    }
    const CheckReport r = run_check(*a.check, a.seed, a.tol);
    out << io::to_json(r).dump(2) << '\n';
    return r.passed ? kOk : kCheckFailed;
  });
}

struct TransformArgs {
  std::string spec_path;
  std::string transform_path;
  std::string out;
  std::optional<std::string> table;  ///< invariants of the transformed curve; stdout when absent
  int samples = 100;
  Format format = Format::Csv;
};

/// Writes the input document with the transform appended to "transforms",
/// then the transformed curve's invariant table in the transform's geometry.
inline int cmd_transform(const TransformArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    io::json doc = io::parse_json(read_file(a.spec_path));
    const io::json xform = io::parse_json(read_file(a.transform_path));
    const io::Transform t = io::parse_transform(xform);
    const CurveSpec transformed = io::apply_transform(t, io::parse_curve(doc));
    if (!doc.contains("transforms")) doc["transforms"] = io::json::array();
    doc["transforms"].push_back(xform);
    const std::vector<io::SampleRow> rows = invariant_rows(transformed, t.kind, a.samples);
    write_output(a.out, doc.dump(2) + '\n', out);
    write_output(a.table, render(rows, a.format), out);
    return kOk;
  });
}

}  // namespace dualcurve::cli
