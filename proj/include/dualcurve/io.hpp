#pragma once

// JSON curve and transform documents, sample tables (CSV / JSON), and check
// report serialization.
//
// Curve documents:
//   {"kind": "catalog", "family": "elliptic", "params": {"r": 1, "c0": 1}, "domain": [0, 6.28]}
//   {"kind": "analytic", "params": {"alpha": ["sin(t)", "-cos(t)"], "beta": ["cos(t)", "sin(t)"]},
//    "domain": [0, 6.28], "derivatives": "symbolic" | "fd"}
//   {"kind": "lightlike", "params": {"p": [0, 0], "v": [1, 1], "beta": {nested curve document}},
//    "domain": [-1, 1]}
// Any document may carry "transforms": [transform documents], applied in order.
//
// Transform documents:
//   {"kind": "equiaffine", "A": [[a11, a12], [a21, a22]], "b": [bx, by]}   entries: x or [re, du]
//   {"kind": "lorentz", "A": [[..], [..]], "b": [..]}                       A real
//   {"kind": "lorentz", "phi": 1.0, "reflectX": false, "reflectY": false, "b": [..]}

#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dualcurve/curve.hpp"
#include "dualcurve/equiaffine.hpp"
#include "dualcurve/expression.hpp"
#include "dualcurve/lorentz.hpp"
#include "dualcurve/verify.hpp"

namespace dualcurve::io {

using json = nlohmann::ordered_json;

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

inline double get_number(const json& j, const std::string& what) {
  if (!j.is_number()) parse_fail(what + " must be a number");
  return j.get<double>();
}

inline Vec2 get_vec2(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) parse_fail(what + " must be a 2-element array");
  return {get_number(j[0], what), get_number(j[1], what)};
}

/// A number, or [re, du].
inline Dual get_dual(const json& j, const std::string& what) {
  if (j.is_number()) return Dual(j.get<double>());
  if (j.is_array() && j.size() == 2) return Dual(get_number(j[0], what), get_number(j[1], what));
  parse_fail(what + " must be a number or [re, du]");
}

/// [x, y] real, or [[xr, xd], [yr, yd]].
inline DualVec2 get_dual_vec(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) parse_fail(what + " must be a 2-element array");
  return DualVec2(get_dual(j[0], what), get_dual(j[1], what));
}

/// Coefficients c0, c1, ... (a bare number is a constant).
inline Polynomial get_polynomial(const json& j, const std::string& what) {
  if (j.is_number()) return Polynomial({j.get<double>()});
  if (!j.is_array()) parse_fail(what + " must be an array of coefficients");
  std::vector<double> c;
  for (const json& x : j) c.push_back(get_number(x, what));
  return Polynomial(std::move(c));
}

inline Domain get_domain(const json& doc) {
  if (!doc.contains("domain")) parse_fail("missing \"domain\"");
  const Vec2 d = get_vec2(doc["domain"], "domain");
  return make_domain(d.x, d.y);
}

// ---------------------------------------------------------------------------
// Catalog families.

enum class FamilyGeometry { Equiaffine, Lorentz };

struct FamilyInfo {
  FamilyGeometry geometry;
  std::set<std::string> keys;
};

inline const std::map<std::string, FamilyInfo>& family_table() {
  static const std::map<std::string, FamilyInfo> table = {
      {"flat", {FamilyGeometry::Equiaffine, {"c0", "c1", "c2", "beta0"}}},
      {"pure-dual", {FamilyGeometry::Equiaffine, {"m", "c0", "c1", "c2", "beta0"}}},
      {"elliptic", {FamilyGeometry::Equiaffine, {"r", "c0", "c1", "beta0"}}},
      {"hyperbolic", {FamilyGeometry::Equiaffine, {"r", "c0", "c1", "beta0"}}},
      {"lclass", {FamilyGeometry::Lorentz, {"r", "m", "n", "beta0", "causal"}}},
      {"kappa-real-only", {FamilyGeometry::Lorentz, {"theta", "m", "causal"}}},
      {"lightlike", {FamilyGeometry::Lorentz, {"p", "v", "w", "f", "beta0"}}},
      {"straight-line", {FamilyGeometry::Lorentz, {"p", "v", "w", "f", "beta0"}}},
  };
  return table;
}

inline const FamilyInfo& family_info(const std::string& family) {
  const auto it = family_table().find(family);
  if (it == family_table().end()) throw Error(ErrorCode::BadParams, "unknown family '" + family + "'");
  return it->second;
}

namespace detail {

class Params {
 public:
  Params(const json& j, const std::set<std::string>& allowed, const std::string& family) : j_(j) {
    if (!j_.is_object()) parse_fail("\"params\" must be an object");
    for (const auto& [key, value] : j_.items()) {
      if (!allowed.count(key)) throw Error(ErrorCode::BadParams, "unknown parameter '" + key + "' for " + family);
    }
  }

  double number(const std::string& k, double fallback = 0.0) const {
    return j_.contains(k) ? get_number(j_[k], k) : fallback;
  }
  double required(const std::string& k) const {
    if (!j_.contains(k)) throw Error(ErrorCode::BadParams, "missing parameter '" + k + "'");
    return get_number(j_[k], k);
  }
  Vec2 vec(const std::string& k, Vec2 fallback = {}) const { return j_.contains(k) ? get_vec2(j_[k], k) : fallback; }
  Polynomial poly(const std::string& k, Polynomial fallback = {}) const {
    return j_.contains(k) ? get_polynomial(j_[k], k) : fallback;
  }
  Causal causal() const {
    if (!j_.contains("causal")) return Causal::Spacelike;
    const json& c = j_["causal"];
    if (c == "spacelike") return Causal::Spacelike;
    if (c == "timelike") return Causal::Timelike;
    throw Error(ErrorCode::BadParams, "causal must be \"spacelike\" or \"timelike\"");
  }

 private:
  const json& j_;
};

}  // namespace detail

inline CurveSpec make_catalog_curve(const std::string& family, const json& params, Domain domain) {
  const detail::Params p(params, family_info(family).keys, family);
  if (family_info(family).geometry == FamilyGeometry::Equiaffine) {
    EquiaffineFamilyParams e;
    e.family = family == "flat"        ? EquiaffineFamily::Flat
               : family == "pure-dual" ? EquiaffineFamily::PureDual
               : family == "elliptic"  ? EquiaffineFamily::Elliptic
                                       : EquiaffineFamily::Hyperbolic;
    if (e.family == EquiaffineFamily::Elliptic || e.family == EquiaffineFamily::Hyperbolic) e.r_alpha = p.required("r");
    if (e.family == EquiaffineFamily::PureDual) e.m = p.required("m");
    e.c0 = p.number("c0");
    e.c1 = p.number("c1");
    e.c2 = p.number("c2");
    e.beta0 = p.vec("beta0");
    return make_family(e, domain);
  }
  LorentzFamilyParams l;
  if (family == "lclass") {
    l.family = LorentzFamily::ConstCurvature;
    l.r = p.required("r");
    l.m = p.number("m");
    l.n = p.number("n");
    l.beta0 = p.vec("beta0");
    l.causal = p.causal();
  } else if (family == "kappa-real-only") {
    l.family = LorentzFamily::KappaRealOnly;
    l.theta = ThetaSpec::polynomial(p.poly("theta", Polynomial({0.0, 1.0})));
    l.m = p.required("m");
    l.causal = p.causal();
  } else {
    l.family = family == "lightlike" ? LorentzFamily::Lightlike : LorentzFamily::StraightLine;
    l.p = p.vec("p");
    l.v = p.vec("v", family == "lightlike" ? Vec2{1.0, 1.0} : Vec2{1.0, 0.0});
    l.w = p.vec("w", family == "lightlike" ? l.v : Vec2{0.0, 1.0});
    l.f = p.poly("f");
    l.beta0 = p.vec("beta0");
  }
  return make_lorentz_family(l, domain);
}

// ---------------------------------------------------------------------------
// Transforms.

struct Transform {
  FamilyGeometry kind = FamilyGeometry::Equiaffine;
  Mat2D a = Mat2D::from_real(Mat2{1, 0, 0, 1});
  DualVec2 b;
};

inline Transform parse_transform(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind")) parse_fail("transform needs \"kind\"");
  Transform t;
  const json& kind = doc["kind"];
  if (kind == "equiaffine") {
    t.kind = FamilyGeometry::Equiaffine;
  } else if (kind == "lorentz") {
    t.kind = FamilyGeometry::Lorentz;
  } else {
    parse_fail("transform kind must be \"equiaffine\" or \"lorentz\"");
  }
  if (doc.contains("b")) t.b = get_dual_vec(doc["b"], "b");
  if (doc.contains("A")) {
    const json& a = doc["A"];
    if (!a.is_array() || a.size() != 2 || !a[0].is_array() || a[0].size() != 2 || !a[1].is_array() ||
        a[1].size() != 2) {
      parse_fail("A must be a 2x2 array");
    }
    t.a = Mat2D{get_dual(a[0][0], "A"), get_dual(a[0][1], "A"), get_dual(a[1][0], "A"), get_dual(a[1][1], "A")};
  } else if (t.kind == FamilyGeometry::Lorentz) {
    const double phi = doc.contains("phi") ? get_number(doc["phi"], "phi") : 0.0;
    auto flag = [&](const char* k) {
      if (!doc.contains(k)) return false;
      if (!doc[k].is_boolean()) parse_fail(std::string(k) + " must be a boolean");
      return doc[k].get<bool>();
    };
    t.a = Mat2D::from_real(generate_isometry(phi, flag("reflectX"), flag("reflectY"), t.b).a);
  }
  return t;
}

inline CurveSpec apply_transform(const Transform& t, const CurveSpec& spec) {
  if (t.kind == FamilyGeometry::Equiaffine) return apply_equiaffine(t.a, t.b, spec);
  for (const Dual* e : {&t.a.a11, &t.a.a12, &t.a.a21, &t.a.a22}) {
    if (e->du() != 0.0) throw Error(ErrorCode::NotIsometry, "Lorentz isometries have a real linear part");
  }
  const Mat2 real{t.a.a11.re(), t.a.a12.re(), t.a.a21.re(), t.a.a22.re()};
  return apply_lorentz_isometry(LorentzIsometry{real, t.b}, spec);
}

// ---------------------------------------------------------------------------
// Curve documents.

inline CurveSpec parse_curve(const json& doc) {
  if (!doc.is_object()) parse_fail("curve document must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) parse_fail("missing \"kind\"");
  const std::string kind = doc["kind"].get<std::string>();
  const Domain domain = get_domain(doc);
  const json empty = json::object();
  const json& params = doc.contains("params") ? doc["params"] : empty;

  std::optional<CurveSpec> spec;
  if (kind == "catalog") {
    if (!doc.contains("family") || !doc["family"].is_string()) parse_fail("catalog curve needs \"family\"");
    spec = make_catalog_curve(doc["family"].get<std::string>(), params, domain);
  } else if (kind == "analytic") {
    const json& src = params.contains("alpha") ? params : doc;
    auto pair = [&](const char* k) -> std::array<Expr, 2> {
      if (!src.contains(k) || !src[k].is_array() || src[k].size() != 2 || !src[k][0].is_string() ||
          !src[k][1].is_string()) {
        parse_fail(std::string("analytic curve needs \"") + k + "\": [x, y] expression strings");
      }
      return {Expr::parse(src[k][0].get<std::string>()), Expr::parse(src[k][1].get<std::string>())};
    };
    bool symbolic = true;
    if (doc.contains("derivatives")) {
      const json& d = doc["derivatives"];
      if (d == "fd") {
        symbolic = false;
      } else if (d != "symbolic") {
        parse_fail("derivatives must be \"symbolic\" or \"fd\"");
      }
    }
    spec = make_expression_curve(pair("alpha"), pair("beta"), domain, symbolic);
  } else if (kind == "lightlike") {
    if (!params.contains("beta")) parse_fail("lightlike curve needs params.beta");
    json nested = params["beta"];
    if (nested.is_object() && !nested.contains("domain")) nested["domain"] = doc["domain"];
    const CurveSpec beta = parse_curve(nested).with_domain(domain);
    spec = make_lightlike(get_vec2(params.value("p", json::array({0.0, 0.0})), "p"),
                          get_vec2(params.contains("v") ? params["v"] : json(), "v"), beta);
  } else {
    parse_fail("unknown curve kind '" + kind + "'");
  }

  if (doc.contains("transforms")) {
    if (!doc["transforms"].is_array()) parse_fail("\"transforms\" must be an array");
    for (const json& t : doc["transforms"]) spec = apply_transform(parse_transform(t), *spec);
  }
  return *spec;
}

inline CurveSpec parse_curve_text(std::string_view text) { return parse_curve(parse_json(text)); }

/// Geometry a document is naturally read in: the family's for catalog
/// curves, Lorentz for lightlike curves, equiaffine otherwise.
inline FamilyGeometry natural_geometry(const json& doc) {
  const std::string kind = doc.value("kind", "");
  if (kind == "lightlike") return FamilyGeometry::Lorentz;
  if (kind == "catalog" && doc.contains("family") && doc["family"].is_string()) {
    return family_info(doc["family"].get<std::string>()).geometry;
  }
  return FamilyGeometry::Equiaffine;
}

// ---------------------------------------------------------------------------
// Sample tables.

struct SampleRow {
  double s = 0.0;
  Vec2 alpha;
  Vec2 beta;
  std::optional<Dual> kappa;
  std::optional<double> nondeg;
  std::optional<double> residual;
  std::optional<std::string> causal;
  std::string note;
};

inline const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> cols = {"s",        "alpha_x", "alpha_y", "beta_x",   "beta_y",
                                                "kappa_re", "kappa_du", "nondeg", "residual", "causal"};
  return cols;
}

/// Locale-independent, 12 significant digits.
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of −0
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

inline void write_csv(std::ostream& os, const std::vector<SampleRow>& rows) {
  const auto& cols = table_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (const SampleRow& r : rows) {
    os << format_number(r.s) << ',' << format_number(r.alpha.x) << ',' << format_number(r.alpha.y) << ','
       << format_number(r.beta.x) << ',' << format_number(r.beta.y) << ','
       << (r.kappa ? format_number(r.kappa->re()) : "") << ',' << (r.kappa ? format_number(r.kappa->du()) : "")
       << ',' << opt(r.nondeg) << ',' << opt(r.residual) << ',' << r.causal.value_or("") << '\n';
  }
}

inline json rows_to_json(const std::vector<SampleRow>& rows) {
  json out = json::object();
  out["columns"] = table_columns();
  json arr = json::array();
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  for (const SampleRow& r : rows) {
    json row = json::object();
    row["s"] = r.s;
    row["alpha_x"] = r.alpha.x;
    row["alpha_y"] = r.alpha.y;
    row["beta_x"] = r.beta.x;
    row["beta_y"] = r.beta.y;
    row["kappa_re"] = r.kappa ? json(r.kappa->re()) : json(nullptr);
    row["kappa_du"] = r.kappa ? json(r.kappa->du()) : json(nullptr);
    row["nondeg"] = opt(r.nondeg);
    row["residual"] = opt(r.residual);
    row["causal"] = opt(r.causal);
    if (!r.note.empty()) row["note"] = r.note;
    arr.push_back(std::move(row));
  }
  out["rows"] = std::move(arr);
  return out;
}

// ---------------------------------------------------------------------------
// Check reports.

inline json to_json(const CheckReport& r) {
  json j = json::object();
  j["check"] = r.check;
  j["seed"] = r.seed;
  j["tolerance"] = r.tolerance;
  j["maxError"] = r.max_error;
  j["passed"] = r.passed;
  json points = json::array();
  for (const CheckPoint& p : r.points) {
    json params = json::object();
    for (const auto& [k, v] : p.params) {
      std::visit([&, &key = k](const auto& x) { params[key] = x; }, v);
    }
    json pt = json::object();
    pt["params"] = std::move(params);
    pt["s"] = p.s ? json(*p.s) : json(nullptr);
    pt["error"] = p.error;
    if (!p.note.empty()) pt["note"] = p.note;
    points.push_back(std::move(pt));
  }
  j["points"] = std::move(points);
  return j;
}

}  // namespace dualcurve::io
