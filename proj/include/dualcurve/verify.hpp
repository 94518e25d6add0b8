#pragma once

// Oracles and named, seeded check suites. Every check compares a library
// result against a computation that avoids the code path under test:
// symbolic derivatives of the printed formulas, finite differences of
// positions, closed-form ODE solutions, or plain algebraic identities.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dualcurve/curve.hpp"
#include "dualcurve/equiaffine.hpp"
#include "dualcurve/expression.hpp"
#include "dualcurve/lorentz.hpp"

namespace dualcurve {

// ---------------------------------------------------------------------------
// Random streams.

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the usual xor-shift-multiply
/// finaliser. uniform01 takes the top 53 bits.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  bool coin() { return (next() & 1U) != 0; }
  /// Magnitude in [lo, hi] with a random sign.
  double signed_uniform(double lo, double hi) {
    const double v = uniform(lo, hi);
    return coin() ? -v : v;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Per-check stream: seed xor FNV-1a(checkId).
inline SplitMix64 check_stream(std::uint64_t seed, std::string_view check_id) {
  return SplitMix64(seed ^ fnv1a64(check_id));
}

// ---------------------------------------------------------------------------
// Finite-difference curvature oracle.

enum class Geometry { Equiaffine, Lorentz };

inline constexpr double kOracleStep = 1e-3;

/// Curvature from positions alone: Richardson-extrapolated stencils, then
/// det2(γ″,γ‴) (equiaffine, s taken as arc length) or sqrt(−δ⟨γ″,γ″⟩).
/// Needs s ± 4h inside the domain.
inline Dual fd_curvature_oracle(const CurveSpec& spec, double s, double h = kOracleStep,
                                Geometry geometry = Geometry::Equiaffine) {
  require_in_domain(spec, s);
  require_stencil_room(spec, s, 4.0 * h);
  const CurveJet j = fd_jet_richardson(spec.point_fn(), s, h);
  if (geometry == Geometry::Equiaffine) return det2(j[2], j[3]);
  constexpr double zero = 1e-6;
  if (j[2].max_abs() <= zero) throw Error(ErrorCode::StraightPoint, "γ″ = 0 at s=" + std::to_string(s));
  if (j.alpha(2).max_abs() <= zero) {
    throw Error(ErrorCode::CurvatureUndefined, "α″ = 0 but γ″ != 0 at s=" + std::to_string(s));
  }
  const double delta = lorentz_dot(j.alpha(1), j.alpha(1)) > 0.0 ? 1.0 : -1.0;
  try {
    return sqrt_dual(Dual(-delta) * lorentz_inner(j[2], j[2]));
  } catch (const Error&) {
    throw Error(ErrorCode::CurvatureUndefined, "−δ⟨γ″,γ″⟩ is not positive at s=" + std::to_string(s));
  }
}

/// γ′ by Richardson differences of positions and γ″ by Richardson
/// differences of the velocity evaluator: one differentiation fewer than
/// fd_jet_richardson for the second derivative, so roundoff stays near
/// eps/h instead of eps/h². Reaches s ± 4h.
inline CurveJet fd_jet_from_velocity(const CurveSpec& spec, double s, double h = kOracleStep) {
  if (!spec.has_analytic_jet()) throw Error(ErrorCode::BadParams, "velocity evaluator required");
  const CurveJet pos = fd_jet_richardson(spec.point_fn(), s, h);
  const CurveSpec::PointFn velocity = [&spec](double t) { return spec.analytic_jet(t).d[1]; };
  const CurveJet vel = fd_jet_richardson(velocity, s, h);
  CurveJet j = pos;
  j.d[2] = vel.d[1];
  j.d[3] = vel.d[2];
  return j;
}

// ---------------------------------------------------------------------------
// Symbolic oracles: the printed closed forms as expressions, differentiated
// by the expression engine rather than by hand.

namespace symbolic {

inline std::string lit(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return "(" + std::string(buf, res.ptr) + ")";
}

inline CurveSpec curve(const std::string& ax, const std::string& ay, const std::string& bx, const std::string& by,
                       Domain d) {
  return make_expression_curve({Expr::parse(ax), Expr::parse(ay)}, {Expr::parse(bx), Expr::parse(by)}, d);
}

/// (sin s, −cos s) + ε(cos s, sin s).
inline CurveSpec worked_example(Domain d) { return curve("sin(s)", "-cos(s)", "cos(s)", "sin(s)", d); }

inline CurveSpec equiaffine_family(const EquiaffineFamilyParams& p, Domain d) {
  const std::string c0 = lit(p.c0), c1 = lit(p.c1), c2 = lit(p.c2);
  const std::string bx0 = lit(p.beta0.x), by0 = lit(p.beta0.y);
  switch (p.family) {
    case EquiaffineFamily::Flat:
    case EquiaffineFamily::PureDual: {
      const std::string m = lit(p.family == EquiaffineFamily::Flat ? 0.0 : p.m);
      return curve("s", "s^2/2", "-" + m + "*s^3/6 + " + c0 + "*s^2 + " + c1 + "*s + " + bx0,
                   "-" + m + "*s^4/24 - " + c1 + "/2*s^2 + " + c2 + "*s + " + by0, d);
    }
    case EquiaffineFamily::Elliptic: {
      const std::string k = lit(std::sqrt(p.r_alpha)), r = lit(p.r_alpha);
      const std::string ks = k + "*s";
      return curve("sin(" + ks + ")/" + k, "-cos(" + ks + ")/" + r,
                   c0 + "*cos(" + ks + ") + " + c1 + "*sin(" + ks + ") + " + bx0,
                   "-" + c0 + "/" + k + "*sin(" + ks + ") + " + c1 + "/" + k + "*cos(" + ks + ") + " + by0, d);
    }
    case EquiaffineFamily::Hyperbolic: {
      const std::string k = lit(std::sqrt(-p.r_alpha)), r = lit(p.r_alpha);
      const std::string ks = k + "*s";
      return curve("sinh(" + ks + ")/" + k, "-cosh(" + ks + ")/" + r,
                   c0 + "*cosh(" + ks + ") + " + c1 + "*sinh(" + ks + ") + " + bx0,
                   "-" + c0 + "/" + k + "*sinh(" + ks + ") - " + c1 + "/" + k + "*cosh(" + ks + ") + " + by0, d);
    }
  }
  throw Error(ErrorCode::BadParams, "unknown family");
}

/// Constant-curvature Lorentz family; timelike swaps sinh and cosh.
inline CurveSpec lclass(const LorentzFamilyParams& p, Domain d) {
  const bool tl = p.causal == Causal::Timelike;
  const std::string r = lit(p.r), m = lit(p.m), n = lit(p.n);
  const std::string sh = "sinh(s/" + r + ")", ch = "cosh(s/" + r + ")";
  const std::string& first = tl ? ch : sh;
  const std::string& second = tl ? sh : ch;
  const std::string f = "(" + m + "*s + " + n + ")*" + r;
  return curve(r + "*" + first, r + "*" + second,
               "-" + m + "*" + r + "^2*" + first + " + " + f + "*" + second + " + " + lit(p.beta0.x),
               "-" + m + "*" + r + "^2*" + second + " + " + f + "*" + first + " + " + lit(p.beta0.y), d);
}

}  // namespace symbolic

// ---------------------------------------------------------------------------
// Reports.

using ParamValue = std::variant<double, std::string>;

/// One sampled parameter set: its worst error over the grid and where.
struct CheckPoint {
  std::vector<std::pair<std::string, ParamValue>> params;
  std::optional<double> s;
  double error = 0.0;
  std::string note;

  CheckPoint& param(std::string key, ParamValue v) {
    params.emplace_back(std::move(key), std::move(v));
    return *this;
  }

  void observe(std::optional<double> at, double err) {
    if (std::isnan(err)) err = std::numeric_limits<double>::infinity();
    if (!seen_ || err > error) {
      error = err;
      s = at;
      seen_ = true;
    }
  }

  void observe(double err) { observe(std::nullopt, err); }

  void fail(const std::string& why) {
    error = std::numeric_limits<double>::infinity();
    note = why;
    seen_ = true;
  }

 private:
  bool seen_ = false;
};

struct CheckReport {
  std::string check;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_error = 0.0;
  bool passed = false;
  std::vector<CheckPoint> points;
};

struct CheckDef {
  std::string id;
  std::string description;
  double tolerance;
  std::function<std::vector<CheckPoint>(SplitMix64&)> run;
};

namespace checks {

inline double dual_err(Dual a, Dual b) { return std::max(std::abs(a.re() - b.re()), std::abs(a.du() - b.du())); }
inline double vec_err(const DualVec2& a, const DualVec2& b) { return (a - b).max_abs(); }

/// Grid of n points spanning [lo, hi].
inline std::vector<double> grid(double lo, double hi, int n) { return sample_grid(Domain{lo, hi}, n - 1); }

/// Runs body(point), turning library errors into a failed point.
template <class Body>
void guarded(CheckPoint& pt, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    pt.fail(e.what());
  }
}

inline double nonzero(SplitMix64& rng, double lo, double hi) {
  double v = 0.0;
  do {
    v = rng.uniform(lo, hi);
  } while (std::abs(v) < 0.05);
  return v;
}

inline EquiaffineFamilyParams random_equiaffine(SplitMix64& rng, EquiaffineFamily family) {
  EquiaffineFamilyParams p;
  p.family = family;
  p.c0 = rng.uniform(-2, 2);
  p.c1 = rng.uniform(-2, 2);
  p.c2 = rng.uniform(-2, 2);
  p.beta0 = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  if (family == EquiaffineFamily::PureDual) p.m = nonzero(rng, -2, 2);
  if (family == EquiaffineFamily::Elliptic) p.r_alpha = rng.uniform(0.25, 4);
  if (family == EquiaffineFamily::Hyperbolic) p.r_alpha = -rng.uniform(0.25, 4);
  return p;
}

inline void record(CheckPoint& pt, const EquiaffineFamilyParams& p) {
  pt.param("family", to_string(p.family));
  if (p.family == EquiaffineFamily::Elliptic || p.family == EquiaffineFamily::Hyperbolic) pt.param("r", p.r_alpha);
  if (p.family == EquiaffineFamily::PureDual) pt.param("m", p.m);
  pt.param("c0", p.c0).param("c1", p.c1);
  if (p.family == EquiaffineFamily::Flat || p.family == EquiaffineFamily::PureDual) pt.param("c2", p.c2);
  pt.param("beta0x", p.beta0.x).param("beta0y", p.beta0.y);
}

inline LorentzFamilyParams random_lclass(SplitMix64& rng, Causal causal, bool negative_radius = false) {
  LorentzFamilyParams p;
  p.family = LorentzFamily::ConstCurvature;
  p.causal = causal;
  p.r = rng.uniform(0.25, 4) * (negative_radius ? -1.0 : 1.0);
  p.m = rng.uniform(-2, 2);
  p.n = rng.uniform(-2, 2);
  p.beta0 = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return p;
}

/// θ of degree 1..4 with coefficients in [−2, 2], rejected until |θ′| ≥ 0.25
/// and |θ| ≤ 5 on [−1, 1] so that κ_α stays away from zero.
inline Polynomial random_theta(SplitMix64& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int degree = 1 + static_cast<int>(rng.next() % 4);
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (double& x : c) x = rng.uniform(-2, 2);
    const Polynomial th(c);
    const Polynomial d = th.derivative();
    bool ok = true;
    for (double s : grid(-1, 1, 201)) ok = ok && std::abs(d(s)) >= 0.25 && std::abs(th(s)) <= 5.0;
    if (ok) return th;
  }
  return Polynomial({0.0, 1.0});
}

inline LorentzFamilyParams kappa_real_only_params(const Polynomial& theta, double m, Causal causal) {
  LorentzFamilyParams p;
  p.family = LorentzFamily::KappaRealOnly;
  p.causal = causal;
  p.m = m;
  p.theta = ThetaSpec::polynomial(theta);
  return p;
}

inline LorentzFamilyParams random_kappa_real_only(SplitMix64& rng, Causal causal, Polynomial* theta_out = nullptr) {
  const Polynomial th = random_theta(rng);
  const double m = 2.0 * (1.0 - rng.uniform01());  // (0, 2]
  if (theta_out) *theta_out = th;
  return kappa_real_only_params(th, m, causal);
}

inline void record(CheckPoint& pt, const LorentzFamilyParams& p, const Polynomial* theta = nullptr) {
  pt.param("family", to_string(p.family));
  pt.param("causal", p.causal == Causal::Spacelike ? "spacelike" : "timelike");
  if (p.family == LorentzFamily::ConstCurvature) {
    pt.param("r", p.r).param("m", p.m).param("n", p.n).param("beta0x", p.beta0.x).param("beta0y", p.beta0.y);
  } else if (p.family == LorentzFamily::KappaRealOnly) {
    pt.param("m", p.m);
    if (theta) {
      for (std::size_t i = 0; i < theta->coeffs().size(); ++i) pt.param("theta" + std::to_string(i), theta->coeffs()[i]);
    }
  }
}

inline const Domain kUnit{-1.0, 1.0};

// --- worked example ---------------------------------------------------------

inline std::vector<CheckPoint> exeq_analytic(SplitMix64&) {
  CheckPoint pt;
  pt.param("curve", "worked-example");
  guarded(pt, [&] {
    const CurveSpec c = symbolic::worked_example(Domain{0.0, 2 * std::numbers::pi});
    for (double s : grid(0, 2 * std::numbers::pi, 100)) {
      const CurveJet j = jet(c, s);
      const EquiaffineReport r = equiaffine_report(j);
      double e = dual_err(det2(j[1], j[2]), Dual(1.0));
      e = std::max(e, dual_err(equiaffine_curvature(j), Dual(1.0)));
      e = std::max(e, dual_err(r.kappa, Dual(1.0)));
      e = std::max(e, std::abs(r.admissibility_residual));
      pt.observe(s, e);
    }
  });
  return {pt};
}

inline std::vector<CheckPoint> exeq_fd_oracle(SplitMix64&) {
  CheckPoint pt;
  pt.param("curve", "worked-example").param("h", kOracleStep);
  guarded(pt, [&] {
    const double pad = 0.1;
    const CurveSpec c = symbolic::worked_example(Domain{-pad, 2 * std::numbers::pi + pad}).without_analytic_jet();
    for (double s : grid(0, 2 * std::numbers::pi, 100)) {
      const CurveJet j = fd_jet_richardson(c.point_fn(), s, kOracleStep);
      double e = dual_err(det2(j[1], j[2]), Dual(1.0));
      e = std::max(e, dual_err(fd_curvature_oracle(c, s, kOracleStep, Geometry::Equiaffine), Dual(1.0)));
      pt.observe(s, e);
    }
  });
  return {pt};
}

/// (sin t/2, −cos t/2) + ε(cos t/2, sin t/2) reparametrized numerically must
/// coincide with the worked example in s = t/2.
inline std::vector<CheckPoint> exeq_reparametrized(SplitMix64&) {
  CheckPoint pt;
  pt.param("curve", "worked-example-t");
  guarded(pt, [&] {
    const CurveSpec t_curve =
        symbolic::curve("sin(t/2)", "-cos(t/2)", "cos(t/2)", "sin(t/2)", Domain{0.0, 4 * std::numbers::pi});
    const CurveSpec s_curve = reparametrize_equiaffine(t_curve);
    const CurveSpec exact = symbolic::worked_example(Domain{-1.0, 8.0});
    const Domain d = s_curve.domain();
    pt.observe(std::abs(d.hi - 2 * std::numbers::pi));
    for (double s : grid(d.lo, d.hi, 100)) {
      const CurveJet j = jet(s_curve, s);
      const CurveJet x = jet(exact, s);
      double e = dual_err(det2(j[1], j[2]), Dual(1.0));
      e = std::max(e, dual_err(det2(j[2], j[3]), Dual(1.0)));
      for (std::size_t k = 0; k < 4; ++k) e = std::max(e, vec_err(j[k], x[k]));
      pt.observe(s, e);
    }
  });
  return {pt};
}

// --- equiaffine families ------------------------------------------------------

/// Worst deviation over the grid of (γ′,γ″) from 1, κ from `expected`, the
/// admissibility residual from 0, and the constructor jet from the symbolic
/// jet of the printed formulas.
inline void family_errors(CheckPoint& pt, const EquiaffineFamilyParams& p, Dual expected, int n = 50) {
  const CurveSpec built = make_family(p, kUnit);
  const CurveSpec printed = symbolic::equiaffine_family(p, kUnit);
  for (double s : grid(kUnit.lo, kUnit.hi, n)) {
    const CurveJet a = jet(built, s);
    const CurveJet b = jet(printed, s);
    double e = 0.0;
    for (const CurveJet* j : {&a, &b}) {
      e = std::max(e, dual_err(det2((*j)[1], (*j)[2]), Dual(1.0)));
      e = std::max(e, dual_err(equiaffine_curvature(*j, 1e-6), expected));
      e = std::max(e, std::abs(admissibility_residual(*j)));
    }
    for (std::size_t k = 0; k < 4; ++k) e = std::max(e, vec_err(a[k], b[k]));
    pt.observe(s, e);
  }
}

inline std::vector<CheckPoint> family_suite(SplitMix64& rng, EquiaffineFamily family, int count) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < count; ++i) {
    const EquiaffineFamilyParams p = random_equiaffine(rng, family);
    CheckPoint& pt = out.emplace_back();
    record(pt, p);
    const Dual expected = family == EquiaffineFamily::PureDual ? Dual(0.0, p.m)
                          : family == EquiaffineFamily::Flat   ? Dual(0.0)
                                                               : Dual(p.r_alpha);
    guarded(pt, [&] { family_errors(pt, p, expected); });
  }
  return out;
}

inline std::vector<CheckPoint> flat_fd(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const EquiaffineFamilyParams p = random_equiaffine(rng, EquiaffineFamily::Flat);
    CheckPoint& pt = out.emplace_back();
    record(pt, p);
    guarded(pt, [&] {
      const CurveSpec c = make_family(p, Domain{-1.5, 1.5}).without_analytic_jet();
      for (double s : grid(-1, 1, 50)) pt.observe(s, dual_err(fd_curvature_oracle(c, s), Dual(0.0)));
    });
  }
  return out;
}

inline std::vector<CheckPoint> flat_beta_conic(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const EquiaffineFamilyParams p = random_equiaffine(rng, EquiaffineFamily::Flat);
    CheckPoint& pt = out.emplace_back();
    record(pt, p);
    const double expected = -(p.c1 * p.c1 + 2 * p.c0 * p.c2);
    guarded(pt, [&] {
      const CurveSpec built = make_family(p, kUnit);
      const CurveSpec printed = symbolic::equiaffine_family(p, kUnit);
      for (double s : grid(-1, 1, 50)) {
        const CurveJet a = jet(built, s);
        const CurveJet b = jet(printed, s);
        pt.observe(s, std::max(std::abs(det(a.beta(1), a.beta(2)) - expected),
                               std::abs(det(b.beta(1), b.beta(2)) - expected)));
      }
    });
  }
  return out;
}

// --- κ_γ = κ_α system ---------------------------------------------------------

inline std::vector<CheckPoint> kk_flat(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 10; ++i) {
    const double c0 = rng.uniform(-2, 2), c1 = rng.uniform(-2, 2), c2 = rng.uniform(-2, 2);
    const Vec2 b0{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    CheckPoint& pt = out.emplace_back();
    pt.param("c0", c0).param("c1", c1).param("c2", c2).param("beta0x", b0.x).param("beta0y", b0.y);
    guarded(pt, [&] {
      const double s0 = -1.0, s1 = 1.0;
      auto printed = [&](double s) { return Vec2{c0 * s * s + c1 * s, -0.5 * c1 * s * s + c2 * s} + b0; };
      const CurveSpec alpha = make_family(EquiaffineFamilyParams{}, Domain{s0, s1});
      const RealFn zero = [](double) { return 0.0; };
      const KkSolution sol = solve_kk_system(zero, zero, flat_kk_initial_state(c0, c1, c2, s0), s0, s1);
      const CurveSpec rebuilt = reconstruct_kk_curve(alpha, zero, zero, sol, printed(s0));
      for (double s : grid(s0, s1, 50)) {
        const CurveJet j = jet(rebuilt, s);
        double e = (j.beta(0) - printed(s)).max_abs();
        e = std::max(e, dual_err(det2(j[2], j[3]), Dual(0.0)));
        pt.observe(s, e);
      }
    });
  }
  return out;
}

/// κ_α = 1 on (sin s, −cos s). The ODE solution is compared with the closed
/// form A + B sin 2s + C cos 2s, and the dual part of κ_γ is rebuilt with y‴
/// differentiated numerically from y″ rather than taken from the ODE.
inline std::vector<CheckPoint> kk_const(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 10; ++i) {
    const Ode3State init{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    CheckPoint& pt = out.emplace_back();
    pt.param("y0", init[0]).param("y1", init[1]).param("y2", init[2]);
    guarded(pt, [&] {
      const double s0 = -1.0, s1 = 1.0;
      EquiaffineFamilyParams ap;
      ap.family = EquiaffineFamily::Elliptic;
      ap.r_alpha = 1.0;
      const CurveSpec alpha = make_family(ap, Domain{s0, s1});
      const RealFn one = [](double) { return 1.0; };
      const RealFn zero = [](double) { return 0.0; };
      const KkSolution sol = solve_kk_system(one, zero, init, s0, s1);

      const double sn = std::sin(2 * s0), cs = std::cos(2 * s0);
      const double bb = -init[2] / 4 * sn + init[1] / 2 * cs;
      const double cc = -init[2] / 4 * cs - init[1] / 2 * sn;
      const double aa = init[0] + init[2] / 4;
      auto y_exact = [&](double s) { return aa + bb * std::sin(2 * s) + cc * std::cos(2 * s); };

      const double h = 1e-3;
      auto y2 = [&](double s) { return sol.ode().state_at(s)[2]; };
      for (double s : grid(s0 + 2 * h, s1 - 2 * h, 50)) {
        const Ode3State st = sol.ode().state_at(s);
        const double y3 = (-y2(s + 2 * h) + 8 * y2(s + h) - 8 * y2(s - h) + y2(s - 2 * h)) / (12 * h);
        const double x = -0.5 * st[1], x1 = -0.5 * st[2], x2 = -0.5 * y3;
        const CurveJet a = jet(alpha, s);
        const Vec2 a1 = a.alpha(1), a2 = a.alpha(2), a3 = a.alpha(3), a4 = -1.0 * a2;
        const Vec2 b2 = x1 * a1 + (x + st[1]) * a2 + st[0] * a3;
        const Vec2 b3 = x2 * a1 + (2 * x1 + st[2]) * a2 + (x + 2 * st[1]) * a3 + st[0] * a4;
        const double dual = det(a2, b3) + det(b2, a3);
        pt.observe(s, std::max(std::abs(dual), std::abs(st[0] - y_exact(s))));
      }
    });
  }
  return out;
}

// --- real-to-dual maps and conics ---------------------------------------------

struct MapSample {
  EquiaffineFamilyParams p;
  Mat2 a;
};

/// Elliptic: r(c0² + c1²) = 1. Hyperbolic: |r|(c0² − c1²) = 1 with |c0| > |c1|.
inline MapSample random_map_sample(SplitMix64& rng, EquiaffineFamily family) {
  MapSample out;
  EquiaffineFamilyParams& p = out.p;
  p.family = family;
  p.beta0 = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  if (family == EquiaffineFamily::Elliptic) {
    p.r_alpha = rng.uniform(0.25, 4);
    const double phi = rng.uniform(0, 2 * std::numbers::pi);
    p.c0 = std::cos(phi) / std::sqrt(p.r_alpha);
    p.c1 = std::sin(phi) / std::sqrt(p.r_alpha);
  } else {
    p.r_alpha = -rng.uniform(0.25, 4);
    const double psi = rng.uniform(-1.5, 1.5);
    const double sign = rng.coin() ? 1.0 : -1.0;
    p.c0 = sign * std::cosh(psi) / std::sqrt(-p.r_alpha);
    p.c1 = std::sinh(psi) / std::sqrt(-p.r_alpha);
  }
  out.a = real_to_dual_map(p.r_alpha, p.c0, p.c1);
  return out;
}

inline std::vector<CheckPoint> map_check(SplitMix64& rng, EquiaffineFamily family) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 10; ++i) {
    const MapSample ms = random_map_sample(rng, family);
    CheckPoint& pt = out.emplace_back();
    record(pt, ms.p);
    guarded(pt, [&] {
      const CurveSpec built = make_family(ms.p, kUnit);
      const CurveSpec printed = symbolic::equiaffine_family(ms.p, kUnit);
      for (double s : grid(-1, 1, 50)) {
        double e = 0.0;
        for (const CurveSpec* c : {&built, &printed}) {
          const DualVec2 g = c->point(s);
          e = std::max(e, (g.dual() - (ms.a * g.real() + ms.p.beta0)).max_abs());
        }
        pt.observe(s, e);
      }
    });
  }
  return out;
}

inline std::vector<CheckPoint> map_det_check(SplitMix64& rng, EquiaffineFamily family, double expected) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 10; ++i) {
    const MapSample ms = random_map_sample(rng, family);
    CheckPoint& pt = out.emplace_back();
    record(pt, ms.p);
    if (family == EquiaffineFamily::Hyperbolic) pt.param("normalisation", "|r|(c0^2-c1^2)=1");
    pt.observe(std::abs(ms.a.determinant() - expected));
  }
  return out;
}

inline std::vector<CheckPoint> conics(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 10; ++i) {
    const EquiaffineFamily family = i % 2 == 0 ? EquiaffineFamily::Elliptic : EquiaffineFamily::Hyperbolic;
    const MapSample ms = random_map_sample(rng, family);
    const EquiaffineFamilyParams& p = ms.p;
    CheckPoint& pt = out.emplace_back();
    record(pt, p);
    guarded(pt, [&] {
      const CurveSpec c = make_family(p, kUnit);
      std::vector<Vec2> alpha, beta;
      for (double s : grid(-1, 1, 60)) {
        const DualVec2 g = c.point(s);
        alpha.push_back(g.real());
        beta.push_back(g.dual());
      }
      const ConicFit fit = quadratic_form_check(beta, p.r_alpha);
      const double a2 = family == EquiaffineFamily::Elliptic ? p.c0 * p.c0 + p.c1 * p.c1 : p.c0 * p.c0 - p.c1 * p.c1;
      double e = fit.max_residual;
      e = std::max(e, std::abs(fit.a * fit.a - a2));
      e = std::max(e, std::max(std::abs(fit.x0 - p.beta0.x), std::abs(fit.y0 - p.beta0.y)));
      e = std::max(e, real_conic_residual(alpha, p.r_alpha));
      pt.observe(e);
    });
  }
  return out;
}

// --- SL(2,D) invariance -------------------------------------------------------

inline std::vector<CheckPoint> sl2d(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  constexpr EquiaffineFamily kFamilies[] = {EquiaffineFamily::Flat, EquiaffineFamily::PureDual,
                                            EquiaffineFamily::Elliptic, EquiaffineFamily::Hyperbolic};
  for (int i = 0; i < 50; ++i) {
    const EquiaffineFamilyParams p = random_equiaffine(rng, kFamilies[i % 4]);
    const Dual lower(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Dual upper(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const DualVec2 b(Vec2{rng.uniform(-1, 1), rng.uniform(-1, 1)}, Vec2{rng.uniform(-1, 1), rng.uniform(-1, 1)});
    CheckPoint& pt = out.emplace_back();
    record(pt, p);
    pt.param("lower_re", lower.re()).param("lower_du", lower.du());
    pt.param("upper_re", upper.re()).param("upper_du", upper.du());
    guarded(pt, [&] {
      const CurveSpec c = make_family(p, kUnit);
      const CurveSpec moved = apply_equiaffine(unimodular_from_triangular(lower, upper), b, c);
      for (double s : grid(-1, 1, 20)) {
        const CurveJet j0 = jet(c, s);
        const CurveJet j1 = jet(moved, s);
        double e = dual_err(equiaffine_curvature(j1, 1e-8), equiaffine_curvature(j0, 1e-8));
        e = std::max(e, std::abs(admissibility_residual(j1)));
        pt.observe(s, e);
      }
    });
  }
  return out;
}

// --- Lorentz ------------------------------------------------------------------

/// Alternates constant-curvature and κ_γ = κ_α families over both causal types.
inline std::pair<LorentzFamilyParams, Polynomial> random_lorentz(SplitMix64& rng, int i) {
  const Causal causal = (i / 2) % 2 == 0 ? Causal::Spacelike : Causal::Timelike;
  Polynomial theta;
  if (i % 2 == 0) return {random_lclass(rng, causal), theta};
  LorentzFamilyParams p = random_kappa_real_only(rng, causal, &theta);
  return {p, theta};
}

inline const Domain kLorentzDomain{-1.0, 1.0};

inline std::vector<CheckPoint> ltnk_identities(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const auto [p, theta] = random_lorentz(rng, i);
    CheckPoint& pt = out.emplace_back();
    record(pt, p, &theta);
    guarded(pt, [&] {
      const CurveSpec c = make_lorentz_family(p, kLorentzDomain);
      for (double s : grid(-1, 1, 20)) {
        const FrenetData f = frenet(jet(c, s));
        const double delta = causal_character(jet(c, s).alpha(1)) == CausalClass::Spacelike ? 1.0 : -1.0;
        double e = std::abs(f.delta - delta);
        e = std::max(e, dual_err(lorentz_inner(f.T, f.T), Dual(f.delta)));
        e = std::max(e, dual_err(lorentz_inner(f.N, f.N), Dual(-f.delta)));
        e = std::max(e, dual_err(lorentz_inner(f.T, f.N), Dual(0.0)));
        pt.observe(s, e);
      }
    });
  }
  return out;
}

/// Printed decomposition formulas (from the real-part frame, analytic jets)
/// against the dual-vector definition applied to finite-difference jets.
inline std::vector<CheckPoint> ltnk_formulas(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const auto [p, theta] = random_lorentz(rng, i);
    CheckPoint& pt = out.emplace_back();
    record(pt, p, &theta);
    guarded(pt, [&] {
      const CurveSpec c = make_lorentz_family(p, kLorentzDomain);
      for (double s : grid(-0.5, 0.5, 20)) {
        const FrenetData printed = frenet_from_real_part(jet(c, s));
        const FrenetData exact = frenet(jet(c, s));
        const FrenetData fd = frenet(fd_jet_from_velocity(c, s), 1e-6);
        double e = 0.0;
        for (const FrenetData* other : {&exact, &fd}) {
          e = std::max(e, vec_err(printed.T, other->T));
          e = std::max(e, vec_err(printed.N, other->N));
          e = std::max(e, dual_err(printed.kappa, other->kappa));
        }
        pt.observe(s, e);
      }
    });
  }
  return out;
}

/// Dual part of κ_γ against m. With `negative`, the radius is negative and
/// the measured dual part is −m: the curve is a reflection (of y when
/// spacelike, of x when timelike) of the (−r, −m, −n) curve, also checked.
inline std::vector<CheckPoint> lclass_dual(SplitMix64& rng, bool negative) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const Causal causal = i % 2 == 0 ? Causal::Spacelike : Causal::Timelike;
    LorentzFamilyParams p = random_lclass(rng, causal, negative);
    if (negative) p.beta0 = {};
    CheckPoint& pt = out.emplace_back();
    record(pt, p);
    guarded(pt, [&] {
      const CurveSpec built = make_lorentz_family(p, kLorentzDomain);
      const CurveSpec printed = symbolic::lclass(p, kLorentzDomain);
      std::optional<CurveSpec> mirror;
      if (negative) {
        LorentzFamilyParams q = p;
        q.r = -p.r;
        q.m = -p.m;
        q.n = -p.n;
        const bool tl = p.causal == Causal::Timelike;
        mirror = apply_lorentz_isometry(generate_isometry(0.0, tl, !tl, DualVec2{}),
                                        make_lorentz_family(q, kLorentzDomain));
      }
      const double expected = negative ? -p.m : p.m;
      for (double s : grid(-1, 1, 20)) {
        double e = 0.0;
        for (const CurveSpec* c : {&built, &printed}) e = std::max(e, std::abs(frenet(jet(*c, s)).kappa.du() - expected));
        if (mirror) e = std::max(e, vec_err(built.point(s), mirror->point(s)));
        pt.observe(s, e);
      }
    });
  }
  return out;
}

inline std::vector<CheckPoint> lclass_real(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const Causal causal = i % 2 == 0 ? Causal::Spacelike : Causal::Timelike;
    const LorentzFamilyParams p = random_lclass(rng, causal, (i / 2) % 2 == 1);
    CheckPoint& pt = out.emplace_back();
    record(pt, p);
    guarded(pt, [&] {
      const CurveSpec built = make_lorentz_family(p, kLorentzDomain);
      const CurveSpec printed = symbolic::lclass(p, kLorentzDomain);
      for (double s : grid(-1, 1, 20)) {
        double e = 0.0;
        for (const CurveSpec* c : {&built, &printed}) {
          e = std::max(e, std::abs(frenet(jet(*c, s)).kappa.re() - 1.0 / std::abs(p.r)));
        }
        pt.observe(s, e);
      }
    });
  }
  return out;
}

inline std::vector<CheckPoint> lclass_fd(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const Causal causal = i % 2 == 0 ? Causal::Spacelike : Causal::Timelike;
    const LorentzFamilyParams p = random_lclass(rng, causal);
    CheckPoint& pt = out.emplace_back();
    record(pt, p);
    guarded(pt, [&] {
      const CurveSpec c = make_lorentz_family(p, kLorentzDomain).without_analytic_jet();
      for (double s : grid(-0.5, 0.5, 20)) {
        pt.observe(s, dual_err(fd_curvature_oracle(c, s, kOracleStep, Geometry::Lorentz), Dual(1.0 / p.r, p.m)));
      }
    });
  }
  return out;
}

inline std::vector<CheckPoint> kk_lorentz(SplitMix64& rng, bool admissibility) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 10; ++i) {
    Polynomial theta;
    const LorentzFamilyParams base = random_kappa_real_only(rng, Causal::Spacelike, &theta);
    for (Causal causal : {Causal::Spacelike, Causal::Timelike}) {
      LorentzFamilyParams p = base;
      p.causal = causal;
      CheckPoint& pt = out.emplace_back();
      record(pt, p, &theta);
      guarded(pt, [&] {
        const CurveSpec c = make_lorentz_family(p, kLorentzDomain);
        for (double s : grid(-1, 1, 50)) {
          const CurveJet j = jet(c, s);
          pt.observe(s, admissibility ? std::abs(lorentz_admissibility(j)) : std::abs(frenet(j).kappa.du()));
        }
      });
    }
  }
  return out;
}

inline std::vector<CheckPoint> straight_line(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const double phi = rng.uniform(-1.5, 1.5);
    const bool timelike = rng.coin();
    LorentzFamilyParams p;
    p.family = LorentzFamily::StraightLine;
    p.v = timelike ? Vec2{std::sinh(phi), std::cosh(phi)} : Vec2{std::cosh(phi), std::sinh(phi)};
    p.w = rng.uniform(0.25, 2) * Vec2{p.v.y, p.v.x};
    p.p = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    p.beta0 = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
    const bool linear = i % 2 == 0;
    p.f = linear ? Polynomial({b, a}) : Polynomial({b, a, 1.0});
    CheckPoint& pt = out.emplace_back();
    pt.param("phi", phi).param("causal", timelike ? "timelike" : "spacelike");
    pt.param("f", linear ? "a*s+b" : "s^2+a*s+b").param("a", a).param("b", b);
    guarded(pt, [&] {
      const CurveSpec c = make_lorentz_family(p, kLorentzDomain);
      const bool by_profile = is_straight_line(p.f, kLorentzDomain);
      const bool by_curve = is_straight_line(c);
      pt.observe(by_profile == linear && by_curve == linear ? 0.0 : 1.0);
    });
  }
  return out;
}

inline std::vector<CheckPoint> lightlike(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const double lambda = rng.signed_uniform(0.25, 2);
    const double sign = rng.coin() ? 1.0 : -1.0;
    const bool parallel = i % 2 == 0;
    LorentzFamilyParams p;
    p.family = LorentzFamily::Lightlike;
    p.v = {lambda, sign * lambda};
    p.p = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    p.beta0 = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    p.w = parallel ? p.v : Vec2{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    p.f = Polynomial({rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)});
    CheckPoint& pt = out.emplace_back();
    pt.param("vx", p.v.x).param("vy", p.v.y).param("beta_parallel_v", parallel ? "yes" : "no");
    guarded(pt, [&] {
      const CurveSpec c = make_lorentz_family(p, kLorentzDomain);
      for (double s : grid(-1, 1, 20)) {
        const CurveJet j = jet(c, s);
        double e = std::abs(lorentz_dot(j.alpha(1), j.alpha(1)));
        if (causal_character(j.alpha(1)) != CausalClass::Lightlike) e = 1.0;
        if (parallel) e = std::max(e, dual_err(lorentz_inner(j[1], j[1]), Dual(0.0)));
        pt.observe(s, e);
      }
    });
  }
  return out;
}

inline std::vector<CheckPoint> isometry_invariance(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 50; ++i) {
    const auto [p, theta] = random_lorentz(rng, i);
    const double phi = rng.uniform(-1.5, 1.5);
    const bool rx = rng.coin(), ry = rng.coin();
    const DualVec2 b(Vec2{rng.uniform(-1, 1), rng.uniform(-1, 1)}, Vec2{rng.uniform(-1, 1), rng.uniform(-1, 1)});
    CheckPoint& pt = out.emplace_back();
    record(pt, p, &theta);
    pt.param("phi", phi).param("reflectX", rx ? "yes" : "no").param("reflectY", ry ? "yes" : "no");
    guarded(pt, [&] {
      const CurveSpec c = make_lorentz_family(p, kLorentzDomain);
      const CurveSpec moved = apply_lorentz_isometry(generate_isometry(phi, rx, ry, b), c);
      for (double s : grid(-1, 1, 10)) {
        const CurveJet j0 = jet(c, s), j1 = jet(moved, s);
        double e = dual_err(frenet(j1).kappa, frenet(j0).kappa);
        if (causal_character(j0.alpha(1)) != causal_character(j1.alpha(1))) e = 1.0;
        pt.observe(s, e);
      }
    });
  }
  return out;
}

/// Admissible curves with β′ ≠ 0 have β′ of the opposite causal type to α′.
inline std::vector<CheckPoint> causal_swap(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const auto [p, theta] = random_lorentz(rng, i);
    CheckPoint& pt = out.emplace_back();
    record(pt, p, &theta);
    guarded(pt, [&] {
      const CurveSpec c = make_lorentz_family(p, kLorentzDomain);
      for (double s : grid(-1, 1, 20)) {
        const CurveJet j = jet(c, s);
        if (j.beta(1).max_abs() <= 1e-9) continue;
        const CausalClass a = causal_character(j.alpha(1)), b = causal_character(j.beta(1));
        const bool swapped = (a == CausalClass::Spacelike && b == CausalClass::Timelike) ||
                             (a == CausalClass::Timelike && b == CausalClass::Spacelike);
        pt.observe(s, swapped ? 0.0 : 1.0);
      }
    });
  }
  return out;
}

/// T′ = κN and N′ = κT, derivatives by 5-point central differences of the frame.
inline std::vector<CheckPoint> frenet_odes(SplitMix64& rng) {
  std::vector<CheckPoint> out;
  for (int i = 0; i < 20; ++i) {
    const auto [p, theta] = random_lorentz(rng, i);
    CheckPoint& pt = out.emplace_back();
    record(pt, p, &theta);
    guarded(pt, [&] {
      const CurveSpec c = make_lorentz_family(p, kLorentzDomain);
      const double h = 1e-3;
      for (double s : grid(-0.9, 0.9, 20)) {
        const FrenetData f = frenet(jet(c, s));
        const FrenetData p1 = frenet(jet(c, s + h)), m1 = frenet(jet(c, s - h));
        const FrenetData p2 = frenet(jet(c, s + 2 * h)), m2 = frenet(jet(c, s - 2 * h));
        auto diff = [h](const DualVec2& a2, const DualVec2& a1, const DualVec2& b1, const DualVec2& b2) {
          return Dual(1.0 / (12 * h)) * (Dual(8.0) * (a1 - b1) - (a2 - b2));
        };
        const DualVec2 dt = diff(p2.T, p1.T, m1.T, m2.T);
        const DualVec2 dn = diff(p2.N, p1.N, m1.N, m2.N);
        pt.observe(s, std::max(vec_err(dt, f.kappa * f.N), vec_err(dn, f.kappa * f.T)));
      }
    });
  }
  return out;
}

}  // namespace checks

/// Registered checks in run order.
inline const std::vector<CheckDef>& registered_checks() {
  using namespace checks;
  static const std::vector<CheckDef> defs = {
      {"exeq-analytic", "worked example: (γ′,γ″) = 1 and κ = 1 from symbolic jets", 1e-10, exeq_analytic},
      {"exeq-fd-oracle", "worked example: κ = 1 from finite differences of positions", 1e-5, exeq_fd_oracle},
      {"exeq-reparametrized", "worked example recovered from its t = 2s parametrization", 1e-6, exeq_reparametrized},
      {"eqcurva0-flat-analytic", "flat family: κ = 0, unit speed, admissible, jets match printed form", 1e-10,
       [](SplitMix64& r) { return family_suite(r, EquiaffineFamily::Flat, 20); }},
      {"eqcurva0-flat-fd", "flat family: κ = 0 from finite differences", 1e-5, flat_fd},
      {"eqcurva0-beta-conic", "flat family: det(β′,β″) = −(c1² + 2c0c2)", 1e-10, flat_beta_conic},
      {"eqcurva01a-pure-dual", "pure-dual family: κ = εm", 1e-8,
       [](SplitMix64& r) { return family_suite(r, EquiaffineFamily::PureDual, 20); }},
      {"eqcurva01b-forced-m", "elliptic family: κ = r + 0ε", 1e-8,
       [](SplitMix64& r) { return family_suite(r, EquiaffineFamily::Elliptic, 20); }},
      {"eqcurva01c-forced-m", "hyperbolic family: κ = r + 0ε", 1e-8,
       [](SplitMix64& r) { return family_suite(r, EquiaffineFamily::Hyperbolic, 20); }},
      {"kk-system-flat", "κ_α = 0: ODE reconstruction reproduces the closed-form β", 1e-9, kk_flat},
      {"kk-system-const", "κ_α = 1: ODE matches closed form and κ_γ has no dual part", 1e-6, kk_const},
      {"eqcurva02-elliptic-map", "elliptic: β = Aα + β0", 1e-10,
       [](SplitMix64& r) { return map_check(r, EquiaffineFamily::Elliptic); }},
      {"eqcurva02-elliptic-det", "elliptic: det A = −1 when r(c0² + c1²) = 1", 1e-12,
       [](SplitMix64& r) { return map_det_check(r, EquiaffineFamily::Elliptic, -1.0); }},
      {"eqcurva02-hyperbolic-map", "hyperbolic: β = Aα + β0", 1e-10,
       [](SplitMix64& r) { return map_check(r, EquiaffineFamily::Hyperbolic); }},
      {"eqcurva02-hyperbolic-det", "hyperbolic: det A = +1 when |r|(c0² − c1²) = 1", 1e-12,
       [](SplitMix64& r) { return map_det_check(r, EquiaffineFamily::Hyperbolic, 1.0); }},
      {"eqcurva02-conics", "real and dual parts lie on the predicted conics", 1e-9, conics},
      {"sl2d-invariance", "κ invariant under random SL(2,D) actions and translations", 1e-8, sl2d},
      {"ltnk-identities", "⟨T,T⟩ = δ, ⟨N,N⟩ = −δ, ⟨T,N⟩ = 0", 1e-9, ltnk_identities},
      {"ltnk-formulas", "real-part decomposition of T, N, κ against finite differences", 1e-8, ltnk_formulas},
      {"lclass-dual-part", "constant-curvature family: dual part of κ = m", 1e-8,
       [](SplitMix64& r) { return lclass_dual(r, false); }},
      {"lclass-real-part", "constant-curvature family: real part of κ = 1/|r|", 1e-8, lclass_real},
      {"lclass-negative-radius", "negative radius: dual part −m, mirror of the (−r, −m, −n) curve", 1e-8,
       [](SplitMix64& r) { return lclass_dual(r, true); }},
      {"lclass-fd-oracle", "constant-curvature family: κ = 1/r + εm from finite differences", 1e-5, lclass_fd},
      {"kk-lorentz-real-only", "κ_γ = κ_α family: dual part of κ vanishes", 1e-8,
       [](SplitMix64& r) { return kk_lorentz(r, false); }},
      {"kk-lorentz-admissible", "κ_γ = κ_α family: ⟨α′,β′⟩ = 0", 1e-10,
       [](SplitMix64& r) { return kk_lorentz(r, true); }},
      {"straight-line-criterion", "profile lines: straight iff f″ = 0", 0.0, straight_line},
      {"lightlike-construction", "lightlike curves: ⟨α′,α′⟩ = 0, and ⟨γ′,γ′⟩ = 0 when β′ ∥ v", 1e-12, lightlike},
      {"lorentz-isometry-invariance", "κ and causal class preserved by random isometries", 1e-8,
       isometry_invariance},
      {"causal-swap", "β′ has the opposite causal character to α′", 0.0, causal_swap},
      {"frenet-odes", "T′ = κN and N′ = κT by central differences", 1e-6, frenet_odes},
  };
  return defs;
}

inline const CheckDef* find_check(std::string_view id) {
  for (const CheckDef& d : registered_checks()) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

inline CheckReport run_check(std::string_view id, std::uint64_t seed, std::optional<double> tolerance = {}) {
  const CheckDef* def = find_check(id);
  if (!def) throw Error(ErrorCode::UnknownCheck, "unknown check '" + std::string(id) + "'");
  SplitMix64 rng = check_stream(seed, def->id);
  CheckReport r;
  r.check = def->id;
  r.seed = seed;
  r.tolerance = tolerance.value_or(def->tolerance);
  r.points = def->run(rng);
  for (const CheckPoint& p : r.points) r.max_error = std::max(r.max_error, p.error);
  r.passed = r.max_error <= r.tolerance;
  return r;
}

inline std::vector<CheckReport> run_all(std::uint64_t seed, std::optional<double> tolerance = {}) {
  std::vector<CheckReport> out;
  for (const CheckDef& d : registered_checks()) out.push_back(run_check(d.id, seed, tolerance));
  return out;
}

}  // namespace dualcurve
