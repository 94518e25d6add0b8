#pragma once

// Equiaffine geometry of curves in D² under SL(2,D): non-degeneracy,
// arc-length admissibility, curvature, the κ_γ = κ_α system, and the
// constant-curvature families.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualcurve/curve.hpp"
#include "dualcurve/dual.hpp"
#include "dualcurve/numerics.hpp"

namespace dualcurve {

/// (α′, α″).
inline double nondegeneracy(const CurveJet& j) { return det(j.alpha(1), j.alpha(2)); }

/// (α′, β″) + (β′, α″); vanishes identically iff an equiaffine arc-length
/// reparametrization exists (for non-degenerate α).
inline double admissibility_residual(const CurveJet& j) {
  return det(j.alpha(1), j.beta(2)) + det(j.beta(1), j.alpha(2));
}

struct EquiaffineReport {
  double nondeg = 0.0;
  double admissibility_residual = 0.0;
  Dual kappa;
  double kappa_alpha = 0.0;
};

/// Pointwise invariants. kappa is assembled as κ_α + ε[(α″,β‴) + (β″,α‴)],
/// which equals det2(γ″,γ‴) and is the curvature once the jet is taken at
/// equiaffine arc length.
inline EquiaffineReport equiaffine_report(const CurveJet& j) {
  EquiaffineReport r;
  r.nondeg = nondegeneracy(j);
  r.admissibility_residual = admissibility_residual(j);
  r.kappa_alpha = det(j.alpha(2), j.alpha(3));
  r.kappa = Dual(r.kappa_alpha, det(j.alpha(2), j.beta(3)) + det(j.beta(2), j.alpha(3)));
  return r;
}

/// det2(γ″, γ‴), after checking (γ′, γ″) = 1 + 0ε within `tol`.
inline Dual equiaffine_curvature(const CurveJet& j, double tol = kDefaultTolerance) {
  const Dual speed = det2(j[1], j[2]);
  if (std::abs(speed.re() - 1.0) > tol || std::abs(speed.du()) > tol) {
    throw Error(ErrorCode::NotUnitSpeed, "(γ′,γ″) is not 1+0ε at t=" + std::to_string(j.t));
  }
  return det2(j[2], j[3]);
}

/// ŝ = ∫ (γ′,γ″)^{1/3} from t0 to t, by composite Simpson on both parts.
inline Dual equiaffine_arclength(const CurveSpec& spec, double t0, double t, std::optional<int> panels = {}) {
  const int n = panels ? *panels : default_panels(t0, t);
  auto integrand = [&](double u) {
    const CurveJet j = jet(spec, u);
    const Dual d = det2(j[1], j[2]);
    if (std::abs(d.re()) <= 1e-12) {
      throw Error(ErrorCode::DegeneratePoint, "(α′,α″) vanishes at t=" + std::to_string(u));
    }
    return cbrt_dual(d);
  };
  const double re = integrate([&](double u) { return integrand(u).re(); }, t0, t, n);
  const double du = integrate([&](double u) { return integrand(u).du(); }, t0, t, n);
  return {re, du};
}

struct AdmissibilityScan {
  double max_abs_residual = 0.0;
  double min_abs_nondeg = 0.0;
  double scale = 0.0;
  int orientation = 0;  ///< sign of (α′,α″), 0 if it changes sign or vanishes

  double tolerance() const { return 1e-7 * (1.0 + scale); }
  bool admissible() const { return max_abs_residual <= tolerance(); }
};

inline AdmissibilityScan scan_admissibility(const CurveSpec& spec, int samples = 200) {
  AdmissibilityScan scan;
  scan.min_abs_nondeg = std::numeric_limits<double>::infinity();
  bool seen_pos = false;
  bool seen_neg = false;
  for (double t : sample_grid(spec.domain(), samples)) {
    const CurveJet j = jet(spec, t);
    const double nd = nondegeneracy(j);
    scan.max_abs_residual = std::max(scan.max_abs_residual, std::abs(admissibility_residual(j)));
    scan.min_abs_nondeg = std::min(scan.min_abs_nondeg, std::abs(nd));
    for (std::size_t k = 0; k < 3; ++k) scan.scale = std::max(scan.scale, j[k].max_abs());
    seen_pos |= nd > 0.0;
    seen_neg |= nd < 0.0;
  }
  if (scan.min_abs_nondeg > 1e-12 && seen_pos != seen_neg) scan.orientation = seen_pos ? 1 : -1;
  return scan;
}

namespace detail {

/// Curve u ↦ γ(−u), used to flip a negatively oriented real part.
inline CurveSpec reverse_parameter(const CurveSpec& spec) {
  CurveSpec::PointFn point = [f = spec.point_fn()](double u) { return f(-u); };
  CurveSpec::JetFn analytic;
  if (spec.has_analytic_jet()) {
    analytic = [g = spec.jet_fn()](double u) {
      CurveJet j = g(-u);
      j.t = u;
      j.d[1] = Dual(-1.0) * j.d[1];
      j.d[3] = Dual(-1.0) * j.d[3];
      return j;
    };
  }
  const Domain d = spec.domain();
  return {spec.kind(), Domain{-d.hi, -d.lo}, std::move(point), std::move(analytic), spec.label()};
}

/// Cumulative real arc length s(t) = lo + ∫_lo^t (α′,α″)^{1/3} with an
/// inverse built on invert_monotone.
class ArcLengthTable {
 public:
  explicit ArcLengthTable(CurveSpec spec) : spec_(std::move(spec)) {
    const Domain d = spec_.domain();
    const int cells = std::max(64, static_cast<int>(std::ceil(256.0 * d.length())));
    nodes_ = sample_grid(d, cells);
    cumulative_.assign(nodes_.size(), d.lo);
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
      cumulative_[i] = cumulative_[i - 1] + cell_integral(nodes_[i - 1], nodes_[i]);
    }
  }

  double s_lo() const { return cumulative_.front(); }
  double s_hi() const { return cumulative_.back(); }
  const CurveSpec& spec() const { return spec_; }

  double speed(double t) const { return std::cbrt(nondegeneracy(jet(spec_, t))); }

  double s_of_t(double t) const {
    const std::size_t i = cell_of(nodes_, t);
    return cumulative_[i] + cell_integral(nodes_[i], t);
  }

  double t_of_s(double s) const {
    const std::size_t i = cell_of(cumulative_, s);
    const double tol = 1e-15 * (1.0 + std::abs(s));
    return invert_monotone([this](double t) { return s_of_t(t); }, s, nodes_[i], nodes_[i + 1], tol);
  }

 private:
  static std::size_t cell_of(const std::vector<double>& v, double x) {
    auto it = std::upper_bound(v.begin(), v.end(), x);
    std::size_t i = it == v.begin() ? 0 : static_cast<std::size_t>(it - v.begin()) - 1;
    return std::min(i, v.size() - 2);
  }

  double cell_integral(double a, double b) const {
    if (a == b) return 0.0;
    return integrate([this](double t) { return speed(t); }, a, b, 8);
  }

  CurveSpec spec_;
  std::vector<double> nodes_;
  std::vector<double> cumulative_;
};

}  // namespace detail

/// Reparametrizes by real equiaffine arc length s(t) = lo + ∫(α′,α″)^{1/3},
/// so a curve already at unit speed maps to itself. Negatively oriented
/// real parts are handled by the parameter reversal t ↦ −t first.
/// γ and its first two derivatives in s are exact chain-rule expressions;
/// the third is a fourth-order difference of the exact second derivative.
inline CurveSpec reparametrize_equiaffine(const CurveSpec& spec, int samples = 200) {
  const AdmissibilityScan scan = scan_admissibility(spec, samples);
  if (scan.orientation == 0) {
    throw Error(ErrorCode::DegeneratePoint, "(α′,α″) vanishes or changes sign on the domain");
  }
  if (!scan.admissible()) {
    throw Error(ErrorCode::NotAdmissible, "max |(α′,β″)+(β′,α″)| = " + std::to_string(scan.max_abs_residual) +
                                              " exceeds " + std::to_string(scan.tolerance()));
  }
  const CurveSpec oriented = scan.orientation > 0 ? spec : detail::reverse_parameter(spec);
  auto table = std::make_shared<const detail::ArcLengthTable>(oriented);

  // Exact value, first and second derivative in s.
  auto low_jet = [table](double s) {
    const double t = table->t_of_s(s);
    const CurveJet g = jet(table->spec(), t);
    const double d = nondegeneracy(g);
    const double sigma = std::cbrt(d);
    const double dsigma = det(g.alpha(1), g.alpha(3)) / (3.0 * sigma * sigma);
    const double tp = 1.0 / sigma;
    const double tpp = -dsigma / (sigma * sigma * sigma);
    CurveJet j;
    j.t = s;
    j.d[0] = g[0];
    j.d[1] = detail::combine({{tp, g[1]}});
    j.d[2] = detail::combine({{tp * tp, g[2]}, {tpp, g[1]}});
    return j;
  };

  CurveSpec::JetFn analytic = [table, low_jet](double s) {
    CurveJet j = low_jet(s);
    const double lo = table->s_lo();
    const double hi = table->s_hi();
    const double h = 1e-3 * (1.0 + std::abs(s));
    auto d2 = [&](double x) { return low_jet(x).d[2]; };
    if (s - 2 * h >= lo && s + 2 * h <= hi) {
      j.d[3] = detail::combine({{-1.0 / (12 * h), d2(s + 2 * h)},
                                {8.0 / (12 * h), d2(s + h)},
                                {-8.0 / (12 * h), d2(s - h)},
                                {1.0 / (12 * h), d2(s - 2 * h)}});
    } else {
      const double dir = (s - 2 * h < lo) ? 1.0 : -1.0;
      const double k = dir / (12 * h);
      j.d[3] = detail::combine({{-25 * k, j.d[2]},
                                {48 * k, d2(s + dir * h)},
                                {-36 * k, d2(s + dir * 2 * h)},
                                {16 * k, d2(s + dir * 3 * h)},
                                {-3 * k, d2(s + dir * 4 * h)}});
    }
    return j;
  };
  CurveSpec::PointFn point = [table](double s) { return table->spec().point(table->t_of_s(s)); };
  return {CurveKind::Derived, Domain{table->s_lo(), table->s_hi()}, std::move(point), std::move(analytic),
          spec.label().empty() ? "reparametrized" : spec.label() + "/reparametrized"};
}

// ---------------------------------------------------------------------------
// κ_γ = κ_α characterization: β′ = x·α′ + y·α″ with
//   x = −y′/2,   y‴ + 4κ_α y′ + 2κ_α′ y = 0.

class KkSolution {
 public:
  explicit KkSolution(OdeSolution ode) : ode_(std::move(ode)) {}

  const OdeSolution& ode() const { return ode_; }
  double y(double s) const { return ode_.state_at(s)[0]; }
  double x(double s) const { return -0.5 * ode_.state_at(s)[1]; }

 private:
  OdeSolution ode_;
};

inline KkSolution solve_kk_system(const RealFn& kappa_alpha, const RealFn& dkappa_alpha, Ode3State init, double s0,
                                  double s1, double h = 1e-3) {
  LinearOde3 ode{[](double) { return 0.0; }, [kappa_alpha](double s) { return 4.0 * kappa_alpha(s); },
                 [dkappa_alpha](double s) { return 2.0 * dkappa_alpha(s); }};
  return KkSolution(solve_linear_ode3(std::move(ode), init, s0, s1, h));
}

/// Initial state reproducing β = (c0s²+c1s, −c1s²/2+c2s) + β0 over the
/// parabola (s, s²/2), taken at s0.
inline Ode3State flat_kk_initial_state(double c0, double c1, double c2, double s0) {
  return {-2 * c0 * s0 * s0 - 2 * c1 * s0 + c2, -4 * c0 * s0 - 2 * c1, -4 * c0};
}

/// Builds γ = α + εβ with β′ = xα′ + yα″ and β(s0) = β0. `alpha` must carry
/// analytic derivatives at equiaffine arc length (so α‴ = −κ_α α′).
inline CurveSpec reconstruct_kk_curve(const CurveSpec& alpha, RealFn kappa_alpha, RealFn dkappa_alpha,
                                      const KkSolution& sol, Vec2 beta0) {
  if (!alpha.has_analytic_jet()) throw Error(ErrorCode::BadParams, "real part needs analytic derivatives");
  const double s0 = std::max(alpha.domain().lo, sol.ode().s0());
  const double s1 = std::min(alpha.domain().hi, sol.ode().s1());
  const int panels = default_panels(s0, s1);
  struct Shared {
    CurveSpec alpha;
    RealFn kappa, dkappa;
    KkSolution sol;
  };
  auto sh = std::make_shared<const Shared>(Shared{alpha, std::move(kappa_alpha), std::move(dkappa_alpha), sol});

  auto beta_derivs = [sh](double s, const CurveJet& a) {
    const Ode3State st = sh->sol.ode().state_at(s);
    const double y = st[0], y1 = st[1], y2 = st[2];
    const double k = sh->kappa(s), dk = sh->dkappa(s);
    const double x = -0.5 * y1, x1 = -0.5 * y2, x2 = 2.0 * k * y1 + dk * y;
    const Vec2 a1 = a.alpha(1), a2 = a.alpha(2), a3 = a.alpha(3);
    const Vec2 a4 = -dk * a1 - k * a2;
    std::array<Vec2, 3> b;
    b[0] = x * a1 + y * a2;
    b[1] = x1 * a1 + (x + y1) * a2 + y * a3;
    b[2] = x2 * a1 + (2 * x1 + y2) * a2 + (x + 2 * y1) * a3 + y * a4;
    return b;
  };
  auto beta_at = [sh, beta_derivs, s0, panels](double s) {
    if (s == s0) return Vec2{};
    const int n = panels;  // fixed count keeps β smooth in s
    auto comp = [&](int c) {
      return integrate(
          [&](double u) {
            const Vec2 b1 = beta_derivs(u, sh->alpha.analytic_jet(u))[0];
            return c == 0 ? b1.x : b1.y;
          },
          s0, s, n);
    };
    return Vec2{comp(0), comp(1)};
  };
  CurveSpec::JetFn analytic = [sh, beta_derivs, beta_at, beta0](double s) {
    const CurveJet a = sh->alpha.analytic_jet(s);
    const auto b = beta_derivs(s, a);
    CurveJet j;
    j.t = s;
    j.d[0] = DualVec2(a.alpha(0), beta0 + beta_at(s));
    for (std::size_t k = 1; k < 4; ++k) j.d[k] = DualVec2(a.alpha(k), b[k - 1]);
    return j;
  };
  CurveSpec::PointFn point = [sh, beta_at, beta0](double s) {
    return DualVec2(sh->alpha.point(s).real(), beta0 + beta_at(s));
  };
  return {CurveKind::Derived, Domain{s0, s1}, std::move(point), std::move(analytic), "kk-reconstruction"};
}

// ---------------------------------------------------------------------------
// Constant-curvature families.

enum class EquiaffineFamily { Flat, PureDual, Elliptic, Hyperbolic };

struct EquiaffineFamilyParams {
  EquiaffineFamily family = EquiaffineFamily::Flat;
  double r_alpha = 0.0;
  double m = 0.0;
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  Vec2 beta0{};
};

inline std::string to_string(EquiaffineFamily f) {
  switch (f) {
    case EquiaffineFamily::Flat: return "flat";
    case EquiaffineFamily::PureDual: return "pure-dual";
    case EquiaffineFamily::Elliptic: return "elliptic";
    case EquiaffineFamily::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

/// The constant κ_γ a family is built to have: 0, εm, r_α, r_α.
inline Dual expected_curvature(const EquiaffineFamilyParams& p) {
  switch (p.family) {
    case EquiaffineFamily::Flat: return {0.0, 0.0};
    case EquiaffineFamily::PureDual: return {0.0, p.m};
    case EquiaffineFamily::Elliptic:
    case EquiaffineFamily::Hyperbolic: return {p.r_alpha, 0.0};
  }
  return {};
}

inline void validate(const EquiaffineFamilyParams& p) {
  for (double v : {p.r_alpha, p.m, p.c0, p.c1, p.c2, p.beta0.x, p.beta0.y}) {
    if (!std::isfinite(v)) throw Error(ErrorCode::BadParams, "family parameters must be finite");
  }
  switch (p.family) {
    case EquiaffineFamily::Flat: break;
    case EquiaffineFamily::PureDual:
      if (p.m == 0.0) throw Error(ErrorCode::BadParams, "pure-dual family needs m != 0");
      break;
    case EquiaffineFamily::Elliptic:
      if (!(p.r_alpha > 0.0)) throw Error(ErrorCode::BadParams, "elliptic family needs r_alpha > 0");
      break;
    case EquiaffineFamily::Hyperbolic:
      if (!(p.r_alpha < 0.0)) throw Error(ErrorCode::BadParams, "hyperbolic family needs r_alpha < 0");
      break;
  }
}

/// Closed-form (α, β) with exact derivatives, in equiaffine arc length.
inline CurveSpec make_family(const EquiaffineFamilyParams& p, Domain domain) {
  validate(p);
  CurveSpec::JetFn fn;
  const double c0 = p.c0, c1 = p.c1, c2 = p.c2, m = p.m;
  const Vec2 b0 = p.beta0;
  switch (p.family) {
    case EquiaffineFamily::Flat:
    case EquiaffineFamily::PureDual: {
      const double mm = p.family == EquiaffineFamily::Flat ? 0.0 : m;
      fn = [=](double s) {
        const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
        CurveJet j;
        j.t = s;
        j.d[0] = DualVec2(Vec2{s, 0.5 * s2}, b0 + Vec2{-mm * s3 / 6 + c0 * s2 + c1 * s, -mm * s4 / 24 - 0.5 * c1 * s2 + c2 * s});
        j.d[1] = DualVec2(Vec2{1.0, s}, Vec2{-0.5 * mm * s2 + 2 * c0 * s + c1, -mm * s3 / 6 - c1 * s + c2});
        j.d[2] = DualVec2(Vec2{0.0, 1.0}, Vec2{-mm * s + 2 * c0, -0.5 * mm * s2 - c1});
        j.d[3] = DualVec2(Vec2{0.0, 0.0}, Vec2{-mm, -mm * s});
        return j;
      };
      break;
    }
    case EquiaffineFamily::Elliptic: {
      const double k = std::sqrt(p.r_alpha);
      fn = [=](double s) {
        const double sn = std::sin(k * s), cs = std::cos(k * s);
        const double u = c0 * cs + c1 * sn;   // β_x − β0_x
        const double w = -c0 * sn + c1 * cs;  // k·(β_y − β0_y)
        CurveJet j;
        j.t = s;
        j.d[0] = DualVec2(Vec2{sn / k, -cs / (k * k)}, b0 + Vec2{u, w / k});
        j.d[1] = DualVec2(Vec2{cs, sn / k}, Vec2{k * w, -u});
        j.d[2] = DualVec2(Vec2{-k * sn, cs}, Vec2{-k * k * u, -k * w});
        j.d[3] = DualVec2(Vec2{-k * k * cs, -k * sn}, Vec2{-k * k * k * w, k * k * u});
        return j;
      };
      break;
    }
    case EquiaffineFamily::Hyperbolic: {
      const double k = std::sqrt(-p.r_alpha);
      fn = [=](double s) {
        const double sh = std::sinh(k * s), ch = std::cosh(k * s);
        const double u = c0 * ch + c1 * sh;  // β_x − β0_x
        const double w = c0 * sh + c1 * ch;  // −k·(β_y − β0_y)
        CurveJet j;
        j.t = s;
        j.d[0] = DualVec2(Vec2{sh / k, ch / (k * k)}, b0 + Vec2{u, -w / k});
        j.d[1] = DualVec2(Vec2{ch, sh / k}, Vec2{k * w, -u});
        j.d[2] = DualVec2(Vec2{k * sh, ch}, Vec2{k * k * u, -k * w});
        j.d[3] = DualVec2(Vec2{k * k * ch, k * sh}, Vec2{k * k * k * w, -k * k * u});
        return j;
      };
      break;
    }
  }
  return make_jet_curve(CurveKind::Catalog, domain, std::move(fn), to_string(p.family));
}

/// Linear part A of the area-preserving map with β = Aα + β0 between the
/// real and dual parts of the elliptic (r_α > 0) or hyperbolic (r_α < 0)
/// family; det A = −r_α(c0² ± c1²).
inline Mat2 real_to_dual_map(double r_alpha, double c0, double c1) {
  if (r_alpha == 0.0) throw Error(ErrorCode::BadParams, "map is defined for r_alpha != 0");
  const double k = std::sqrt(std::abs(r_alpha));
  return {c1 * k, -c0 * r_alpha, -c0, -c1 * k};
}

// ---------------------------------------------------------------------------
// Conic checks.

struct ConicFit {
  double a = 0.0;
  double x0 = 0.0;
  double y0 = 0.0;
  double max_residual = 0.0;
};

/// Least-squares fit of ((x−x0)² + r(y−y0)²)/a² = 1. Expanding gives the
/// linear model x² + r·y² = 2x0·x + 2r·y0·y + (a² − x0² − r·y0²), solved by
/// normal equations on centred, rescaled samples.
inline ConicFit quadratic_form_check(std::span<const Vec2> samples, double r_alpha) {
  if (samples.size() < 5) throw Error(ErrorCode::BadParams, "need at least 5 samples");
  if (r_alpha == 0.0 || !std::isfinite(r_alpha)) throw Error(ErrorCode::BadParams, "r_alpha must be nonzero");
  Vec2 mean{};
  for (Vec2 p : samples) mean = mean + p;
  mean = mean / static_cast<double>(samples.size());
  double spread = 0.0;
  for (Vec2 p : samples) spread = std::max(spread, (p - mean).max_abs());
  if (spread == 0.0) throw Error(ErrorCode::SingularFit, "all samples coincide");

  std::array<std::array<double, 4>, 3> m{};  // augmented normal matrix
  for (Vec2 p : samples) {
    const Vec2 q = (p - mean) / spread;
    const std::array<double, 3> row{q.x, q.y, 1.0};
    const double rhs = q.x * q.x + r_alpha * q.y * q.y;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) m[i][k] += row[i] * row[k];
      m[i][3] += row[i] * rhs;
    }
  }
  double largest = 0.0;
  for (std::size_t i = 0; i < 3; ++i) largest = std::max(largest, std::abs(m[i][i]));
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < 3; ++i) {
      if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
    }
    if (std::abs(m[piv][col]) <= 1e-12 * largest) {
      throw Error(ErrorCode::SingularFit, "sample configuration does not determine the conic");
    }
    std::swap(m[col], m[piv]);
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == col) continue;
      const double f = m[i][col] / m[col][col];
      for (std::size_t k = col; k < 4; ++k) m[i][k] -= f * m[col][k];
    }
  }
  const double p = m[0][3] / m[0][0], q = m[1][3] / m[1][1], c = m[2][3] / m[2][2];
  const double x0 = 0.5 * p, y0 = 0.5 * q / r_alpha;
  const double a2 = c + x0 * x0 + r_alpha * y0 * y0;
  if (!(a2 > 0.0)) throw Error(ErrorCode::SingularFit, "fitted a² is not positive");

  ConicFit fit;
  fit.a = std::sqrt(a2) * spread;
  fit.x0 = x0 * spread + mean.x;
  fit.y0 = y0 * spread + mean.y;
  const double a2_world = fit.a * fit.a;
  for (Vec2 s : samples) {
    const double dx = s.x - fit.x0, dy = s.y - fit.y0;
    fit.max_residual = std::max(fit.max_residual, std::abs((dx * dx + r_alpha * dy * dy) / a2_world - 1.0));
  }
  return fit;
}

/// max |r·x² + r²·y² − 1| for the real part of the elliptic/hyperbolic family.
inline double real_conic_residual(std::span<const Vec2> samples, double r_alpha) {
  double worst = 0.0;
  for (Vec2 p : samples) worst = std::max(worst, std::abs(r_alpha * p.x * p.x + r_alpha * r_alpha * p.y * p.y - 1.0));
  return worst;
}

// ---------------------------------------------------------------------------
// SL(2,D) action.

/// γ̃ = Aγ + b; requires det A = 1 + 0ε within `tol`.
inline CurveSpec apply_equiaffine(const Mat2D& a, const DualVec2& b, const CurveSpec& spec, double tol = 1e-12) {
  const Dual d = a.determinant();
  if (std::abs(d.re() - 1.0) > tol || std::abs(d.du()) > tol) {
    throw Error(ErrorCode::NotUnimodular, "det A is not 1+0ε");
  }
  return transform_affine(spec, a, b);
}

/// L·U with unit-diagonal triangular factors; det = 1 exactly in D.
inline Mat2D unimodular_from_triangular(Dual lower, Dual upper) {
  const Mat2D l{Dual(1.0), Dual(0.0), lower, Dual(1.0)};
  const Mat2D u{Dual(1.0), upper, Dual(0.0), Dual(1.0)};
  return l * u;
}

}  // namespace dualcurve
