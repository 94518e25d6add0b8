#pragma once

// Curves in the dual Lorentz-Minkowski plane: causal character, Frenet
// apparatus, isometries and the constant-curvature families.

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "dualcurve/curve.hpp"
#include "dualcurve/dual.hpp"
#include "dualcurve/numerics.hpp"
#include "dualcurve/polynomial.hpp"

namespace dualcurve {

enum class CausalClass { Spacelike, Timelike, Lightlike, NullVectorZero };

inline std::string to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Lightlike: return "lightlike";
    case CausalClass::NullVectorZero: return "zero";
  }
  return "?";
}

inline constexpr double kLightlikeBand = 1e-12;

/// Sign of x² − y², with |x² − y²| ≤ band read as lightlike. The zero vector
/// is spacelike by convention and tagged separately.
inline CausalClass causal_character(Vec2 v, double band = kLightlikeBand) {
  if (v == Vec2{}) return CausalClass::NullVectorZero;
  const double q = lorentz_dot(v, v);
  if (std::abs(q) <= band) return CausalClass::Lightlike;
  return q > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

/// ⟨α′, β′⟩; vanishes identically iff an arc-length reparametrization exists.
inline double lorentz_admissibility(const CurveJet& j) { return lorentz_dot(j.alpha(1), j.beta(1)); }

struct FrenetData {
  DualVec2 T;
  DualVec2 N;
  Dual kappa;
  double delta = 1.0;
};

namespace detail {

inline double check_arclength(const CurveJet& j, double tol) {
  const double speed = lorentz_dot(j.alpha(1), j.alpha(1));
  if (std::abs(std::abs(speed) - 1.0) > tol) {
    throw Error(ErrorCode::NotUnitSpeed, "|⟨α′,α′⟩| != 1 at s=" + std::to_string(j.t));
  }
  if (std::abs(lorentz_admissibility(j)) > tol) {
    throw Error(ErrorCode::NotAdmissible, "⟨α′,β′⟩ != 0 at s=" + std::to_string(j.t));
  }
  return speed > 0.0 ? 1.0 : -1.0;
}

inline void check_curvature_defined(const CurveJet& j, double tol) {
  if (j.alpha(2).max_abs() > tol) return;
  if (j.beta(2).max_abs() > tol) {
    throw Error(ErrorCode::CurvatureUndefined, "α″ = 0 but γ″ != 0 at s=" + std::to_string(j.t));
  }
  throw Error(ErrorCode::StraightPoint, "γ″ = 0 at s=" + std::to_string(j.t));
}

}  // namespace detail

/// Frenet apparatus from the dual vectors directly: T = γ′, κ = |γ″|,
/// N = γ″/κ. Requires an arc-length parametrized jet.
inline FrenetData frenet(const CurveJet& j, double tol = kDefaultTolerance) {
  FrenetData f;
  f.delta = detail::check_arclength(j, tol);
  detail::check_curvature_defined(j, tol);
  const Dual norm2 = Dual(-f.delta) * lorentz_inner(j[2], j[2]);
  try {
    f.kappa = sqrt_dual(norm2);
  } catch (const Error&) {
    throw Error(ErrorCode::CurvatureUndefined, "−δ⟨γ″,γ″⟩ is not positive at s=" + std::to_string(j.t));
  }
  f.T = j[1];
  f.N = j[2] / f.kappa;
  return f;
}

/// The same apparatus assembled from the real-part frame {T_α, N_α}:
///   T = T_α + εβ′,  N = N_α + ε(δ⟨β″,T_α⟩/κ_α)T_α,  κ = κ_α − εδ⟨β″,N_α⟩.
inline FrenetData frenet_from_real_part(const CurveJet& j, double tol = kDefaultTolerance) {
  FrenetData f;
  f.delta = detail::check_arclength(j, tol);
  detail::check_curvature_defined(j, tol);
  const Vec2 ta = j.alpha(1);
  const double kappa_alpha = std::sqrt(std::abs(lorentz_dot(j.alpha(2), j.alpha(2))));
  if (!(kappa_alpha > 0.0)) throw Error(ErrorCode::CurvatureUndefined, "κ_α vanishes");
  const Vec2 na = j.alpha(2) / kappa_alpha;
  const Vec2 b2 = j.beta(2);
  f.T = DualVec2(ta, j.beta(1));
  f.N = DualVec2(na, (f.delta * lorentz_dot(b2, ta) / kappa_alpha) * ta);
  f.kappa = Dual(kappa_alpha, -f.delta * lorentz_dot(b2, na));
  return f;
}

// ---------------------------------------------------------------------------
// Isometries p ↦ Ap + b with AᵀMA = M, M = diag(1, −1).

inline constexpr Mat2 kMinkowskiMetric{1.0, 0.0, 0.0, -1.0};

struct LorentzIsometry {
  Mat2 a;
  DualVec2 b;
};

inline double isometry_defect(const Mat2& a) { return (a.transpose() * kMinkowskiMetric * a).max_abs_diff(kMinkowskiMetric); }

inline LorentzIsometry make_isometry(const Mat2& a, const DualVec2& b, double tol = 1e-12) {
  if (!(isometry_defect(a) <= tol)) throw Error(ErrorCode::NotIsometry, "AᵀMA != M");
  return {a, b};
}

/// A = diag(±1, ±1)·boost(φ).
inline LorentzIsometry generate_isometry(double phi, bool reflect_x, bool reflect_y, const DualVec2& b) {
  const double ch = std::cosh(phi), sh = std::sinh(phi);
  const Mat2 boost{ch, sh, sh, ch};
  const Mat2 reflect{reflect_x ? -1.0 : 1.0, 0.0, 0.0, reflect_y ? -1.0 : 1.0};
  return {reflect * boost, b};
}

inline CurveSpec apply_lorentz_isometry(const LorentzIsometry& f, const CurveSpec& spec, double tol = 1e-12) {
  if (!(isometry_defect(f.a) <= tol)) throw Error(ErrorCode::NotIsometry, "AᵀMA != M");
  return transform_affine(spec, Mat2D::from_real(f.a), f.b);
}

// ---------------------------------------------------------------------------
// Families.

enum class LorentzFamily { ConstCurvature, KappaRealOnly, Lightlike, StraightLine };
enum class Causal { Spacelike, Timelike };

inline std::string to_string(LorentzFamily f) {
  switch (f) {
    case LorentzFamily::ConstCurvature: return "lclass";
    case LorentzFamily::KappaRealOnly: return "kappa-real-only";
    case LorentzFamily::Lightlike: return "lightlike";
    case LorentzFamily::StraightLine: return "straight-line";
  }
  return "?";
}

/// Turning function θ with its first two derivatives.
struct ThetaSpec {
  RealFn theta;
  RealFn dtheta;
  RealFn ddtheta;

  static ThetaSpec polynomial(const Polynomial& p) {
    return {p, p.derivative(), p.derivative(2)};
  }

  /// θ(s) = ∫_{s_ref}^{s} κ(u) du with a fixed panel count.
  static ThetaSpec from_curvature(RealFn kappa, RealFn dkappa, double s_ref, int panels = 1024) {
    RealFn theta = [kappa, s_ref, panels](double s) { return integrate(kappa, s_ref, s, panels); };
    return {std::move(theta), kappa, std::move(dkappa)};
  }
};

struct LorentzFamilyParams {
  LorentzFamily family = LorentzFamily::ConstCurvature;
  Causal causal = Causal::Spacelike;
  double r = 1.0;
  double m = 0.0;
  double n = 0.0;
  Vec2 beta0{};
  ThetaSpec theta;  ///< KappaRealOnly
  Polynomial f;     ///< StraightLine / Lightlike profile
  Vec2 p{};         ///< base point (StraightLine, Lightlike)
  Vec2 v{1.0, 0.0};
  Vec2 w{0.0, 1.0};
};

namespace detail {

inline Vec2 swap_if(bool swap, Vec2 a) { return swap ? Vec2{a.y, a.x} : a; }

inline CurveSpec make_const_curvature(const LorentzFamilyParams& p, Domain domain) {
  if (p.r == 0.0 || !std::isfinite(p.r)) throw Error(ErrorCode::BadParams, "lclass family needs r != 0");
  const bool timelike = p.causal == Causal::Timelike;
  const double r = p.r, m = p.m, n = p.n;
  const Vec2 b0 = p.beta0;
  // E = (cosh, sinh), F = (sinh, cosh) for spacelike; swapped for timelike.
  // α = rF, α′ = E, E′ = F/r, F′ = E/r; β = −mr²F + frE + β0 with f = ms+n.
  auto fn = [=](double s) {
    const double ch = std::cosh(s / r), sh = std::sinh(s / r);
    const Vec2 e = swap_if(timelike, {ch, sh});
    const Vec2 f_ = swap_if(timelike, {sh, ch});
    const double f = m * s + n;
    CurveJet j;
    j.t = s;
    j.d[0] = DualVec2(r * f_, b0 + (-m * r * r) * f_ + (f * r) * e);
    j.d[1] = DualVec2(e, f * f_);
    j.d[2] = DualVec2(f_ / r, m * f_ + (f / r) * e);
    j.d[3] = DualVec2(e / (r * r), (2 * m / r) * e + (f / (r * r)) * f_);
    return j;
  };
  return make_jet_curve(CurveKind::Catalog, domain, fn, "lclass");
}

inline CurveSpec make_kappa_real_only(const LorentzFamilyParams& p, Domain domain) {
  if (!(p.m > 0.0)) throw Error(ErrorCode::BadParams, "kappa-real-only family needs m > 0");
  if (!p.theta.theta || !p.theta.dtheta || !p.theta.ddtheta) {
    throw Error(ErrorCode::BadParams, "kappa-real-only family needs a turning function");
  }
  const bool timelike = p.causal == Causal::Timelike;
  const double m = p.m;
  const ThetaSpec th = p.theta;
  const int panels = default_panels(0.0, std::max(std::abs(domain.lo), std::abs(domain.hi)));
  // C = ∫₀ˢ cosh θ, S = ∫₀ˢ sinh θ; fixed panels keep both smooth in s.
  auto integrals = [th, panels](double s) {
    if (s == 0.0) return Vec2{};
    const double c = integrate([&](double u) { return std::cosh(th.theta(u)); }, 0.0, s, panels);
    const double sn = integrate([&](double u) { return std::sinh(th.theta(u)); }, 0.0, s, panels);
    return Vec2{c, sn};
  };
  auto jet_fn = [=](double s) {
    const Vec2 cs = integrals(s);
    const double t = th.theta(s), t1 = th.dtheta(s), t2 = th.ddtheta(s);
    const Vec2 e{std::cosh(t), std::sinh(t)};
    const Vec2 f{std::sinh(t), std::cosh(t)};
    CurveJet j;
    j.t = s;
    // spacelike: α = (C, S), β = m(S, C); timelike swaps both.
    j.d[0] = DualVec2(swap_if(timelike, cs), m * swap_if(!timelike, cs));
    j.d[1] = DualVec2(swap_if(timelike, e), m * swap_if(timelike, f));
    j.d[2] = DualVec2(swap_if(timelike, t1 * f), m * swap_if(timelike, t1 * e));
    j.d[3] = DualVec2(swap_if(timelike, t2 * f + (t1 * t1) * e), m * swap_if(timelike, t2 * e + (t1 * t1) * f));
    return j;
  };
  CurveSpec::PointFn point = [=](double s) {
    const Vec2 cs = integrals(s);
    return DualVec2(swap_if(timelike, cs), m * swap_if(!timelike, cs));
  };
  return {CurveKind::Catalog, domain, std::move(point), std::move(jet_fn), "kappa-real-only"};
}

/// p + s·v + ε(β0 + f(s)·w).
inline CurveSpec make_profile_line(const Vec2 base, const Vec2 v, const Vec2 w, const Vec2 q, const Polynomial& f,
                                   Domain domain, CurveKind kind, std::string label) {
  const Polynomial f1 = f.derivative(), f2 = f.derivative(2), f3 = f.derivative(3);
  auto fn = [=](double s) {
    CurveJet j;
    j.t = s;
    j.d[0] = DualVec2(base + s * v, q + f(s) * w);
    j.d[1] = DualVec2(v, f1(s) * w);
    j.d[2] = DualVec2(Vec2{}, f2(s) * w);
    j.d[3] = DualVec2(Vec2{}, f3(s) * w);
    return j;
  };
  return make_jet_curve(kind, domain, fn, std::move(label));
}

}  // namespace detail

/// Closed-form families with exact derivatives:
///  - ConstCurvature: α = r(sinh(s/r), cosh(s/r)) and
///    β = (−mr² sinh + (ms+n) r cosh, −mr² cosh + (ms+n) r sinh) + β0
///    (timelike: sinh ↔ cosh). Measured κ is 1/|r| + ε·sign(r)·m.
///  - KappaRealOnly: α from θ via ∫cosh θ, ∫sinh θ and β = m·(swapped pair).
///  - Lightlike: p + s·v + ε(β0 + f(s)·w) with v null.
///  - StraightLine: p + s·v + ε(β0 + f(s)·w) with |v| = 1, ⟨v,w⟩ = 0.
inline CurveSpec make_lorentz_family(const LorentzFamilyParams& p, Domain domain) {
  switch (p.family) {
    case LorentzFamily::ConstCurvature: return detail::make_const_curvature(p, domain);
    case LorentzFamily::KappaRealOnly: return detail::make_kappa_real_only(p, domain);
    case LorentzFamily::Lightlike:
      if (p.v == Vec2{} || std::abs(lorentz_dot(p.v, p.v)) > kLightlikeBand) {
        throw Error(ErrorCode::BadParams, "lightlike family needs a nonzero null direction v");
      }
      return detail::make_profile_line(p.p, p.v, p.w, p.beta0, p.f, domain, CurveKind::Lightlike, "lightlike");
    case LorentzFamily::StraightLine:
      if (std::abs(std::abs(lorentz_dot(p.v, p.v)) - 1.0) > 1e-12) {
        throw Error(ErrorCode::BadParams, "straight-line family needs a unit direction v");
      }
      if (std::abs(lorentz_dot(p.v, p.w)) > 1e-12) {
        throw Error(ErrorCode::BadParams, "straight-line family needs w orthogonal to v");
      }
      return detail::make_profile_line(p.p, p.v, p.w, p.beta0, p.f, domain, CurveKind::Catalog, "straight-line");
  }
  throw Error(ErrorCode::BadParams, "unknown Lorentz family");
}

/// γ″ = 0 on a sample grid.
inline bool is_straight_line(const CurveSpec& spec, double tol = kDefaultTolerance, int samples = 200) {
  for (double t : sample_grid(spec.domain(), samples)) {
    if (jet(spec, t)[2].max_abs() > tol) return false;
  }
  return true;
}

/// For p + εq + s·v + εf(s)·w: a straight line iff f″ = 0.
inline bool is_straight_line(const Polynomial& profile, Domain domain, double tol = kDefaultTolerance,
                             int samples = 200) {
  const Polynomial f2 = profile.derivative(2);
  for (double t : sample_grid(domain, samples)) {
    if (std::abs(f2(t)) > tol) return false;
  }
  return true;
}

}  // namespace dualcurve
