#pragma once

// Parametrized curves t ↦ γ(t) = α(t) + εβ(t) in D² over a real interval,
// and their jets (value plus derivatives of order 1..3).

#include <array>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualcurve/dual.hpp"

namespace dualcurve {

struct Domain {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  bool contains(double t) const { return t >= lo && t <= hi; }
};

inline Domain make_domain(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw Error(ErrorCode::BadDomain, "domain must be a finite interval with lo < hi");
  }
  return {lo, hi};
}

/// γ and its first three derivatives at parameter t.
struct CurveJet {
  double t = 0.0;
  std::array<DualVec2, 4> d{};

  const DualVec2& operator[](std::size_t k) const { return d[k]; }
  Vec2 alpha(std::size_t k) const { return d[k].real(); }
  Vec2 beta(std::size_t k) const { return d[k].dual(); }
};

enum class CurveKind { Catalog, Analytic, Lightlike, Derived };

/// Immutable, lazily evaluated curve. The position evaluator is mandatory;
/// an analytic jet evaluator is optional and, when present, is preferred by
/// jet(). Finite-difference oracles only ever use the position evaluator.
class CurveSpec {
 public:
  using PointFn = std::function<DualVec2(double)>;
  using JetFn = std::function<CurveJet(double)>;

  CurveSpec(CurveKind kind, Domain domain, PointFn point, JetFn analytic = {}, std::string label = {})
      : kind_(kind),
        domain_(make_domain(domain.lo, domain.hi)),
        point_(std::move(point)),
        analytic_(std::move(analytic)),
        label_(std::move(label)) {
    if (!point_) throw Error(ErrorCode::BadParams, "curve needs a position evaluator");
  }

  CurveKind kind() const { return kind_; }
  const Domain& domain() const { return domain_; }
  const std::string& label() const { return label_; }
  bool has_analytic_jet() const { return static_cast<bool>(analytic_); }

  /// Position without a domain check; stencils may straddle the boundary
  /// of the working interval only when callers have verified it is safe.
  DualVec2 point(double t) const { return point_(t); }
  CurveJet analytic_jet(double t) const { return analytic_(t); }
  const PointFn& point_fn() const { return point_; }
  const JetFn& jet_fn() const { return analytic_; }

  CurveSpec with_domain(Domain d) const { return {kind_, d, point_, analytic_, label_}; }
  CurveSpec with_label(std::string label) const { return {kind_, domain_, point_, analytic_, std::move(label)}; }
  CurveSpec without_analytic_jet() const { return {kind_, domain_, point_, {}, label_}; }

 private:
  CurveKind kind_;
  Domain domain_;
  PointFn point_;
  JetFn analytic_;
  std::string label_;
};

namespace detail {

inline DualVec2 combine(std::initializer_list<std::pair<double, DualVec2>> terms) {
  double ax = 0, ay = 0, bx = 0, by = 0;
  for (const auto& [w, v] : terms) {
    ax += w * v.x.re();
    ay += w * v.y.re();
    bx += w * v.x.du();
    by += w * v.y.du();
  }
  return DualVec2(Vec2{ax, ay}, Vec2{bx, by});
}

inline double scale_step(double base, double t) { return base * (1.0 + std::abs(t)); }

}  // namespace detail

/// Second-order central stencils: 3-point for d1/d2 with step h12, 5-point
/// for d3 with step h3. Needs the curve defined on [t − 2·h3, t + 2·h3].
inline CurveJet fd_jet(const CurveSpec::PointFn& f, double t, double h12, double h3) {
  const DualVec2 f0 = f(t);
  const DualVec2 fp = f(t + h12);
  const DualVec2 fm = f(t - h12);
  const DualVec2 gp1 = f(t + h3);
  const DualVec2 gm1 = f(t - h3);
  const DualVec2 gp2 = f(t + 2 * h3);
  const DualVec2 gm2 = f(t - 2 * h3);
  CurveJet j;
  j.t = t;
  j.d[0] = f0;
  j.d[1] = detail::combine({{0.5 / h12, fp}, {-0.5 / h12, fm}});
  j.d[2] = detail::combine({{1.0 / (h12 * h12), fp}, {-2.0 / (h12 * h12), f0}, {1.0 / (h12 * h12), fm}});
  const double c = 0.5 / (h3 * h3 * h3);
  j.d[3] = detail::combine({{c, gp2}, {-2 * c, gp1}, {2 * c, gm1}, {-c, gm2}});
  return j;
}

/// Two-step Richardson extrapolation (4·J(h) − J(2h))/3 of the stencils above,
/// fourth order in h for every derivative. Reaches t ± 4h.
inline CurveJet fd_jet_richardson(const CurveSpec::PointFn& f, double t, double h) {
  const CurveJet fine = fd_jet(f, t, h, h);
  const CurveJet coarse = fd_jet(f, t, 2 * h, 2 * h);
  CurveJet j = fine;
  for (std::size_t k = 1; k < 4; ++k) {
    j.d[k] = detail::combine({{4.0 / 3.0, fine.d[k]}, {-1.0 / 3.0, coarse.d[k]}});
  }
  return j;
}

inline constexpr double kDefaultStepLowOrder = 1e-4;
inline constexpr double kDefaultStepThirdOrder = 1e-3;

inline void require_in_domain(const CurveSpec& spec, double t) {
  const Domain& d = spec.domain();
  const double slack = 1e-12 * (1.0 + std::max(std::abs(d.lo), std::abs(d.hi)));
  if (!(t >= d.lo - slack && t <= d.hi + slack)) {
    throw Error(ErrorCode::OutOfDomain, "t=" + std::to_string(t) + " lies outside [" + std::to_string(d.lo) +
                                            ", " + std::to_string(d.hi) + "]");
  }
}

inline void require_stencil_room(const CurveSpec& spec, double t, double reach) {
  const Domain& d = spec.domain();
  if (t - reach < d.lo || t + reach > d.hi) {
    throw Error(ErrorCode::StencilClipped,
                "finite-difference stencil at t=" + std::to_string(t) + " leaves the domain");
  }
}

/// γ, γ′, γ″, γ‴ at t. Analytic derivatives are used when attached;
/// otherwise finite differences with step `h` (all orders) or, by default,
/// 1e-4·(1+|t|) for orders 1–2 and 1e-3·(1+|t|) for order 3.
inline CurveJet jet(const CurveSpec& spec, double t, std::optional<double> h = std::nullopt) {
  require_in_domain(spec, t);
  if (spec.has_analytic_jet()) {
    CurveJet j = spec.analytic_jet(t);
    j.t = t;
    return j;
  }
  const double h12 = h ? *h : detail::scale_step(kDefaultStepLowOrder, t);
  const double h3 = h ? *h : detail::scale_step(kDefaultStepThirdOrder, t);
  require_stencil_room(spec, t, 3.0 * std::max(h12, h3));
  return fd_jet(spec.point_fn(), t, h12, h3);
}

/// Evenly spaced parameter grid with n+1 points covering the domain.
inline std::vector<double> sample_grid(Domain d, int n) {
  if (n < 1) throw Error(ErrorCode::BadParams, "need at least one sample interval");
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = d.lo + d.length() * i / n;
  out.back() = d.hi;
  return out;
}

/// Curve given by real-part and dual-part evaluators with optional analytic
/// derivative evaluators (index k = derivative order, 0..3).
struct PlanarJetFns {
  std::array<std::function<Vec2(double)>, 4> alpha;
  std::array<std::function<Vec2(double)>, 4> beta;
};

inline CurveSpec make_planar_curve(CurveKind kind, Domain domain, PlanarJetFns fns, bool with_derivatives,
                                   std::string label = {}) {
  auto shared = std::make_shared<const PlanarJetFns>(std::move(fns));
  CurveSpec::PointFn point = [shared](double t) { return DualVec2(shared->alpha[0](t), shared->beta[0](t)); };
  CurveSpec::JetFn analytic;
  if (with_derivatives) {
    analytic = [shared](double t) {
      CurveJet j;
      j.t = t;
      for (std::size_t k = 0; k < 4; ++k) j.d[k] = DualVec2(shared->alpha[k](t), shared->beta[k](t));
      return j;
    };
  }
  return {kind, domain, std::move(point), std::move(analytic), std::move(label)};
}

/// Curve defined by one closed-form jet evaluator; positions reuse d[0].
inline CurveSpec make_jet_curve(CurveKind kind, Domain domain, CurveSpec::JetFn jet_fn, std::string label = {}) {
  CurveSpec::PointFn point = [jet_fn](double t) { return jet_fn(t).d[0]; };
  return {kind, domain, std::move(point), std::move(jet_fn), std::move(label)};
}

/// γ̃ = Aγ + b with A over D; derivatives transform by A alone.
inline CurveSpec transform_affine(const CurveSpec& spec, const Mat2D& a, const DualVec2& b, std::string label = {}) {
  CurveSpec::PointFn point = [base = spec.point_fn(), a, b](double t) { return a * base(t) + b; };
  CurveSpec::JetFn analytic;
  if (spec.has_analytic_jet()) {
    analytic = [base = spec.jet_fn(), a, b](double t) {
      CurveJet j = base(t);
      j.d[0] = a * j.d[0] + b;
      for (std::size_t k = 1; k < 4; ++k) j.d[k] = a * j.d[k];
      return j;
    };
  }
  return {CurveKind::Derived, spec.domain(), std::move(point), std::move(analytic),
          label.empty() ? spec.label() : std::move(label)};
}

/// Lightlike curve p + t·v + εβ(t) where β is the real part of `beta`.
inline CurveSpec make_lightlike(Vec2 p, Vec2 v, const CurveSpec& beta) {
  if (v == Vec2{} || std::abs(lorentz_dot(v, v)) > 1e-12) {
    throw Error(ErrorCode::BadParams, "lightlike curves need a nonzero null direction v");
  }
  CurveSpec::PointFn point = [p, v, f = beta.point_fn()](double t) { return DualVec2(p + t * v, f(t).real()); };
  CurveSpec::JetFn analytic;
  if (beta.has_analytic_jet()) {
    analytic = [p, v, f = beta.jet_fn()](double t) {
      const CurveJet b = f(t);
      CurveJet j;
      j.t = t;
      j.d[0] = DualVec2(p + t * v, b.alpha(0));
      j.d[1] = DualVec2(v, b.alpha(1));
      j.d[2] = DualVec2(Vec2{}, b.alpha(2));
      j.d[3] = DualVec2(Vec2{}, b.alpha(3));
      return j;
    };
  }
  return {CurveKind::Lightlike, beta.domain(), std::move(point), std::move(analytic), "lightlike"};
}

}  // namespace dualcurve
