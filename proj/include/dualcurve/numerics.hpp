#pragma once

// Small fixed-rule numerical kernels: composite Simpson quadrature, a
// classical RK4 integrator for third-order linear ODEs, and bisection.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dualcurve/error.hpp"

namespace dualcurve {

using RealFn = std::function<double(double)>;

inline constexpr int kPanelsPerUnit = 512;

/// Even panel count giving kPanelsPerUnit panels per unit length (at least 2).
inline int default_panels(double a, double b) {
  const int half = static_cast<int>(std::ceil(0.5 * kPanelsPerUnit * std::abs(b - a)));
  return 2 * std::max(half, 1);
}

/// Composite Simpson rule with n panels; a > b yields the signed integral.
template <class F>
double integrate(F&& f, double a, double b, int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::BadPanelCount, "Simpson needs an even panel count >= 2, got " + std::to_string(n));
  }
  const double h = (b - a) / n;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < n; ++i) {
    const double v = f(a + i * h);
    (i % 2 != 0 ? odd : even) += v;
  }
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

template <class F>
double integrate(F&& f, double a, double b) {
  return integrate(std::forward<F>(f), a, b, default_panels(a, b));
}

/// Bisection for t with |g(t) − target| ≤ tol on an increasing g.
template <class G>
double invert_monotone(G&& g, double target, double lo, double hi, double tol) {
  if (!(lo <= hi)) throw Error(ErrorCode::BracketInvalid, "bracket is reversed");
  double glo = g(lo);
  double ghi = g(hi);
  if (std::abs(glo - target) <= tol) return lo;
  if (std::abs(ghi - target) <= tol) return hi;
  if (!(glo < target && target < ghi)) {
    throw Error(ErrorCode::BracketInvalid, "target is not bracketed by g(lo), g(hi)");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::abs(gm - target) <= tol || mid == lo || mid == hi) return mid;
    if (gm < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// State (y, y′, y″) of a third-order scalar ODE.
using Ode3State = std::array<double, 3>;

/// y‴ + p2(s)·y″ + p1(s)·y′ + p0(s)·y = 0.
struct LinearOde3 {
  RealFn p2;
  RealFn p1;
  RealFn p0;

  Ode3State rhs(double s, const Ode3State& y) const {
    return {y[1], y[2], -(p2(s) * y[2] + p1(s) * y[1] + p0(s) * y[0])};
  }

  Ode3State rk4_step(double s, const Ode3State& y, double h) const {
    auto axpy = [](const Ode3State& a, double k, const Ode3State& b) {
      return Ode3State{a[0] + k * b[0], a[1] + k * b[1], a[2] + k * b[2]};
    };
    const Ode3State k1 = rhs(s, y);
    const Ode3State k2 = rhs(s + 0.5 * h, axpy(y, 0.5 * h, k1));
    const Ode3State k3 = rhs(s + 0.5 * h, axpy(y, 0.5 * h, k2));
    const Ode3State k4 = rhs(s + h, axpy(y, h, k3));
    Ode3State out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
  }
};

/// Sampled RK4 solution. Off-grid queries take one RK4 sub-step from the
/// preceding node, so they carry the same local accuracy as grid values.
class OdeSolution {
 public:
  OdeSolution(LinearOde3 ode, std::vector<double> grid, std::vector<Ode3State> states)
      : ode_(std::move(ode)), grid_(std::move(grid)), states_(std::move(states)) {}

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<Ode3State>& states() const { return states_; }
  double s0() const { return grid_.front(); }
  double s1() const { return grid_.back(); }

  Ode3State state_at(double s) const {
    if (s < s0() || s > s1()) throw Error(ErrorCode::OutOfDomain, "ODE solution queried outside its interval");
    const double step = grid_.size() > 1 ? grid_[1] - grid_[0] : 0.0;
    std::size_t k = step > 0.0 ? static_cast<std::size_t>((s - s0()) / step) : 0;
    k = std::min(k, grid_.size() - 1);
    if (k + 1 < grid_.size() && s >= grid_[k + 1]) ++k;
    if (s == grid_[k]) return states_[k];
    return ode_.rk4_step(grid_[k], states_[k], s - grid_[k]);
  }

 private:
  LinearOde3 ode_;
  std::vector<double> grid_;
  std::vector<Ode3State> states_;
};

/// Classical fixed-step RK4 from s0 to s1. The step is shrunk slightly so that
/// s1 lands on the grid.
inline OdeSolution solve_linear_ode3(LinearOde3 ode, Ode3State init, double s0, double s1, double h = 1e-3) {
  if (!(h > 0.0) || !(s0 < s1)) throw Error(ErrorCode::BadParams, "need h > 0 and s0 < s1");
  const auto steps = static_cast<std::size_t>(std::ceil((s1 - s0) / h - 1e-9));
  const double step = (s1 - s0) / static_cast<double>(steps);
  std::vector<double> grid(steps + 1);
  std::vector<Ode3State> states(steps + 1);
  grid[0] = s0;
  states[0] = init;
  for (std::size_t i = 0; i < steps; ++i) {
    states[i + 1] = ode.rk4_step(grid[i], states[i], step);
    grid[i + 1] = (i + 1 == steps) ? s1 : s0 + static_cast<double>(i + 1) * step;
    for (double v : states[i + 1]) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::NonfiniteState, "ODE state blew up at s=" + std::to_string(grid[i + 1]));
      }
    }
  }
  return {std::move(ode), std::move(grid), std::move(states)};
}

inline OdeSolution solve_linear_ode3(const RealFn& p2, const RealFn& p1, const RealFn& p0, Ode3State init,
                                     double s0, double s1, double h = 1e-3) {
  return solve_linear_ode3(LinearOde3{p2, p1, p0}, init, s0, s1, h);
}

}  // namespace dualcurve
