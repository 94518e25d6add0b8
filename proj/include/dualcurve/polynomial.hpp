#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace dualcurve {

/// Real polynomial c₀ + c₁x + c₂x² + … used for scalar profiles f(s) and
/// turning functions θ(s).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }

  double operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial(std::move(d));
  }

  Polynomial derivative(int order) const {
    Polynomial p = *this;
    for (int i = 0; i < order; ++i) p = p.derivative();
    return p;
  }

 private:
  std::vector<double> coeffs_;
};

}  // namespace dualcurve
