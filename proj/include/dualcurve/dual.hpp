#pragma once

// Dual numbers a + εb (ε² = 0) and the planar vector/matrix types built on
// them. Real parts carry the "classical" geometry; dual parts carry the
// first-order companion data.

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "dualcurve/error.hpp"

namespace dualcurve {

/// Library-wide relative tolerance for "exact" identities evaluated in
/// floating point. Every API that compares against it accepts an override.
inline constexpr double kDefaultTolerance = 1e-9;

inline bool close(double a, double b, double tol = kDefaultTolerance) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Element re + ε·du of the ring D. Values are finite by construction.
class Dual {
 public:
  constexpr Dual() = default;
  Dual(double re, double du = 0.0) : re_(re), du_(du) {  // NOLINT: real numbers embed into D
    if (!std::isfinite(re) || !std::isfinite(du)) {
      throw Error(ErrorCode::NonFinite, "dual number components must be finite");
    }
  }

  constexpr double re() const { return re_; }
  constexpr double du() const { return du_; }

  static Dual epsilon() { return Dual(0.0, 1.0); }

  friend Dual operator+(Dual a, Dual b) { return {a.re_ + b.re_, a.du_ + b.du_}; }
  friend Dual operator-(Dual a, Dual b) { return {a.re_ - b.re_, a.du_ - b.du_}; }
  friend Dual operator-(Dual a) { return {-a.re_, -a.du_}; }
  friend Dual operator*(Dual a, Dual b) { return {a.re_ * b.re_, a.re_ * b.du_ + a.du_ * b.re_}; }
  friend Dual operator/(Dual a, Dual b) {
    if (b.re_ == 0.0) throw Error(ErrorCode::ZeroRealPart, "division by a dual number with zero real part");
    return {a.re_ / b.re_, (a.du_ * b.re_ - a.re_ * b.du_) / (b.re_ * b.re_)};
  }
  Dual& operator+=(Dual o) { return *this = *this + o; }
  Dual& operator-=(Dual o) { return *this = *this - o; }
  Dual& operator*=(Dual o) { return *this = *this * o; }

  friend bool operator==(Dual a, Dual b) { return a.re_ == b.re_ && a.du_ == b.du_; }

  friend std::ostream& operator<<(std::ostream& os, Dual d) {
    return os << d.re_ << (d.du_ < 0 ? "-" : "+") << std::abs(d.du_) << "ε";
  }

 private:
  double re_ = 0.0;
  double du_ = 0.0;
};

using DualScalar = Dual;

inline Dual mul(Dual a, Dual b) { return a * b; }
inline Dual div(Dual a, Dual b) { return a / b; }

/// √a = √x + ε·y/(2√x); there is no consistent root when x ≤ 0.
inline Dual sqrt_dual(Dual a) {
  if (!(a.re() > 0.0)) {
    throw Error(ErrorCode::NonpositiveRealPart, "square root needs a positive real part");
  }
  const double root = std::sqrt(a.re());
  return {root, a.du() / (2.0 * root)};
}

/// Real cube root on the real part, so negative real parts are allowed.
inline Dual cbrt_dual(Dual a) {
  if (a.re() == 0.0) throw Error(ErrorCode::ZeroRealPart, "cube root needs a nonzero real part");
  const double root = std::cbrt(a.re());
  return {root, a.du() / (3.0 * root * root)};
}

inline bool close(Dual a, Dual b, double tol = kDefaultTolerance) {
  return close(a.re(), b.re(), tol) && close(a.du(), b.du(), tol);
}

/// Real planar vector.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double k) { return {k * a.x, k * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double k) { return {a.x / k, a.y / k}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;

  constexpr double max_abs() const { return std::max(std::abs(x), std::abs(y)); }
};

/// Area form (u, v) = u₁v₂ − u₂v₁.
constexpr double det(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }
/// Lorentzian form dx² − dy².
constexpr double lorentz_dot(Vec2 u, Vec2 v) { return u.x * v.x - u.y * v.y; }

/// Point or vector of D², stored componentwise; equivalently real + ε·dual.
struct DualVec2 {
  Dual x;
  Dual y;

  DualVec2() = default;
  DualVec2(Dual x_, Dual y_) : x(x_), y(y_) {}
  DualVec2(Vec2 real_part, Vec2 dual_part = {})
      : x(real_part.x, dual_part.x), y(real_part.y, dual_part.y) {}

  Vec2 real() const { return {x.re(), y.re()}; }
  Vec2 dual() const { return {x.du(), y.du()}; }

  friend DualVec2 operator+(const DualVec2& a, const DualVec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend DualVec2 operator-(const DualVec2& a, const DualVec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend DualVec2 operator*(Dual k, const DualVec2& a) { return {k * a.x, k * a.y}; }
  friend DualVec2 operator/(const DualVec2& a, Dual k) { return {a.x / k, a.y / k}; }
  friend bool operator==(const DualVec2& a, const DualVec2& b) { return a.x == b.x && a.y == b.y; }

  double max_abs() const { return std::max(real().max_abs(), dual().max_abs()); }
};

/// Determinant form extended to D²; its dual part is (α_u,β_v) + (β_u,α_v).
inline Dual det2(const DualVec2& u, const DualVec2& v) { return u.x * v.y - u.y * v.x; }

/// Lorentzian form extended to D² under ε² = 0.
inline Dual lorentz_inner(const DualVec2& u, const DualVec2& v) { return u.x * v.x - u.y * v.y; }

/// Real 2×2 matrix, row-major.
struct Mat2 {
  double a11 = 1.0, a12 = 0.0, a21 = 0.0, a22 = 1.0;

  constexpr double determinant() const { return a11 * a22 - a12 * a21; }
  constexpr Mat2 transpose() const { return {a11, a21, a12, a22}; }
  constexpr Vec2 operator*(Vec2 v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
  friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
  constexpr double max_abs_diff(const Mat2& o) const {
    return std::max({std::abs(a11 - o.a11), std::abs(a12 - o.a12), std::abs(a21 - o.a21),
                     std::abs(a22 - o.a22)});
  }
};

/// 2×2 matrix over D.
struct Mat2D {
  Dual a11{1.0}, a12{0.0}, a21{0.0}, a22{1.0};

  static Mat2D from_real(const Mat2& m) { return {m.a11, m.a12, m.a21, m.a22}; }

  Dual determinant() const { return a11 * a22 - a12 * a21; }
  DualVec2 operator*(const DualVec2& v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
  friend Mat2D operator*(const Mat2D& a, const Mat2D& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
};

}  // namespace dualcurve
