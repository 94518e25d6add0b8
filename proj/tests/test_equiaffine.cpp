#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dualcurve/equiaffine.hpp"
#include "dualcurve/expression.hpp"
#include "dualcurve/verify.hpp"

using namespace dualcurve;

namespace {

constexpr double kPi = std::numbers::pi;

CurveSpec analytic(const char* ax, const char* ay, const char* bx, const char* by, Domain d) {
  return make_expression_curve({Expr::parse(ax), Expr::parse(ay)}, {Expr::parse(bx), Expr::parse(by)}, d);
}

CurveSpec worked_example() { return analytic("sin(s)", "-cos(s)", "cos(s)", "sin(s)", {0, 2 * kPi}); }

void expect_dual(Dual got, double re, double du, double tol) {
  EXPECT_NEAR(got.re(), re, tol);
  EXPECT_NEAR(got.du(), du, tol);
}

void expect_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

EquiaffineFamilyParams family(EquiaffineFamily f, double r, double m, double c0, double c1, double c2,
                              Vec2 beta0 = {}) {
  EquiaffineFamilyParams p;
  p.family = f;
  p.r_alpha = r;
  p.m = m;
  p.c0 = c0;
  p.c1 = c1;
  p.c2 = c2;
  p.beta0 = beta0;
  return p;
}

}  // namespace

TEST(Nondegeneracy, Examples) {
  const CurveSpec parabola = analytic("s", "s^2/2", "0", "0", {-3, 3});
  const CurveSpec slow = analytic("sin(t/2)", "-cos(t/2)", "0", "0", {0, 4 * kPi});
  const CurveSpec line = analytic("t", "0", "0", "0", {0, 1});
  for (double t : {0.0, 0.3, 1.0}) {
    EXPECT_NEAR(nondegeneracy(jet(parabola, t)), 1.0, 1e-15);
    EXPECT_NEAR(nondegeneracy(jet(slow, t)), 0.125, 1e-15);
    EXPECT_EQ(nondegeneracy(jet(line, t)), 0.0);
  }
}

TEST(AdmissibilityResidual, Examples) {
  const CurveSpec cubic = analytic("t", "t^2/2", "t^3", "0", {-2, 2});
  const CurveSpec flat_beta = analytic("t", "t^2/2", "3", "-1", {-2, 2});
  for (double t : {-1.5, 0.0, 0.4, 2.0}) {
    EXPECT_NEAR(admissibility_residual(jet(worked_example(), std::abs(t))), 0.0, 1e-15);
    EXPECT_NEAR(admissibility_residual(jet(cubic, t)), -3 * t * t, 1e-13);
    EXPECT_EQ(admissibility_residual(jet(flat_beta, t)), 0.0);
  }
}

TEST(Arclength, Examples) {
  const CurveSpec slow = analytic("sin(t/2)", "-cos(t/2)", "cos(t/2)", "sin(t/2)", {0, 4 * kPi});
  const CurveSpec parabola = analytic("t", "t^2/2", "0", "0", {0, 3});
  const CurveSpec cubic = analytic("t", "t^2/2", "t^3", "0", {0, 1});
  for (double t : {0.5, 1.0, 2.5}) {
    expect_dual(equiaffine_arclength(slow, 0, t), t / 2, 0, 1e-13);
    expect_dual(equiaffine_arclength(parabola, 0, t), t, 0, 1e-13);
  }
  // σ = ∛(1 − 3εt²) = 1 − εt², so the length is 1 − ε/3.
  expect_dual(equiaffine_arclength(cubic, 0, 1), 1.0, -1.0 / 3.0, 1e-12);
}

TEST(Reparametrize, SlowWorkedExampleBecomesUnitSpeed) {
  const CurveSpec slow = analytic("sin(t/2)", "-cos(t/2)", "cos(t/2)", "sin(t/2)", {0, 4 * kPi});
  const CurveSpec unit = reparametrize_equiaffine(slow);
  EXPECT_NEAR(unit.domain().lo, 0.0, 1e-12);
  EXPECT_NEAR(unit.domain().hi, 2 * kPi, 1e-9);
  for (double s : sample_grid(unit.domain(), 40)) {
    const CurveJet j = jet(unit, s);
    expect_dual(det2(j[1], j[2]), 1, 0, 1e-9);
    const DualVec2 want = jet(worked_example(), std::clamp(s, 0.0, 2 * kPi))[0];
    EXPECT_LE((j[0] - want).max_abs(), 1e-9) << "s=" << s;
    expect_dual(equiaffine_curvature(j), 1, 0, 1e-8);
  }
}

TEST(Reparametrize, UnitParabolaIsUnchanged) {
  const CurveSpec parabola = analytic("s", "s^2/2", "0", "0", {0, 2});
  const CurveSpec same = reparametrize_equiaffine(parabola);
  for (double s : {0.0, 0.7, 2.0}) {
    EXPECT_LE((same.point(s) - parabola.point(s)).max_abs(), 1e-12);
  }
}

TEST(Reparametrize, RejectsInadmissibleCurve) {
  const CurveSpec cubic = analytic("t", "t^2/2", "t^3", "0", {0, 1});
  expect_code(ErrorCode::NotAdmissible, [&] { (void)reparametrize_equiaffine(cubic); });
  const CurveSpec line = analytic("t", "2*t", "0", "0", {0, 1});
  expect_code(ErrorCode::DegeneratePoint, [&] { (void)reparametrize_equiaffine(line); });
}

TEST(Curvature, Examples) {
  for (double s : sample_grid({0, 2 * kPi}, 16)) expect_dual(equiaffine_curvature(jet(worked_example(), s)), 1, 0, 1e-14);
  const CurveSpec flat = make_family(family(EquiaffineFamily::Flat, 0, 0, 0.3, -1.2, 2.0), {-2, 2});
  const CurveSpec pure = make_family(family(EquiaffineFamily::PureDual, 0, 2, 0, 0, 0), {-2, 2});
  for (double s : {-1.0, 0.0, 1.5}) {
    expect_dual(equiaffine_curvature(jet(flat, s)), 0, 0, 1e-14);
    expect_dual(equiaffine_curvature(jet(pure, s)), 0, 2, 1e-14);
  }
  const CurveSpec slow = analytic("sin(t/2)", "-cos(t/2)", "0", "0", {0, 1});
  expect_code(ErrorCode::NotUnitSpeed, [&] { (void)equiaffine_curvature(jet(slow, 0.5)); });
}

TEST(KkSystem, FlatReproducesQuadraticProfile) {
  const double c0 = 0.4, c1 = -1.1, c2 = 0.7, s0 = -1;
  const KkSolution sol = solve_kk_system([](double) { return 0.0; }, [](double) { return 0.0; },
                                         flat_kk_initial_state(c0, c1, c2, s0), s0, 2, 1e-2);
  for (double s : sample_grid({s0, 2}, 30)) {
    EXPECT_NEAR(sol.y(s), -2 * c0 * s * s - 2 * c1 * s + c2, 1e-11);
    EXPECT_NEAR(sol.x(s), 2 * c0 * s + c1, 1e-11);
  }
}

TEST(KkSystem, ConstantCurvatureClosedForm) {
  const KkSolution sol = solve_kk_system([](double) { return 1.0; }, [](double) { return 0.0; }, {0, 1, 0}, 0, 3);
  for (double s : sample_grid({0, 3}, 30)) {
    EXPECT_NEAR(sol.y(s), std::sin(2 * s) / 2, 1e-9);
    EXPECT_NEAR(sol.x(s), -std::cos(2 * s) / 2, 1e-9);
  }
}

TEST(KkSystem, ZeroDataGivesConstantBeta) {
  const KkSolution sol = solve_kk_system([](double) { return 1.0; }, [](double) { return 0.0; }, {0, 0, 0}, 0, 1);
  const CurveSpec alpha = analytic("sin(s)", "-cos(s)", "0", "0", {0, 1});
  const CurveSpec g = reconstruct_kk_curve(alpha, [](double) { return 1.0; }, [](double) { return 0.0; }, sol, {2, 3});
  for (double s : {0.0, 0.5, 1.0}) {
    EXPECT_EQ(sol.x(s), 0.0);
    EXPECT_LE((g.point(s).dual() - Vec2{2, 3}).max_abs(), 0.0);
  }
}

TEST(Families, FlatWithZeroConstants) {
  const CurveSpec c = make_family(family(EquiaffineFamily::Flat, 0, 0, 0, 0, 0), {-1, 1});
  for (double s : {-1.0, 0.25, 1.0}) {
    const CurveJet j = jet(c, s);
    EXPECT_LE((j[0] - DualVec2(Vec2{s, s * s / 2}, Vec2{})).max_abs(), 1e-15);
    expect_dual(equiaffine_curvature(j), 0, 0, 0);
  }
}

TEST(Families, EllipticUnitRadius) {
  const Vec2 b0{0.5, -2};
  const CurveSpec c = make_family(family(EquiaffineFamily::Elliptic, 1, 0, 1, 0, 0, b0), {0, 2 * kPi});
  for (double s : sample_grid(c.domain(), 12)) {
    const CurveJet j = jet(c, s);
    EXPECT_NEAR(j.alpha(0).x, std::sin(s), 1e-15);
    EXPECT_NEAR(j.alpha(0).y, -std::cos(s), 1e-15);
    EXPECT_NEAR(j.beta(0).x, std::cos(s) + b0.x, 1e-15);
    EXPECT_NEAR(j.beta(0).y, -std::sin(s) + b0.y, 1e-15);
    expect_dual(equiaffine_curvature(j), 1, 0, 1e-14);
  }
}

TEST(Families, HyperbolicUnitRadius) {
  const CurveSpec c = make_family(family(EquiaffineFamily::Hyperbolic, -1, 0, 1, 0, 0), {-1, 1});
  for (double s : sample_grid(c.domain(), 12)) {
    const CurveJet j = jet(c, s);
    EXPECT_NEAR(j.alpha(0).x, std::sinh(s), 1e-14);
    EXPECT_NEAR(j.alpha(0).y, std::cosh(s), 1e-14);
    EXPECT_NEAR(j.beta(0).x, std::cosh(s), 1e-14);
    EXPECT_NEAR(j.beta(0).y, -std::sinh(s), 1e-14);
    expect_dual(equiaffine_curvature(j), -1, 0, 1e-13);
  }
}

TEST(Families, Validation) {
  expect_code(ErrorCode::BadParams, [] { (void)make_family(family(EquiaffineFamily::Elliptic, -1, 0, 1, 0, 0), {0, 1}); });
  expect_code(ErrorCode::BadParams, [] { (void)make_family(family(EquiaffineFamily::Hyperbolic, 1, 0, 1, 0, 0), {0, 1}); });
  expect_code(ErrorCode::BadParams, [] { (void)make_family(family(EquiaffineFamily::PureDual, 0, 0, 0, 0, 0), {0, 1}); });
}

TEST(Conics, RealPartAndDualPartFits) {
  const CurveSpec c = make_family(family(EquiaffineFamily::Elliptic, 1, 0, 1, 0, 0), {0, 2 * kPi});
  std::vector<Vec2> alpha, beta;
  for (double s : sample_grid(c.domain(), 64)) {
    alpha.push_back(c.point(s).real());
    beta.push_back(c.point(s).dual());
  }
  EXPECT_LE(real_conic_residual(alpha, 1.0), 1e-10);
  const ConicFit fit = quadratic_form_check(beta, 1.0);
  EXPECT_NEAR(fit.a, 1.0, 1e-9);
  EXPECT_NEAR(fit.x0, 0.0, 1e-9);
  EXPECT_NEAR(fit.y0, 0.0, 1e-9);
  EXPECT_LE(fit.max_residual, 1e-9);

  std::vector<Vec2> line;
  for (int i = 0; i < 10; ++i) line.push_back({0.1 * i, 0.2 * i});
  expect_code(ErrorCode::SingularFit, [&] { (void)quadratic_form_check(line, 1.0); });
}

TEST(Conics, RealToDualMapDeterminant) {
  const double r = 2.0, c0 = 0.4;
  const double c1 = std::sqrt(1.0 / r - c0 * c0);
  EXPECT_NEAR(real_to_dual_map(r, c0, c1).determinant(), -1.0, 1e-12);
}

TEST(EquiaffineAction, IdentityRotationAndRandom) {
  const CurveSpec flat = make_family(family(EquiaffineFamily::Flat, 0, 0, 0.2, 0.5, -0.3), {-1, 1});
  const Mat2D id = Mat2D::from_real(Mat2{1, 0, 0, 1});
  const CurveSpec same = apply_equiaffine(id, DualVec2(), flat);
  EXPECT_LE((same.point(0.3) - flat.point(0.3)).max_abs(), 0.0);

  const double th = 0.8;
  const Mat2D rot = Mat2D::from_real(Mat2{std::cos(th), -std::sin(th), std::sin(th), std::cos(th)});
  const CurveSpec rotated = apply_equiaffine(rot, DualVec2(Dual(1, 2), Dual(-1, 0.5)), flat);
  for (double s : {-0.5, 0.0, 0.9}) expect_dual(equiaffine_curvature(jet(rotated, s)), 0, 0, 1e-12);

  SplitMix64 rng(21);
  const CurveSpec ell = make_family(family(EquiaffineFamily::Elliptic, 1, 0, 0.6, -0.3, 0), {0, 6});
  for (int i = 0; i < 20; ++i) {
    const Mat2D a = unimodular_from_triangular(Dual(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                                               Dual(rng.uniform(-1, 1), rng.uniform(-1, 1)));
    const DualVec2 b(Dual(rng.uniform(-2, 2), rng.uniform(-2, 2)), Dual(rng.uniform(-2, 2), rng.uniform(-2, 2)));
    const CurveSpec moved = apply_equiaffine(a, b, ell);
    for (double s : {0.5, 3.0, 5.5}) {
      expect_dual(equiaffine_curvature(jet(moved, s)), 1, 0, 1e-8);
      expect_dual(fd_curvature_oracle(moved.without_analytic_jet(), s, kOracleStep, Geometry::Equiaffine), 1, 0, 1e-5);
    }
  }
  const Mat2D scale = Mat2D::from_real(Mat2{2, 0, 0, 1});
  expect_code(ErrorCode::NotUnimodular, [&] { (void)apply_equiaffine(scale, DualVec2(), flat); });
}
