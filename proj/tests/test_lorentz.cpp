#include <gtest/gtest.h>

#include <cmath>

#include "dualcurve/expression.hpp"
#include "dualcurve/lorentz.hpp"
#include "dualcurve/verify.hpp"

using namespace dualcurve;

namespace {

CurveSpec analytic(const char* ax, const char* ay, const char* bx, const char* by, Domain d) {
  return make_expression_curve({Expr::parse(ax), Expr::parse(ay)}, {Expr::parse(bx), Expr::parse(by)}, d);
}

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

LorentzFamilyParams lclass(double r, double m, double n, Causal causal = Causal::Spacelike, Vec2 beta0 = {}) {
  LorentzFamilyParams p;
  p.family = LorentzFamily::ConstCurvature;
  p.r = r;
  p.m = m;
  p.n = n;
  p.causal = causal;
  p.beta0 = beta0;
  return p;
}

}  // namespace

TEST(Causal, Examples) {
  EXPECT_EQ(causal_character({1, 0}), CausalClass::Spacelike);
  EXPECT_EQ(causal_character({0, 1}), CausalClass::Timelike);
  EXPECT_EQ(causal_character({1, 1}), CausalClass::Lightlike);
  EXPECT_EQ(causal_character({0, 0}), CausalClass::NullVectorZero);
  EXPECT_EQ(to_string(CausalClass::Lightlike), "lightlike");
}

TEST(LorentzAdmissibility, Examples) {
  const CurveSpec same = analytic("t", "0", "t", "0", {0, 1});
  const CurveSpec fixed = analytic("t", "0", "2", "5", {0, 1});
  EXPECT_DOUBLE_EQ(lorentz_admissibility(jet(same, 0.5)), 1.0);
  EXPECT_DOUBLE_EQ(lorentz_admissibility(jet(fixed, 0.5)), 0.0);

  LorentzFamilyParams k;
  k.family = LorentzFamily::KappaRealOnly;
  k.theta = ThetaSpec::polynomial(Polynomial({0.1, 1.0, -0.3}));
  k.m = 0.7;
  for (Causal c : {Causal::Spacelike, Causal::Timelike}) {
    k.causal = c;
    const CurveSpec spec = make_lorentz_family(k, {-1, 1});
    for (double s : sample_grid(spec.domain(), 10)) EXPECT_NEAR(lorentz_admissibility(jet(spec, s)), 0.0, 1e-14);
  }
}

TEST(Frenet, ConstantCurvatureUnitRadius) {
  const CurveSpec c = make_lorentz_family(lclass(1, 0, 1), {-1, 1});
  for (double s : sample_grid(c.domain(), 8)) {
    const FrenetData f = frenet(jet(c, s));
    expect_dual(f.kappa, 1, 0, 1e-13);
    EXPECT_EQ(f.delta, 1.0);
    // T = (cosh s, sinh s) + ε·N_α with N_α = (sinh s, cosh s).
    EXPECT_LE((f.T - DualVec2(Vec2{std::cosh(s), std::sinh(s)}, Vec2{std::sinh(s), std::cosh(s)})).max_abs(), 1e-13);
    const FrenetData g = frenet_from_real_part(jet(c, s));
    EXPECT_LE((f.N - g.N).max_abs(), 1e-12);
    expect_dual(f.kappa - g.kappa, 0, 0, 1e-12);
  }
}

TEST(Frenet, Errors) {
  const CurveSpec line = analytic("s", "0", "0", "s", {0, 1});
  expect_code(ErrorCode::StraightPoint, [&] { (void)frenet(jet(line, 0.5)); });
  const CurveSpec bent_dual = analytic("s", "0", "0", "s^2", {0, 1});
  expect_code(ErrorCode::CurvatureUndefined, [&] { (void)frenet(jet(bent_dual, 0.5)); });
  const CurveSpec slow = analytic("2*s", "0", "0", "0", {0, 1});
  expect_code(ErrorCode::NotUnitSpeed, [&] { (void)frenet(jet(slow, 0.5)); });
  const CurveSpec skew = analytic("s", "0", "s", "0", {0, 1});
  expect_code(ErrorCode::NotAdmissible, [&] { (void)frenet(jet(skew, 0.5)); });
}

TEST(Families, ConstantCurvatureWithZeroConstants) {
  const CurveSpec c = make_lorentz_family(lclass(1, 0, 0), {-1, 1});
  for (double s : {-1.0, 0.0, 0.6}) {
    const DualVec2 p = c.point(s);
    EXPECT_NEAR(p.real().x, std::sinh(s), 1e-15);
    EXPECT_NEAR(p.real().y, std::cosh(s), 1e-15);
    EXPECT_EQ(p.dual().max_abs(), 0.0);
  }
}

TEST(Families, ConstantCurvatureMeasuredValues) {
  for (Causal causal : {Causal::Spacelike, Causal::Timelike}) {
    for (double r : {0.5, 2.0, -0.5, -3.0}) {
      const CurveSpec c = make_lorentz_family(lclass(r, 0.8, -0.4, causal, {1, 2}), {-1, 1});
      for (double s : {-0.7, 0.2, 0.9}) {
        const FrenetData f = frenet(jet(c, s));
        expect_dual(f.kappa, 1 / std::abs(r), (r > 0 ? 1 : -1) * 0.8, 1e-12);
        EXPECT_EQ(f.delta, causal == Causal::Spacelike ? 1.0 : -1.0);
      }
    }
  }
  expect_code(ErrorCode::BadParams, [] { (void)make_lorentz_family(lclass(0, 1, 1), {0, 1}); });
}

TEST(Families, KappaRealOnlyTurningFunctionLinear) {
  LorentzFamilyParams p;
  p.family = LorentzFamily::KappaRealOnly;
  p.theta = ThetaSpec::polynomial(Polynomial({0.0, 1.0}));
  p.m = 1.0;
  const CurveSpec c = make_lorentz_family(p, {-1, 1});
  for (double s : {-0.8, 0.3, 1.0}) {
    const DualVec2 q = c.point(s);
    EXPECT_NEAR(q.real().x, std::sinh(s), 1e-12);
    EXPECT_NEAR(q.real().y, std::cosh(s) - 1, 1e-12);
    EXPECT_NEAR(q.dual().x, std::cosh(s) - 1, 1e-12);
    EXPECT_NEAR(q.dual().y, std::sinh(s), 1e-12);
    EXPECT_NEAR(frenet(jet(c, s)).kappa.du(), 0.0, 1e-12);
  }
  p.m = 0.0;
  expect_code(ErrorCode::BadParams, [&] { (void)make_lorentz_family(p, {0, 1}); });
}

TEST(Families, KappaRealOnlyFromCurvature) {
  LorentzFamilyParams p;
  p.family = LorentzFamily::KappaRealOnly;
  p.theta = ThetaSpec::from_curvature([](double s) { return 1 + s * s; }, [](double s) { return 2 * s; }, 0.0);
  p.m = 1.5;
  const CurveSpec c = make_lorentz_family(p, {-1, 1});
  for (double s : {-0.5, 0.5}) {
    const FrenetData f = frenet(jet(c, s));
    expect_dual(f.kappa, 1 + s * s, 0, 1e-10);
  }
}

TEST(Families, LightlikeTangentIsNull) {
  const CurveSpec beta = analytic("t^2", "0", "0", "0", {-1, 1});
  const CurveSpec c = make_lightlike({0, 0}, {1, 1}, beta);
  for (double t : sample_grid(c.domain(), 10)) {
    const CurveJet j = jet(c, t);
    EXPECT_EQ(lorentz_dot(j.alpha(1), j.alpha(1)), 0.0);
    EXPECT_EQ(causal_character(j.alpha(1)), CausalClass::Lightlike);
  }
  expect_code(ErrorCode::BadParams, [&] { (void)make_lightlike({0, 0}, {1, 0}, beta); });
}

TEST(StraightLine, ProfileCriterion) {
  EXPECT_TRUE(is_straight_line(Polynomial({1, 3}), {-2, 2}));
  EXPECT_FALSE(is_straight_line(Polynomial({0, 0, 1}), {-2, 2}));
  LorentzFamilyParams p;
  p.family = LorentzFamily::StraightLine;
  p.f = Polynomial({1, 3});
  EXPECT_TRUE(is_straight_line(make_lorentz_family(p, {-1, 1})));
  p.f = Polynomial({0, 0, 1});
  EXPECT_FALSE(is_straight_line(make_lorentz_family(p, {-1, 1})));
  p.w = {1, 0};
  expect_code(ErrorCode::BadParams, [&] { (void)make_lorentz_family(p, {-1, 1}); });
}

TEST(Isometries, GeneratedMatrices) {
  const LorentzIsometry id = generate_isometry(0, false, false, DualVec2());
  EXPECT_EQ(id.a.max_abs_diff(Mat2{1, 0, 0, 1}), 0.0);
  const LorentzIsometry boost = generate_isometry(1.0, false, false, DualVec2());
  EXPECT_NEAR(boost.a.determinant(), 1.0, 1e-15);
  EXPECT_LE(isometry_defect(boost.a), 1e-15);
  const LorentzIsometry ry = generate_isometry(0, false, true, DualVec2());
  EXPECT_EQ(ry.a.max_abs_diff(Mat2{1, 0, 0, -1}), 0.0);
  EXPECT_EQ(isometry_defect(ry.a), 0.0);
  expect_code(ErrorCode::NotIsometry, [] { (void)make_isometry(Mat2{2, 0, 0, 1}, DualVec2()); });
}

TEST(Isometries, PreserveCurvatureAndCausalCharacter) {
  const CurveSpec c = make_lorentz_family(lclass(1.5, 0.6, 0.2), {-1, 1});
  const CurveSpec same = apply_lorentz_isometry(generate_isometry(0, false, false, DualVec2()), c);
  EXPECT_LE((same.point(0.4) - c.point(0.4)).max_abs(), 0.0);

  const DualVec2 b(Dual(0.5, -1), Dual(2, 0.25));
  const CurveSpec boosted = apply_lorentz_isometry(generate_isometry(1.0, false, false, b), c);
  const CurveSpec reflected = apply_lorentz_isometry(generate_isometry(0, false, true, DualVec2()), c);
  for (double s : {-0.5, 0.0, 0.5}) {
    const Dual k = frenet(jet(c, s)).kappa;
    expect_dual(frenet(jet(boosted, s)).kappa, k.re(), k.du(), 1e-8);
    const Dual kfd = fd_curvature_oracle(boosted.without_analytic_jet(), s, kOracleStep, Geometry::Lorentz);
    expect_dual(kfd, k.re(), k.du(), 1e-5);
    EXPECT_EQ(causal_character(jet(reflected, s).alpha(1)), CausalClass::Spacelike);
    EXPECT_NEAR(frenet(jet(reflected, s)).kappa.re(), k.re(), 1e-12);
  }
}
