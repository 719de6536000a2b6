#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "grs3d/curvature_engine.hpp"
#include "grs3d/grs_system.hpp"
#include "oracles/printed_forms.hpp"
#include "oracles/random_instances.hpp"

using namespace grs3d;

namespace {

FamilyInstance inst(FamilyTag tag, ParamMap p) { return make_instance(tag, p); }

double max_abs(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

CandidateSolution cand(Vec3 X, double a, double b, double l) { return {X, {a, b, l}}; }

}  // namespace

TEST(LieDerivative, WorkedExamples) {
  Mat3 want;
  want << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  EXPECT_EQ(lie_derivative_metric(inst(FamilyTag::RiemUnimodular, {{"A", 2}, {"B", 1}, {"C", 1}}), Vec3(0, 0, 1)),
            want);
  const Mat3 g5 = lie_derivative_metric(inst(FamilyTag::G5, {{"A", 1}, {"B", 0}, {"C", 0}, {"D", 1}}), Vec3(0, 0, 1));
  EXPECT_EQ(g5, Vec3(2, 2, 0).asDiagonal().toDenseMatrix());
  std::mt19937_64 rng(1);
  for (FamilyTag tag : kAllFamilies)
    EXPECT_EQ(lie_derivative_metric(oracle::random_instance(tag, rng), Vec3::Zero()), Mat3::Zero());
}

TEST(LieDerivative, MatchesPrintedClosedForms) {
  std::mt19937_64 rng(31);
  for (FamilyTag tag : kAllFamilies) {
    if (!oracle::has_printed_ricci(tag)) continue;
    for (int n = 0; n < 100; ++n) {
      const auto i = oracle::random_instance(tag, rng);
      const Vec3 X = oracle::random_vec(rng, 5.0);
      const Mat3 want = oracle::printed_lie(tag, oracle::P::from(i), X);
      EXPECT_LE(max_abs(lie_derivative_metric(i, X) - want), 1e-10 * std::max(1.0, max_abs(want))) << to_string(tag);
    }
  }
}

TEST(FlatSquare, Examples) {
  Mat3 want;
  want << 1, 2, 3, 2, 4, 6, 3, 6, 9;
  EXPECT_EQ(flat_square(Vec3(1, 2, 3), MetricSignature::riemannian()), want);
  EXPECT_EQ(flat_square(Vec3(0, 0, 1), MetricSignature::lorentzian()), Vec3(0, 0, 1).asDiagonal().toDenseMatrix());
  Mat3 lor;
  lor << 1, 2, -3, 2, 4, -6, -3, -6, 9;
  EXPECT_EQ(flat_square(Vec3(1, 2, 3), MetricSignature::lorentzian()), lor);
  EXPECT_EQ(flat_square(Vec3::Zero(), MetricSignature::lorentzian()), Mat3::Zero());
}

TEST(Residual, TrivialSolution) {
  const auto r = residual(inst(FamilyTag::G2, {{"A", 1}, {"B", 2}, {"C", 3}}), cand(Vec3::Zero(), 1.7, 0, 0));
  EXPECT_EQ(r.inf_norm, 0.0);
  EXPECT_TRUE(r.passes);
  EXPECT_TRUE(r.trivial);
}

TEST(Residual, ClosedFormExamples) {
  const auto ru = residual(inst(FamilyTag::RiemUnimodular, {{"A", 2}, {"B", 1}, {"C", 1}}),
                           cand(Vec3(std::sqrt(2.0), 0, 0), 1, 1, 0));
  EXPECT_LT(ru.inf_norm, 1e-14);
  EXPECT_TRUE(ru.passes);
  EXPECT_FALSE(ru.trivial);
  const auto g4 =
      residual(inst(FamilyTag::G4, {{"A", 1}, {"B", 2}, {"eta", 1}}), cand(Vec3(0, -1, 1), 1, -1, -0.5));
  EXPECT_LT(g4.inf_norm, 1e-14);
  const auto miss = residual(inst(FamilyTag::G4, {{"A", 1}, {"B", 2}, {"eta", 1}}), cand(Vec3(0, -1, 1), 1, -1, 0));
  EXPECT_FALSE(miss.passes);
  EXPECT_NEAR(miss.inf_norm, 1.0, 1e-14);
}

TEST(Residual, MatrixAssemblyAndOrdering) {
  std::mt19937_64 rng(33);
  for (FamilyTag tag : kAllFamilies) {
    const auto i = oracle::random_instance(tag, rng);
    const Vec3 X = oracle::random_vec(rng, 2.0);
    const double a = 0.7, b = -1.3, l = 0.4;
    const Mat3 g = i.signature().metric();
    const Mat3 want = lie_derivative_metric(i, X) + 2 * a * flat_square(X, i.signature()) - 2 * b * ricci(i) - 2 * l * g;
    const auto r = residual(i, cand(X, a, b, l));
    EXPECT_LE(max_abs(r.matrix - want), 1e-12 * std::max(1.0, max_abs(want)));
    EXPECT_EQ(r.matrix, r.matrix.transpose());
    for (int k = 0; k < 6; ++k) EXPECT_EQ(r.six_equations[k], r.matrix(kEquationIndex[k][0], kEquationIndex[k][1]));
    EXPECT_EQ(r.inf_norm, r.matrix.cwiseAbs().maxCoeff());
  }
}

TEST(ScalarSystem, MatchesPrintedSystems) {
  std::mt19937_64 rng(35);
  for (FamilyTag tag : kAllFamilies)
    for (int n = 0; n < 50; ++n) {
      const auto i = oracle::random_instance(tag, rng);
      const Vec3 X = oracle::random_vec(rng, 3.0);
      const double a = oracle::uniform(rng, -3, 3), b = oracle::uniform(rng, -3, 3), l = oracle::uniform(rng, -3, 3);
      const auto printed = oracle::printed_system(tag, oracle::P::from(i), X, a, b, l);
      const auto sys = scalar_system(i, a, b);
      const auto r = residual(i, cand(X, a, b, l));
      for (int k = 0; k < 6; ++k) {
        const auto& line = sys.lines[k];
        const double scale = std::max(1.0, std::abs(printed[k]));
        EXPECT_EQ(line.row, kEquationIndex[k][0]);
        EXPECT_EQ(line.col, kEquationIndex[k][1]);
        EXPECT_EQ(line.scale, oracle::printed_scale(tag, line.row, line.col)) << to_string(tag);
        EXPECT_NEAR(line.lhs(X) - line.lambda_coef * l, printed[k], 1e-10 * scale) << to_string(tag) << " line " << k;
        EXPECT_NEAR(line.scale * r.six_equations[k], printed[k], 1e-10 * scale) << to_string(tag) << " line " << k;
      }
    }
}

TEST(ScalarSystem, ComponentLineExamples) {
  // Riemannian unimodular line 4: (A-B) X3 + 2 alpha X1 X2.
  const auto ru = scalar_system(inst(FamilyTag::RiemUnimodular, {{"A", 3}, {"B", 1}, {"C", 2}}), 0.5, 1.0);
  const Vec3 X(1.5, -2.0, 0.75);
  EXPECT_NEAR(ru.lines[3].lhs(X), (3 - 1) * 0.75 + 2 * 0.5 * 1.5 * -2.0, 1e-14);
  EXPECT_EQ(ru.lines[3].lambda_coef, 0.0);
  // g3 line 5: (C-A) X2 - 2 alpha X1 X3.
  const auto g3 = scalar_system(inst(FamilyTag::G3, {{"A", 3}, {"B", 1}, {"C", 2}}), 0.5, 1.0);
  EXPECT_NEAR(g3.lines[4].lhs(X), (2 - 3) * -2.0 - 2 * 0.5 * 1.5 * 0.75, 1e-14);
  // Abelian: 2 alpha Xi^2 = 2 lambda, 2 alpha Xi Xj = 0.
  const auto ab = scalar_system(inst(FamilyTag::RiemUnimodular, {{"A", 0}, {"B", 0}, {"C", 0}}), 0.5, 1.0, 0.25);
  ASSERT_TRUE(ab.lambda.has_value());
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(ab.lines[k].lhs(X), 2 * 0.5 * X[k] * X[k], 1e-14);
    EXPECT_EQ(ab.lines[k].lambda_coef, 2.0);
  }
  EXPECT_NEAR(ab.lines[5].lhs(X), 2 * 0.5 * X[1] * X[2], 1e-14);
  // Lorentzian third diagonal line carries -2 lambda.
  const auto g1 = scalar_system(inst(FamilyTag::G1, {{"A", 1}, {"B", 1}}), 1, 1);
  EXPECT_EQ(g1.lines[2].lambda_coef, -2.0);
  const auto sl = scalar_system(inst(FamilyTag::SpecialLor, {{"A", 1}, {"B", 1}, {"C", 1}}), 1, 1);
  EXPECT_EQ(sl.lines[0].lambda_coef, 1.0);
  EXPECT_EQ(sl.lines[2].lambda_coef, -1.0);
}

TEST(ResidualModel, AgreesWithResidualAndJacobian) {
  std::mt19937_64 rng(37);
  for (FamilyTag tag : kAllFamilies) {
    const auto i = oracle::random_instance(tag, rng);
    const double a = 1.3, b = -0.6;
    const ResidualModel model(i, a, b);
    const Vec3 X = oracle::random_vec(rng, 2.0);
    const double l = 0.9;
    const auto ev = model.evaluate(X, l);
    const auto r = residual(i, cand(X, a, b, l));
    for (int k = 0; k < 6; ++k) EXPECT_NEAR(ev[k], r.six_equations[k], 1e-12 * std::max(1.0, r.inf_norm));
    const auto J = model.jacobian(X);
    const double h = 1e-6;
    for (int u = 0; u < 4; ++u) {
      Vec3 Xp = X, Xm = X;
      double lp = l, lm = l;
      if (u < 3) {
        Xp[u] += h;
        Xm[u] -= h;
      } else {
        lp += h;
        lm -= h;
      }
      const auto fp = model.evaluate(Xp, lp), fm = model.evaluate(Xm, lm);
      for (int k = 0; k < 6; ++k) EXPECT_NEAR(J(k, u), (fp[k] - fm[k]) / (2 * h), 1e-6) << to_string(tag);
    }
  }
}

TEST(Residual, ScalingCovariance) {
  std::mt19937_64 rng(39);
  for (int n = 0; n < 1000; ++n) {
    const FamilyTag tag = kAllFamilies[n % kAllFamilies.size()];
    const auto i = oracle::random_instance(tag, rng, 3.0);
    const Vec3 X = oracle::random_vec(rng, 3.0);
    const double a = oracle::uniform(rng, -3, 3), b = oracle::uniform(rng, -3, 3), l = oracle::uniform(rng, -3, 3);
    double c = oracle::uniform(rng, 0.2, 5.0);
    if (n % 2) c = -c;
    const auto base = residual(i, cand(X, a, b, l));
    const auto scaled = residual(i, cand(c * X, a / c, c * b, c * l));
    // Relative to the size of the summed terms, which may cancel.
    const double terms = max_abs(lie_derivative_metric(i, X)) + 2 * std::abs(a) * X.squaredNorm() +
                         2 * std::abs(b) * max_abs(ricci(i)) + 2 * std::abs(l);
    EXPECT_LE(max_abs(scaled.matrix - c * base.matrix), 1e-12 * std::abs(c) * std::max(1.0, terms)) << to_string(tag);
  }
}

TEST(Residual, RicciSolitonReduction) {
  std::mt19937_64 rng(41);
  for (FamilyTag tag : kAllFamilies)
    for (int n = 0; n < 20; ++n) {
      const auto i = oracle::random_instance(tag, rng);
      const Vec3 X = oracle::random_vec(rng, 3.0);
      double b = oracle::uniform(rng, 0.2, 3.0);
      if (n % 2) b = -b;
      const double l = oracle::uniform(rng, -3, 3);
      const Mat3 full = residual(i, cand(X, 0, b, l)).matrix;
      const double tol = 1e-12 * std::max(1.0, max_abs(full));
      // Direct rescaling of the beta = 1 residual.
      EXPECT_LE(max_abs(full - b * residual(i, cand(X / b, 0, 1, l / b)).matrix), tol);
      // Standard soliton form L_Y g + 2 Ric = 2 mu g with Y = -X/beta, mu = -lambda/beta.
      const Vec3 Y = -X / b;
      const double mu = -l / b;
      const Mat3 standard = lie_derivative_metric(i, Y) + 2 * ricci(i) - 2 * mu * i.signature().metric();
      EXPECT_LE(max_abs(full + b * standard), tol);
    }
}

TEST(ClassifyNamed, BulletExamples) {
  EXPECT_EQ(classify_named({0, 0, 0}).primary, NamedEquation::Killing);
  EXPECT_EQ(classify_named({0, 0, 2}).primary, NamedEquation::Homothetic);
  EXPECT_EQ(classify_named({0, 1, -0.5}).primary, NamedEquation::RicciSoliton);
  EXPECT_EQ(classify_named({1, -1, 0.7}).primary, NamedEquation::EinsteinWeyl);
  EXPECT_EQ(classify_named({1, -0.5, 0}).primary, NamedEquation::ProjectiveSkew);
  EXPECT_EQ(classify_named({1, -0.5, 1}).primary, NamedEquation::Generic);
  EXPECT_EQ(classify_named({1, 0.5, 2}).primary, NamedEquation::NearHorizon);
  EXPECT_EQ(to_string(NamedEquation::NearHorizon), "NEAR_HORIZON");
}

TEST(ClassifyNamed, ScalingCompatibility) {
  const auto c = classify_named({2, -0.5, 0});
  EXPECT_EQ(c.primary, NamedEquation::Generic);
  EXPECT_TRUE(c.ew_compat);
  ASSERT_TRUE(c.ew_scale.has_value());
  EXPECT_EQ(*c.ew_scale, 2.0);
  // Rescaled by c the triple becomes the E-W normal form.
  const double s = *c.ew_scale;
  EXPECT_EQ(classify_named({2 / s, -0.5 * s, 0}).primary, NamedEquation::EinsteinWeyl);
  const auto rs = classify_named({0, 4, 1});
  EXPECT_TRUE(rs.rs_compat);
  EXPECT_EQ(classify_named({0, 4 * *rs.rs_scale, *rs.rs_scale}).primary, NamedEquation::RicciSoliton);
  const auto vnh = classify_named({1, 1, 0});
  EXPECT_TRUE(vnh.vnh_compat);
  EXPECT_FALSE(vnh.vnh_exact);
  EXPECT_FALSE(vnh.note.empty());
  EXPECT_FALSE(classify_named({1, -1, 0}).vnh_compat);
  EXPECT_TRUE(classify_named({3, -1.0 / 6, 0}).ps_compat);
  EXPECT_FALSE(classify_named({3, -1.0 / 6, 1}).ps_compat);
}

TEST(ClassifyNamed, DimensionDependence) {
  EXPECT_EQ(classify_named({1, -0.5, 0.3}, 4).primary, NamedEquation::EinsteinWeyl);
  EXPECT_EQ(classify_named({1, -1.0 / 3, 0}, 4).primary, NamedEquation::ProjectiveSkew);
  EXPECT_THROW(classify_named({1, 1, 1}, 2), ValidationError);
}

TEST(ClassifyNamed, TotalOnRandomInputs) {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 1000; ++n) {
    const SolitonParams p{oracle::uniform(rng, -3, 3), oracle::uniform(rng, -3, 3), oracle::uniform(rng, -3, 3)};
    EXPECT_EQ(classify_named(p).primary, NamedEquation::Generic);
  }
}
