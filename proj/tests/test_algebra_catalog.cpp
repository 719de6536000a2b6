#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "grs3d/algebra_catalog.hpp"
#include "oracles/random_instances.hpp"

using namespace grs3d;

namespace {

FamilyInstance inst(FamilyTag tag, ParamMap p) { return make_instance(tag, p); }

Vec3 e(int i) { return Vec3::Unit(i); }

}  // namespace

TEST(FamilyCatalog, TagsRoundTrip) {
  for (FamilyTag tag : kAllFamilies) EXPECT_EQ(parse_family(to_string(tag)), tag);
  EXPECT_THROW(parse_family("g8"), SchemaError);
  EXPECT_EQ(to_string(FamilyTag::RiemUnimodular), "riem-unimodular");
}

TEST(FamilyCatalog, UnimodularRiemannianIsValid) {
  const auto i = inst(FamilyTag::RiemUnimodular, {{"A", 1}, {"B", 1}, {"C", 1}});
  EXPECT_FALSE(i.signature().is_lorentzian());
  for (int k = 0; k < 3; ++k) EXPECT_EQ(i.signature()[k], 1.0);
}

TEST(FamilyCatalog, ConstraintViolationsAreRejected) {
  try {
    inst(FamilyTag::G5, {{"A", 1}, {"B", 0}, {"C", 0}, {"D", -1}});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& err) {
    EXPECT_NE(std::string(err.what()).find("A+D != 0"), std::string::npos);
  }
  try {
    inst(FamilyTag::G7, {{"A", 1}, {"B", 2}, {"C", 1}, {"D", 1}});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& err) {
    EXPECT_NE(std::string(err.what()).find("AC = 0"), std::string::npos);
  }
  EXPECT_THROW(inst(FamilyTag::RiemNonunimodular, {{"A", 1}, {"B", 1}, {"C", 1}, {"D", 1}}), ValidationError);
  EXPECT_THROW(inst(FamilyTag::G6, {{"A", 1}, {"B", 1}, {"C", -1}, {"D", 1}}), ValidationError);
  EXPECT_THROW(inst(FamilyTag::G1, {{"A", 0}, {"B", 1}}), ValidationError);
  EXPECT_THROW(inst(FamilyTag::G2, {{"A", 1}, {"B", 1}, {"C", 0}}), ValidationError);
  EXPECT_THROW(inst(FamilyTag::G4, {{"A", 1}, {"B", 1}, {"eta", 0.5}}), ValidationError);
}

TEST(FamilyCatalog, SchemaErrors) {
  EXPECT_THROW(inst(FamilyTag::G1, {{"A", 1}}), SchemaError);
  EXPECT_THROW(inst(FamilyTag::G1, {{"A", 1}, {"B", 0}, {"C", 2}}), SchemaError);
  EXPECT_THROW(inst(FamilyTag::G1, {{"A", 1}, {"B", NAN}}), SchemaError);
  const auto g4 = inst(FamilyTag::G4, {{"A", 1}, {"B", 2}, {"eta", -1}});
  ASSERT_TRUE(g4.eta().has_value());
  EXPECT_EQ(*g4.eta(), Eta::Minus);
  EXPECT_EQ(g4.params().count("eta"), 0u);
  EXPECT_EQ(g4.param_map().at("eta"), -1.0);
}

TEST(FamilyCatalog, ConstraintToleranceScalesWithParameters) {
  // AC + BD = 0 up to rounding of C = -BD/A.
  const double A = 3.0, B = 0.7, D = 1.3;
  EXPECT_NO_THROW(inst(FamilyTag::RiemNonunimodular, {{"A", A}, {"B", B}, {"C", -B * D / A}, {"D", D}}));
  EXPECT_THROW(inst(FamilyTag::RiemNonunimodular, {{"A", A}, {"B", B}, {"C", -B * D / A + 1e-6}, {"D", D}}),
               ValidationError);
}

TEST(StructureTensor, UnimodularRiemannianTable) {
  const auto c = structure_tensor(inst(FamilyTag::RiemUnimodular, {{"A", 2}, {"B", 3}, {"C", 5}}));
  EXPECT_EQ(c(0, 1, 2), 5.0);
  EXPECT_EQ(c(1, 2, 0), 2.0);
  EXPECT_EQ(c(2, 0, 1), 3.0);
  EXPECT_EQ(c(1, 0, 2), -5.0);
  int nonzero = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) nonzero += c(i, j, k) != 0.0;
  EXPECT_EQ(nonzero, 6);
}

TEST(StructureTensor, G4Table) {
  const auto c = structure_tensor(inst(FamilyTag::G4, {{"A", 7}, {"B", 3}, {"eta", 1}}));
  EXPECT_EQ(c(0, 1, 1), -1.0);
  EXPECT_EQ(c(0, 1, 2), 2.0 - 3.0);
  EXPECT_EQ(c(0, 2, 1), -3.0);
  EXPECT_EQ(c(0, 2, 2), 1.0);
  EXPECT_EQ(c(1, 2, 0), 7.0);
}

TEST(StructureTensor, G7Bracket) {
  // [e2, e3] = C e1 + D e2 + D e3
  const auto c = structure_tensor(inst(FamilyTag::G7, {{"A", 0}, {"B", 1}, {"C", 2}, {"D", 3}}));
  EXPECT_EQ(c.bracket(e(1), e(2)), Vec3(2, 3, 3));
}

TEST(StructureTensor, AbelianIsZero) {
  const auto c = structure_tensor(inst(FamilyTag::RiemUnimodular, {{"A", 0}, {"B", 0}, {"C", 0}}));
  EXPECT_EQ(c.max_abs(), 0.0);
}

TEST(StructureTensor, JacobiAndAntisymmetryForRandomDraws) {
  std::mt19937_64 rng(11);
  for (FamilyTag tag : kAllFamilies)
    for (int n = 0; n < 100; ++n) {
      const auto i = oracle::random_instance(tag, rng);
      const auto c = structure_tensor(i);
      EXPECT_LE(c.jacobi_defect(), 1e-12) << to_string(tag);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int k = 0; k < 3; ++k) ASSERT_EQ(c(a, b, k), -c(b, a, k));
    }
}

TEST(StructureTensor, AdjointColumns) {
  std::mt19937_64 rng(3);
  const auto c = structure_tensor(oracle::random_instance(FamilyTag::G5, rng));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(c.ad(i).col(j), c.bracket(e(i), e(j)));
}

TEST(Unimodularity, MatchesFamilySplit) {
  std::mt19937_64 rng(5);
  for (FamilyTag tag : kAllFamilies)
    for (int n = 0; n < 20; ++n) {
      const auto i = oracle::random_instance(tag, rng);
      const bool expected = tag == FamilyTag::RiemUnimodular || tag == FamilyTag::G1 || tag == FamilyTag::G2 ||
                            tag == FamilyTag::G3 || tag == FamilyTag::G4;
      EXPECT_EQ(is_unimodular(i), expected) << to_string(tag);
    }
  EXPECT_FALSE(is_unimodular(inst(FamilyTag::G5, {{"A", 1}, {"B", 0}, {"C", 0}, {"D", 1}})));
  EXPECT_FALSE(is_unimodular(inst(FamilyTag::SpecialRiem, {{"A", 1}, {"B", 0}, {"C", 0}})));
  EXPECT_TRUE(is_unimodular(inst(FamilyTag::SpecialLor, {{"A", 0}, {"B", 0}, {"C", 0}})));
}

TEST(CrossProduct, LorentzianConvention) {
  const auto lor = MetricSignature::lorentzian();
  EXPECT_EQ(cross_product(e(0), e(1), lor), Vec3(0, 0, -1));
  EXPECT_EQ(cross_product(e(1), e(2), lor), Vec3(1, 0, 0));
  EXPECT_EQ(cross_product(e(2), e(0), lor), Vec3(0, 1, 0));
  const Vec3 u(1.5, -2, 0.25);
  EXPECT_EQ(cross_product(u, u, lor), Vec3::Zero());
  EXPECT_EQ(cross_product(u, u, MetricSignature::riemannian()), Vec3::Zero());
  EXPECT_EQ(cross_product(e(0), e(1), MetricSignature::riemannian()), Vec3(0, 0, 1));
}

TEST(LEndomorphism, UnimodularRiemannianIsDiagonal) {
  const auto L = l_endomorphism(inst(FamilyTag::RiemUnimodular, {{"A", 2}, {"B", -1}, {"C", 0.5}}));
  EXPECT_TRUE(L.matrix.isApprox(Vec3(2, -1, 0.5).asDiagonal().toDenseMatrix(), 1e-14));
  EXPECT_EQ(L.label, "DIAGONAL");
}

TEST(LEndomorphism, SegreLabels) {
  const auto g3 = l_endomorphism(inst(FamilyTag::G3, {{"A", 1}, {"B", 2}, {"C", 3}}));
  EXPECT_EQ(g3.label, "DIAGONAL_{11,1}");
  const auto g2 = l_endomorphism(inst(FamilyTag::G2, {{"A", 1}, {"B", 0}, {"C", 1}}));
  EXPECT_EQ(g2.label, "COMPLEX_{1zz}");
  EXPECT_EQ(g2.segre, SegreType::ComplexPair);
  std::mt19937_64 rng(9);
  for (int n = 0; n < 30; ++n) {
    EXPECT_EQ(l_endomorphism(oracle::random_instance(FamilyTag::G1, rng)).segre, SegreType::TripleRoot);
    EXPECT_EQ(l_endomorphism(oracle::random_instance(FamilyTag::G4, rng)).segre, SegreType::DoubleRoot);
  }
}

TEST(LEndomorphism, NonUnimodularThrows) {
  EXPECT_THROW(l_endomorphism(inst(FamilyTag::G5, {{"A", 1}, {"B", 0}, {"C", 0}, {"D", 1}})), DomainError);
}

TEST(LEndomorphism, ReconstructsBrackets) {
  std::mt19937_64 rng(13);
  for (FamilyTag tag : {FamilyTag::RiemUnimodular, FamilyTag::G1, FamilyTag::G2, FamilyTag::G3, FamilyTag::G4})
    for (int n = 0; n < 50; ++n) {
      const auto i = oracle::random_instance(tag, rng);
      const auto c = structure_tensor(i);
      const Mat3 L = l_endomorphism(i).matrix;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          const Vec3 rebuilt = L * cross_product(e(a), e(b), i.signature());
          EXPECT_LE((rebuilt - c.bracket(e(a), e(b))).cwiseAbs().maxCoeff(), 1e-12) << to_string(tag);
        }
    }
}

TEST(GroupIdentification, UnimodularRiemannianTable) {
  auto g = [](double a, double b, double c) {
    return identify_group(inst(FamilyTag::RiemUnimodular, {{"A", a}, {"B", b}, {"C", c}}));
  };
  EXPECT_EQ(g(1, 2, 3), LieGroup::SU2);
  EXPECT_EQ(g(1, 2, -3), LieGroup::SL2R);
  EXPECT_EQ(g(1, 2, 0), LieGroup::E2);
  EXPECT_EQ(g(1, -2, 0), LieGroup::E11);
  EXPECT_EQ(g(1, 0, 0), LieGroup::H3);
  EXPECT_EQ(g(0, 0, 0), LieGroup::R3);
  // Renumbered and globally negated patterns.
  EXPECT_EQ(g(-1, -2, -3), LieGroup::SU2);
  EXPECT_EQ(g(0, -1, 2), LieGroup::E11);
  EXPECT_EQ(g(0, 0, -4), LieGroup::H3);
  EXPECT_EQ(g(-1, 3, 2), LieGroup::SL2R);
}

TEST(GroupIdentification, G3Table) {
  auto g = [](double a, double b, double c) {
    return identify_group(inst(FamilyTag::G3, {{"A", a}, {"B", b}, {"C", c}}));
  };
  EXPECT_EQ(g(1, 1, 1), LieGroup::SL2R);
  EXPECT_EQ(g(1, -1, -1), LieGroup::SL2R);
  EXPECT_EQ(g(1, 1, -1), LieGroup::SU2);
  EXPECT_EQ(g(1, 1, 0), LieGroup::E2);
  EXPECT_EQ(g(1, 0, -1), LieGroup::E2);
  EXPECT_EQ(g(1, -1, 0), LieGroup::E11);
  EXPECT_EQ(g(1, 0, 1), LieGroup::E11);
  EXPECT_EQ(g(1, 0, 0), LieGroup::H3);
  EXPECT_EQ(g(0, 0, -1), LieGroup::H3);
  EXPECT_EQ(g(0, 0, 0), LieGroup::R3);
}

TEST(GroupIdentification, G4Table) {
  auto g = [](double eta, double a, double b) {
    return identify_group(inst(FamilyTag::G4, {{"A", a}, {"B", b}, {"eta", eta}}));
  };
  EXPECT_EQ(g(1, 2, 1), LieGroup::E2);
  EXPECT_EQ(g(1, 2, 3), LieGroup::SL2R);
  EXPECT_EQ(g(1, 0, 3), LieGroup::E11);
  EXPECT_EQ(g(-1, 2, -1), LieGroup::E11);
  EXPECT_EQ(g(-1, -2, -1), LieGroup::E2);
  EXPECT_EQ(g(1, 0, 1), LieGroup::H3);
}

TEST(GroupIdentification, G1G2AndNonUnimodular) {
  EXPECT_EQ(identify_group(inst(FamilyTag::G1, {{"A", 1}, {"B", 0}})), LieGroup::E11);
  EXPECT_EQ(identify_group(inst(FamilyTag::G1, {{"A", 1}, {"B", 2}})), LieGroup::SL2R);
  EXPECT_EQ(identify_group(inst(FamilyTag::G7, {{"A", 1}, {"B", 2}, {"C", 0}, {"D", 1}})),
            LieGroup::UnclassifiedNonunimodular);
  EXPECT_EQ(to_string(LieGroup::SU2), "SU(2)");
  EXPECT_EQ(parse_group("E(1,1)"), LieGroup::E11);
}

TEST(GroupIdentification, InvariantUnderPositiveScaling) {
  std::mt19937_64 rng(17);
  for (FamilyTag tag : {FamilyTag::RiemUnimodular, FamilyTag::G1, FamilyTag::G2, FamilyTag::G3})
    for (int n = 0; n < 50; ++n) {
      const auto i = oracle::random_instance(tag, rng);
      const double s = oracle::uniform(rng, 0.1, 10.0);
      ParamMap scaled = i.param_map();
      for (auto& [k, v] : scaled) v *= s;
      EXPECT_EQ(identify_group(make_instance(tag, scaled)), identify_group(i)) << to_string(tag);
    }
}
