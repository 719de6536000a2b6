#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "grs3d/curvature_engine.hpp"
#include "grs3d/theorem_atlas.hpp"

using namespace grs3d;

TEST(Atlas, CaseCountAndIds) {
  const auto& cases = theorem_cases();
  EXPECT_EQ(cases.size(), 54u);
  std::set<std::string> ids;
  std::map<FamilyTag, int> per_family;
  for (const auto& tc : cases) {
    EXPECT_TRUE(ids.insert(tc.id).second) << "duplicate " << tc.id;
    ++per_family[tc.family];
    EXPECT_TRUE(tc.violated && tc.construct) << tc.id;
  }
  EXPECT_EQ(per_family[FamilyTag::RiemUnimodular], 4);
  EXPECT_EQ(per_family[FamilyTag::RiemNonunimodular], 5);
  EXPECT_EQ(per_family[FamilyTag::G1], 3);
  EXPECT_EQ(per_family[FamilyTag::G2], 1);
  EXPECT_EQ(per_family[FamilyTag::G3], 8);
  EXPECT_EQ(per_family[FamilyTag::G4], 5);
  EXPECT_EQ(per_family[FamilyTag::G5], 7);
  EXPECT_EQ(per_family[FamilyTag::G6], 7);
  EXPECT_EQ(per_family[FamilyTag::G7], 8);
  EXPECT_EQ(per_family[FamilyTag::SpecialRiem], 3);
  EXPECT_EQ(per_family[FamilyTag::SpecialLor], 3);
}

TEST(Atlas, SuspectedTypoFlags) {
  const std::set<std::string> typo = {"g2-1", "g3-7", "g4-4", "g5-2", "g5-6", "g5-7", "g6-6"};
  for (const auto& tc : theorem_cases()) {
    EXPECT_EQ(tc.suspected_typo(), typo.count(tc.id) == 1) << tc.id;
    if (tc.suspected_typo()) EXPECT_FALSE(tc.typo_note.empty()) << tc.id;
  }
}

TEST(Atlas, FindCase) {
  EXPECT_EQ(find_case("g4-1").family, FamilyTag::G4);
  EXPECT_THROW(find_case("g4-9"), SchemaError);
}

TEST(Atlas, InstantiateExpandsSignBranches) {
  const auto c = instantiate("riem-unimodular-4", {{"A", 2}, {"C", 1}, {"alpha", 1}, {"beta", 1}});
  ASSERT_EQ(c.size(), 2u);
  for (const auto& m : c) {
    EXPECT_EQ(m.instance.param("B"), 1.0);
    EXPECT_NEAR(std::abs(m.candidate.X[0]), std::sqrt(2.0), 1e-15);
    EXPECT_EQ(m.candidate.params.lambda, 0.0);
    EXPECT_LT(residual(m.instance, m.candidate).inf_norm, 1e-14);
  }
  EXPECT_NE(c[0].candidate.X[0], c[1].candidate.X[0]);
  EXPECT_NE(c[0].branch, c[1].branch);
}

TEST(Atlas, InstantiateErrors) {
  try {
    instantiate("riem-unimodular-4", {{"A", 1}, {"C", 2}, {"alpha", 1}, {"beta", 1}});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("alpha*beta*A*(A-C) > 0"), std::string::npos);
  }
  EXPECT_THROW(instantiate("riem-unimodular-4", {{"A", 1}, {"alpha", 1}, {"beta", 1}}), SchemaError);
  EXPECT_THROW(instantiate("riem-unimodular-4", {{"A", 2}, {"C", 1}, {"alpha", 1}, {"beta", 1}, {"D", 0}}),
               SchemaError);
  EXPECT_THROW(instantiate("nope", {}), SchemaError);
}

TEST(Atlas, G4CaseOneExample) {
  const auto c = instantiate("g4-1", {{"B", 2}, {"eta", 1}, {"alpha", 1}, {"beta", -1}});
  ASSERT_EQ(c.size(), 2u);
  bool found = false;
  for (const auto& m : c) {
    EXPECT_EQ(m.instance.param("A"), 1.0);
    EXPECT_NEAR(m.candidate.params.lambda, -0.5, 1e-15);
    found |= (m.candidate.X - Vec3(0, -1, 1)).norm() < 1e-15;
  }
  EXPECT_TRUE(found);
}

TEST(Atlas, SamplingIsDeterministicAndAdmissible) {
  for (const auto& tc : theorem_cases()) {
    auto r1 = case_rng(tc.id, 7), r2 = case_rng(tc.id, 7);
    const auto a = sample_free_params(tc, r1), b = sample_free_params(tc, r2);
    ASSERT_TRUE(a.has_value()) << tc.id;
    EXPECT_EQ(*a, *b);
    EXPECT_FALSE(tc.violated(*a).has_value()) << tc.id;
    for (const auto& [k, v] : *a) {
      if (k == "eta") {
        EXPECT_EQ(std::abs(v), 1.0);
      } else {
        EXPECT_GE(std::abs(v), kSampleFloor) << tc.id << ' ' << k;
        EXPECT_LE(std::abs(v), kSampleBox) << tc.id << ' ' << k;
      }
    }
  }
  auto ra = case_rng("g1-1", 0), rb = case_rng("g1-2", 0);
  EXPECT_NE(ra(), rb());
}

TEST(Atlas, EveryCasePassesOnASmallSample) {
  for (const auto& tc : theorem_cases()) {
    const auto rep = verify_case(tc.id, 10, 1, kDefaultTol);
    EXPECT_TRUE(rep.passes) << tc.id << ": " << rep.literal.first_failure;
    if (tc.suspected_typo()) {
      ASSERT_TRUE(rep.corrected.has_value()) << tc.id;
      EXPECT_TRUE(rep.corrected->passes) << tc.id;
      EXPECT_TRUE(rep.reading_passed == "corrected" || rep.reading_passed == "both") << tc.id;
    } else {
      EXPECT_FALSE(rep.corrected.has_value()) << tc.id;
      EXPECT_EQ(rep.reading_passed, "literal") << tc.id;
    }
  }
}

TEST(Atlas, TypoCasesFailUnderLiteralReading) {
  for (const char* id : {"g2-1", "g3-7", "g4-4", "g5-2", "g5-6", "g5-7", "g6-6"}) {
    const auto rep = verify_case(id, 20, 0, kDefaultTol);
    EXPECT_FALSE(rep.literal.passes) << id;
    EXPECT_EQ(rep.reading_passed, "corrected") << id;
    EXPECT_FALSE(rep.literal.first_failure.empty()) << id;
  }
}

TEST(Atlas, VerifyCaseValidation) {
  EXPECT_THROW(verify_case("g1-1", 0, 0), ValidationError);
  EXPECT_THROW(verify_case("g1-9", 5, 0), SchemaError);
}

TEST(Atlas, NotesAgreeWithCurvature) {
  for (const auto& tc : theorem_cases()) {
    if ((tc.notes & (kNoteEinstein | kNoteFlat)) == 0) continue;
    auto rng = case_rng(tc.id, 3);
    const auto free = sample_free_params(tc, rng);
    ASSERT_TRUE(free.has_value());
    for (const auto& m : instantiate(tc.id, *free)) {
      const auto rep = curvature_report(m.instance);
      if (tc.notes & kNoteEinstein) EXPECT_TRUE(rep.is_einstein) << tc.id;
      if (tc.notes & kNoteFlat) EXPECT_TRUE(rep.is_flat) << tc.id;
    }
  }
}

TEST(Atlas, NoteNames) {
  EXPECT_EQ(note_names(kNoteEinstein | kNoteSuspectedTypo), (std::vector<std::string>{"EINSTEIN", "SUSPECTED_TYPO"}));
  EXPECT_TRUE(note_names(0).empty());
}

TEST(Corollaries, AllClaimsPass) {
  const auto& claims = corollary_claims();
  EXPECT_EQ(claims.size(), 9u);
  for (const auto& c : claims) {
    const auto rep = verify_corollary(c.id);
    EXPECT_TRUE(rep.passes) << c.id;
    EXPECT_EQ(rep.pairs.size(), c.pairs.size());
    for (const auto& p : rep.pairs) {
      EXPECT_NE(p.status, "FAILED") << c.id << ' ' << to_string(p.group) << ' ' << to_string(p.equation);
      if (p.status == "WITNESSED") {
        EXPECT_TRUE(p.group_ok && p.equation_ok && p.residual_ok);
        ASSERT_TRUE(p.candidate.has_value());
        EXPECT_EQ(identify_group(p.candidate->instance), p.group);
        EXPECT_LT(residual(p.candidate->instance, p.candidate->candidate).inf_norm, kDefaultTol);
      }
    }
  }
  EXPECT_THROW(verify_corollary("g2"), SchemaError);
}

TEST(Corollaries, RefutedPairsAreUnwitnessed) {
  const auto g3 = verify_corollary("g3");
  const auto g4 = verify_corollary("g4");
  int unwitnessed = 0;
  for (const auto* rep : {&g3, &g4})
    for (const auto& p : rep->pairs)
      if (p.status == "UNWITNESSED") {
        ++unwitnessed;
        EXPECT_TRUE((p.group == LieGroup::H3 && p.equation == ClaimedEquation::ProjectiveSkew) ||
                    (p.group == LieGroup::E11 && p.equation == ClaimedEquation::NearHorizon));
      }
  EXPECT_EQ(unwitnessed, 2);
}

TEST(Matching, SolverPointsAreMatchedToCases) {
  const auto inst = make_instance(FamilyTag::RiemUnimodular, {{"A", 2}, {"B", 1}, {"C", 1}});
  const auto ids = match_solution(inst, {Vec3(std::sqrt(2.0), 0, 0), {1, 1, 0}});
  ASSERT_FALSE(ids.empty());
  EXPECT_EQ(ids.front().rfind("riem-unimodular-4", 0), 0u);
  // Renumbered frame: the odd constant on e2.
  const auto perm = make_instance(FamilyTag::RiemUnimodular, {{"A", 1}, {"B", 2}, {"C", 1}});
  const auto pid = match_solution(perm, {Vec3(0, std::sqrt(2.0), 0), {1, 1, 0}});
  ASSERT_FALSE(pid.empty());
  EXPECT_NE(pid.front().find("@perm"), std::string::npos);
  EXPECT_TRUE(match_solution(inst, {Vec3(1, 1, 1), {1, 1, 0}}).empty());
}

TEST(Matching, AnnotateSolutionSet) {
  const auto inst = make_instance(FamilyTag::G4, {{"A", 1}, {"B", 2}, {"eta", 1}});
  SolutionSet set = solve(inst, 1, -1, std::nullopt);
  annotate_matches(inst, set);
  bool matched = false;
  for (const auto& s : set.solutions)
    for (const auto& id : s.matches) matched |= id.rfind("g4-1", 0) == 0;
  EXPECT_TRUE(matched);
}
