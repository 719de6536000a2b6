#pragma once

// Closed-form solution families for each metric Lie algebra family, their
// randomized verification, and the named-equation existence claims.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "grs3d/algebra_catalog.hpp"
#include "grs3d/grs_system.hpp"
#include "grs3d/soliton_solver.hpp"

namespace grs3d {

enum CaseNote : unsigned {
  kNoteEinstein = 1u << 0,
  kNoteFlat = 1u << 1,
  kNoteKillingContinuum = 1u << 2,
  kNoteRicciSoliton = 1u << 3,
  kNoteSuspectedTypo = 1u << 4,
};

/// "EINSTEIN", "FLAT", "KILLING_CONTINUUM", "RICCI_SOLITON", "SUSPECTED_TYPO".
std::vector<std::string> note_names(unsigned notes);

/// Literal: the formulas exactly as printed. Corrected: the reading that
/// satisfies the equation (differs only for SUSPECTED_TYPO cases).
enum class Reading { Literal, Corrected };

/// One sign branch of a case, before validation.
struct CaseBranch {
  std::string label;
  ParamMap family_params;
  SolitonParams soliton;
  Vec3 X = Vec3::Zero();
};

struct TheoremCase {
  std::string id;
  FamilyTag family = FamilyTag::RiemUnimodular;
  /// Names drawn from A, B, C, D, eta, alpha, beta, lambda, X1, X2, X3.
  std::vector<std::string> free_params;
  unsigned notes = 0;
  /// How the corrected reading differs from the printed one.
  std::string typo_note;
  /// Human-readable admissibility condition.
  std::string admissibility;
  /// Returns the violated condition, or nullopt when admissible.
  std::function<std::optional<std::string>(const ParamMap&)> violated;
  std::function<std::vector<CaseBranch>(const ParamMap&, Reading)> construct;

  bool suspected_typo() const { return (notes & kNoteSuspectedTypo) != 0; }
};

const std::vector<TheoremCase>& theorem_cases();
/// Throws SchemaError for an unknown id.
const TheoremCase& find_case(std::string_view id);

struct MaterializedCandidate {
  std::string branch;
  FamilyInstance instance;
  CandidateSolution candidate;
};

/// All sign branches. Throws DomainError naming the violated condition,
/// SchemaError on missing/extra free parameters, ValidationError when the
/// constructed structure constants leave the family.
std::vector<MaterializedCandidate> instantiate(std::string_view case_id, const ParamMap& free,
                                               Reading reading = Reading::Corrected);

/// Sampling box for free scalars: uniform in [-kSampleBox, kSampleBox] with
/// |x| >= kSampleFloor; eta uniform in {+1, -1}.
inline constexpr double kSampleBox = 3.0;
inline constexpr double kSampleFloor = 0.1;
/// Draws whose materialized values exceed this magnitude are rejected.
inline constexpr double kConditioningGuard = 100.0;

/// Draws an admissible free-parameter tuple whose branches all materialize
/// within the conditioning guard under the corrected reading.
std::optional<ParamMap> sample_free_params(const TheoremCase& tc, std::mt19937_64& rng,
                                           int max_attempts = 100000);

/// Deterministic generator for one case.
std::mt19937_64 case_rng(std::string_view case_id, std::uint64_t seed);

struct ReadingReport {
  int evaluated = 0;
  int failures = 0;
  double max_residual = 0.0;
  bool passes = false;
  /// Worst residual per branch label.
  std::map<std::string, double> branch_max;
  std::string first_failure;
};

struct CaseReport {
  std::string id;
  FamilyTag family = FamilyTag::RiemUnimodular;
  unsigned notes = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  int rejected_draws = 0;
  ReadingReport literal;
  std::optional<ReadingReport> corrected;
  /// "literal", "corrected", "both" or "none".
  std::string reading_passed;
  /// Non-typo: literal passes. Typo: corrected passes.
  bool passes = false;
  std::string typo_note;
};

/// Throws SchemaError for an unknown id, ValidationError for samples < 1.
CaseReport verify_case(std::string_view case_id, int samples, std::uint64_t seed, double tol = kDefaultTol);

enum class ClaimedEquation { EinsteinWeyl, ProjectiveSkew, NearHorizon };
/// "E-W", "PS", "VN-H".
std::string_view to_string(ClaimedEquation eq);

struct SearchInstance {
  ParamMap family_params;
  double alpha = 1.0;
  double beta = 0.0;
  /// Fixed lambda (PS needs lambda = 0); free when absent.
  std::optional<double> lambda;
};

struct ClaimPair {
  LieGroup group = LieGroup::R3;
  ClaimedEquation equation = ClaimedEquation::EinsteinWeyl;
  /// Case witness: case id, free parameters and branch label.
  std::string case_id;
  ParamMap free;
  std::string branch;
  /// Search witness (used when no closed-form case reaches the pair).
  std::vector<SearchInstance> search;
};

struct CorollaryClaim {
  std::string id;
  FamilyTag family = FamilyTag::RiemUnimodular;
  std::vector<ClaimPair> pairs;
};

const std::vector<CorollaryClaim>& corollary_claims();

struct PairReport {
  LieGroup group = LieGroup::R3;
  ClaimedEquation equation = ClaimedEquation::EinsteinWeyl;
  /// "WITNESSED", "UNWITNESSED" (search found nothing) or "FAILED".
  std::string status;
  std::string witness;
  bool group_ok = false;
  bool equation_ok = false;
  bool residual_ok = false;
  double residual = 0.0;
  std::optional<MaterializedCandidate> candidate;
};

struct CorollaryReport {
  std::string id;
  std::vector<PairReport> pairs;
  /// At least one WITNESSED pair and no FAILED pair.
  bool passes = false;
};

/// Throws SchemaError for an unknown claim id.
CorollaryReport verify_corollary(std::string_view claim_id, double tol = kDefaultTol,
                                 const SolveConfig& search_cfg = {});

/// Case ids (with a "@perm" suffix for renumbered frames) that reproduce
/// the candidate on this instance within tol in (X, lambda).
std::vector<std::string> match_solution(const FamilyInstance& inst, const CandidateSolution& cand,
                                        double tol = 1e-6);

void annotate_matches(const FamilyInstance& inst, SolutionSet& set, double tol = 1e-6);

}  // namespace grs3d
