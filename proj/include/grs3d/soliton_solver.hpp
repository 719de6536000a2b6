#pragma once

// Multistart Levenberg-Marquardt solver for left-invariant soliton vectors,
// plus grid sweeps producing per-point existence rows.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "grs3d/algebra_catalog.hpp"
#include "grs3d/grs_system.hpp"

namespace grs3d {

enum class Unknowns { XOnly, XAndLambda };

struct SolveConfig {
  /// Defaults to XOnly when lambda is supplied, XAndLambda otherwise; an
  /// explicit value must agree with whether lambda was supplied.
  std::optional<Unknowns> unknowns;
  int starts = 200;
  std::uint64_t seed = 0;
  double box = 10.0;
  double tol = kDefaultTol;
  double dedup_radius = 1e-4;
  int max_iters = 200;
  /// 0 picks hardware concurrency. Results do not depend on it.
  int threads = 0;
};

/// Throws ValidationError on starts < 1, tol <= 0, dedup_radius <= 0,
/// box <= 0 or max_iters < 1.
void validate(const SolveConfig& cfg);

/// Distinct-point count at radius dedup_radius/10 that marks a continuum.
/// Ten times the Bezout bound 2^3 of the three diagonal quadratics.
inline constexpr int kManifoldThreshold = 80;

struct FoundSolution {
  CandidateSolution candidate;
  double residual = 0.0;
  bool trivial = false;
  /// Theorem case ids reproducing this point; filled by annotate_matches().
  std::vector<std::string> matches;
};

struct StartRecord {
  int index = 0;
  int iterations = 0;
  double final_residual = 0.0;
  bool converged = false;
};

struct SolutionSet {
  std::vector<FoundSolution> solutions;
  bool manifold_flag = false;
  int converged_starts = 0;
  int distinct_fine = 0;
  std::vector<StartRecord> diagnostics;
};

SolutionSet solve(const FamilyInstance& inst, double alpha, double beta,
                  std::optional<double> lambda, const SolveConfig& cfg = {});

/// Axis values per parameter; ties copy one parameter from another
/// (e.g. C=B) and are applied after the Cartesian product.
struct ParamGrid {
  std::vector<std::pair<std::string, std::vector<double>>> axes;
  std::vector<std::pair<std::string, std::string>> ties;
};

/// "K=start:stop:count" (inclusive linspace) or "K=v1;v2;..." / "K=v".
std::pair<std::string, std::vector<double>> parse_axis(const std::string& spec);
/// "C=B".
std::pair<std::string, std::string> parse_tie(const std::string& spec);

struct SweepRow {
  FamilyTag family = FamilyTag::RiemUnimodular;
  ParamMap params;
  double alpha = 0.0;
  double beta = 0.0;
  /// Solutions other than the trivial one.
  int n_solutions = 0;
  /// Among them, solutions with |X| > dedup_radius.
  int n_nonzero_x = 0;
  double min_residual = 0.0;
  bool manifold_flag = false;
  bool ew_compat = false;
  bool ps_compat = false;
  bool vnh_compat = false;
  SolutionSet solutions;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// "A=..,B=..: reason" for grid points failing the family constraints.
  std::vector<std::string> skipped;
};

/// Throws ValidationError when the grid is empty.
SweepResult sweep(FamilyTag family, const ParamGrid& grid, double alpha, double beta,
                  const SolveConfig& cfg = {});

inline constexpr const char* kSweepCsvHeader =
    "family,A,B,C,D,eta,alpha,beta,n_solutions,min_residual,ew_compat,ps_compat,vnh_compat";

void write_sweep_csv(const SweepResult& result, std::ostream& out);

}  // namespace grs3d
