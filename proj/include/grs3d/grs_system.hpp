#pragma once

// Residual of  L_X g + 2 alpha X^b (.) X^b - 2 beta Ric - 2 lambda g = 0
// for left-invariant X, the per-family scalar systems, and the named
// special cases of the equation.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grs3d/algebra_catalog.hpp"

namespace grs3d {

struct SolitonParams {
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
};

struct CandidateSolution {
  Vec3 X = Vec3::Zero();
  SolitonParams params;
};

/// X = 0 together with beta = lambda = 0.
bool is_trivial(const CandidateSolution& cand);

/// Component order of the six independent equations.
inline constexpr std::array<std::array<int, 2>, 6> kEquationIndex = {
    {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};

inline constexpr double kDefaultTol = 1e-9;

struct ResidualReport {
  Mat3 matrix;
  std::array<double, 6> six_equations{};
  double inf_norm = 0.0;
  double tol = kDefaultTol;
  bool passes = false;
  bool trivial = false;
};

/// (L_X g)(e_i, e_j) = -g([X,e_i],e_j) - g(e_i,[X,e_j]).
Mat3 lie_derivative_metric(const FamilyInstance& inst, const Vec3& X);

/// eps_i eps_j X_i X_j.
Mat3 flat_square(const Vec3& X, const MetricSignature& sig);

ResidualReport residual(const FamilyInstance& inst, const CandidateSolution& cand,
                        double tol = kDefaultTol);

/// The six residual entries as explicit polynomials in (X, lambda) for fixed
/// instance and (alpha, beta). Used by the solver.
class ResidualModel {
 public:
  ResidualModel(const FamilyInstance& inst, double alpha, double beta);

  /// Residual entries in kEquationIndex order.
  std::array<double, 6> evaluate(const Vec3& X, double lambda) const;
  /// 6x4 Jacobian; column 3 is d/d lambda.
  Eigen::Matrix<double, 6, 4> jacobian(const Vec3& X) const;

 private:
  std::array<Vec3, 6> linear_;
  std::array<double, 6> constant_{};
  std::array<double, 6> lambda_coef_{};
  std::array<double, 6> quad_scale_{};  // 2 alpha eps_i eps_j
};

/// One printed-layout line:
///   scale * residual(row,col) = lhs(X) - lambda_coef * lambda
/// with lhs(X) = constant + linear . X + X^T quadratic X.
struct SystemLine {
  int row = 0;
  int col = 0;
  double scale = 1.0;
  double constant = 0.0;
  Vec3 linear = Vec3::Zero();
  Mat3 quadratic = Mat3::Zero();
  double lambda_coef = 0.0;

  double lhs(const Vec3& X) const { return constant + linear.dot(X) + X.dot(quadratic * X); }
};

struct SystemDescriptor {
  std::array<SystemLine, 6> lines;
  /// Lambda value if it was supplied; otherwise lambda is an unknown.
  std::optional<double> lambda;
};

/// Per-family layout scale of the printed diagonal lines (1 or 1/2).
double printed_line_scale(FamilyTag tag, int row, int col);

SystemDescriptor scalar_system(const FamilyInstance& inst, double alpha, double beta,
                               std::optional<double> lambda = std::nullopt);

enum class NamedEquation {
  Killing,
  Homothetic,
  RicciSoliton,
  EinsteinWeyl,
  ProjectiveSkew,
  NearHorizon,
  Generic,
};

/// "KILLING", "HOMOTHETIC", "RICCI_SOLITON", "EINSTEIN_WEYL",
/// "PROJECTIVE_SKEW", "NEAR_HORIZON", "GENERIC".
std::string_view to_string(NamedEquation eq);

inline constexpr double kClassifyTol = 1e-12;

struct NamedClassification {
  NamedEquation primary = NamedEquation::Generic;
  /// Reachable under (X, a, b, l) -> (cX, a/c, cb, cl), c != 0.
  bool rs_compat = false;
  bool ew_compat = false;
  bool ps_compat = false;
  /// Sign-keyed: alpha * beta > 0.
  bool vnh_compat = false;
  /// alpha * beta equals the exact near-horizon product 1/2.
  bool vnh_exact = false;
  /// Scale c mapping onto the named normal form, when compatible.
  std::optional<double> rs_scale, ew_scale, ps_scale, vnh_scale;
  std::string note;
};

NamedClassification classify_named(const SolitonParams& params, int dim = 3);

}  // namespace grs3d
