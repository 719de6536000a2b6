#pragma once

// Levi-Civita connection, Riemann and Ricci tensors of a left-invariant
// metric, with Einstein / flat / constant-curvature predicates.

#include <array>
#include <optional>

#include "grs3d/algebra_catalog.hpp"

namespace grs3d {

/// gamma(i,j,k): nabla_{e_i} e_j = sum_k gamma(i,j,k) e_k.
class ConnectionCoefficients {
 public:
  double operator()(int i, int j, int k) const { return g_[(i * 3 + j) * 3 + k]; }
  double& operator()(int i, int j, int k) { return g_[(i * 3 + j) * 3 + k]; }

  /// nabla_u v for constant-coefficient fields u, v.
  Vec3 covariant(const Vec3& u, const Vec3& v) const;

 private:
  std::array<double, 27> g_{};
};

/// r(i,j,k,l): R(e_i, e_j) e_k = sum_l r(i,j,k,l) e_l with
/// R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
class CurvatureTensor {
 public:
  double operator()(int i, int j, int k, int l) const { return r_[idx(i, j, k, l)]; }
  double& operator()(int i, int j, int k, int l) { return r_[idx(i, j, k, l)]; }

  Vec3 apply(const Vec3& x, const Vec3& y, const Vec3& z) const;
  double max_abs() const;

 private:
  static constexpr int idx(int i, int j, int k, int l) { return ((i * 3 + j) * 3 + k) * 3 + l; }
  std::array<double, 81> r_{};
};

ConnectionCoefficients connection(const FamilyInstance& inst);
CurvatureTensor curvature_tensor(const FamilyInstance& inst);

/// Ric(e_a, e_b) = sum_i eps_i g(R(e_i, e_a) e_b, e_i).
Mat3 ricci(const FamilyInstance& inst);

/// Sectional curvature of span{u, v}; nullopt on degenerate (incl. null) planes.
std::optional<double> sectional_curvature(const FamilyInstance& inst, const Vec3& u, const Vec3& v);

struct CurvatureReport {
  Mat3 ricci;
  double scalar_curvature = 0.0;
  /// K(e2,e3), K(e1,e3), K(e1,e2).
  std::array<double, 3> principal_sectional{};
  bool sectional_is_constant = false;
  bool is_einstein = false;
  bool is_flat = false;
  std::optional<double> sectional_constant;
  /// Tolerance actually used for the predicates.
  double tolerance = 0.0;
};

/// Relative tolerance for curvature predicates; the absolute floor is 1e-12.
inline constexpr double kCurvatureRelTol = 1e-10;

/// Tolerance scale: max(|R|, |c|^2) so that near-flat instances with large
/// brackets do not collapse to the absolute floor.
double curvature_tolerance(const FamilyInstance& inst);

CurvatureReport curvature_report(const FamilyInstance& inst);

/// Constant sectional curvature decided from the full tensor:
/// R(X,Y)Z = K (g(Y,Z)X - g(X,Z)Y).
bool has_constant_curvature(const FamilyInstance& inst, double* k_out = nullptr);

struct RecurrenceReport {
  double norm_squared = 0.0;
  bool light_like = false;
  bool recurrent = false;
  /// omega_i with nabla_{e_i} X = omega_i X, when recurrent.
  std::optional<Vec3> omega;
  /// Largest |nabla_{e_i} X - omega_i X| over i, for diagnostics.
  double defect = 0.0;
};

/// Light-likeness and recurrence of a left-invariant field. Throws
/// DomainError for X = 0 or Riemannian instances.
RecurrenceReport null_recurrence_check(const FamilyInstance& inst, const Vec3& X, double tol = 1e-10);

}  // namespace grs3d
