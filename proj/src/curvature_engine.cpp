#include "grs3d/curvature_engine.hpp"

#include <algorithm>
#include <cmath>

namespace grs3d {

Vec3 ConnectionCoefficients::covariant(const Vec3& u, const Vec3& v) const {
  Vec3 out = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double w = u[i] * v[j];
      if (w == 0.0) continue;
      for (int k = 0; k < 3; ++k) out[k] += w * (*this)(i, j, k);
    }
  return out;
}

Vec3 CurvatureTensor::apply(const Vec3& x, const Vec3& y, const Vec3& z) const {
  Vec3 out = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double w = x[i] * y[j] * z[k];
        if (w == 0.0) continue;
        for (int l = 0; l < 3; ++l) out[l] += w * (*this)(i, j, k, l);
      }
  return out;
}

double CurvatureTensor::max_abs() const {
  double m = 0.0;
  for (double x : r_) m = std::max(m, std::abs(x));
  return m;
}

ConnectionCoefficients connection(const FamilyInstance& inst) {
  const StructureTensor c = structure_tensor(inst);
  const MetricSignature& eps = inst.signature();
  // Lowered structure constants g([e_i, e_j], e_k).
  auto low = [&](int i, int j, int k) { return c(i, j, k) * eps[k]; };
  ConnectionCoefficients gamma;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        gamma(i, j, k) = eps[k] * 0.5 * (low(i, j, k) - low(j, k, i) + low(k, i, j));
  return gamma;
}

CurvatureTensor curvature_tensor(const FamilyInstance& inst) {
  const StructureTensor c = structure_tensor(inst);
  const ConnectionCoefficients gamma = connection(inst);
  const Mat3 I = Mat3::Identity();
  CurvatureTensor r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Vec3 ei = I.col(i), ej = I.col(j);
      const Vec3 bij = c.bracket(ei, ej);
      for (int k = 0; k < 3; ++k) {
        const Vec3 ek = I.col(k);
        const Vec3 v = gamma.covariant(ei, gamma.covariant(ej, ek)) -
                       gamma.covariant(ej, gamma.covariant(ei, ek)) - gamma.covariant(bij, ek);
        for (int l = 0; l < 3; ++l) r(i, j, k, l) = v[l];
      }
    }
  return r;
}

namespace {

Mat3 ricci_from(const CurvatureTensor& r) {
  // eps_i g(R(e_i,e_a)e_b, e_i) = eps_i * eps_i * r(i,a,b,i) = r(i,a,b,i).
  Mat3 ric = Mat3::Zero();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int i = 0; i < 3; ++i) ric(a, b) += r(i, a, b, i);
  return ric;
}

std::optional<double> sectional_from(const CurvatureTensor& r, const MetricSignature& sig,
                                     const Vec3& u, const Vec3& v) {
  const double denom = sig.inner(u, u) * sig.inner(v, v) - sig.inner(u, v) * sig.inner(u, v);
  const double size = u.squaredNorm() * v.squaredNorm();
  if (size == 0.0 || std::abs(denom) <= 1e-12 * size) return std::nullopt;
  return sig.inner(r.apply(u, v, v), u) / denom;
}

}  // namespace

Mat3 ricci(const FamilyInstance& inst) { return ricci_from(curvature_tensor(inst)); }

std::optional<double> sectional_curvature(const FamilyInstance& inst, const Vec3& u, const Vec3& v) {
  return sectional_from(curvature_tensor(inst), inst.signature(), u, v);
}

double curvature_tolerance(const FamilyInstance& inst) {
  const double cmax = structure_tensor(inst).max_abs();
  const double scale = std::max(curvature_tensor(inst).max_abs(), cmax * cmax);
  return std::max(kCurvatureRelTol * scale, 1e-12);
}

bool has_constant_curvature(const FamilyInstance& inst, double* k_out) {
  const CurvatureTensor r = curvature_tensor(inst);
  const MetricSignature& sig = inst.signature();
  const Mat3 g = sig.metric();
  const double tol = curvature_tolerance(inst);
  // Candidate constant from the scalar curvature: s = 6K in dimension three.
  const Mat3 ric = ricci_from(r);
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += sig[i] * ric(i, i);
  const double K = s / 6.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const double model = K * (g(j, k) * (l == i) - g(i, k) * (l == j));
          if (std::abs(r(i, j, k, l) - model) > tol) return false;
        }
  if (k_out) *k_out = K;
  return true;
}

CurvatureReport curvature_report(const FamilyInstance& inst) {
  const CurvatureTensor r = curvature_tensor(inst);
  const MetricSignature& sig = inst.signature();
  CurvatureReport rep;
  rep.tolerance = curvature_tolerance(inst);
  rep.ricci = ricci_from(r);
  for (int i = 0; i < 3; ++i) rep.scalar_curvature += sig[i] * rep.ricci(i, i);

  const Mat3 I = Mat3::Identity();
  const int planes[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int p = 0; p < 3; ++p)
    rep.principal_sectional[p] =
        sectional_from(r, sig, I.col(planes[p][0]), I.col(planes[p][1])).value_or(0.0);

  const Mat3 trace_free = rep.ricci - (rep.scalar_curvature / 3.0) * sig.metric();
  rep.is_einstein = trace_free.cwiseAbs().maxCoeff() <= rep.tolerance;
  rep.is_flat = r.max_abs() <= rep.tolerance;

  double K = 0.0;
  rep.sectional_is_constant = has_constant_curvature(inst, &K);
  if (rep.sectional_is_constant) rep.sectional_constant = K;
  return rep;
}

RecurrenceReport null_recurrence_check(const FamilyInstance& inst, const Vec3& X, double tol) {
  if (!inst.signature().is_lorentzian())
    throw DomainError("null recurrence requires a Lorentzian instance");
  const double xx = X.squaredNorm();
  if (xx == 0.0) throw DomainError("null recurrence requires X != 0");

  const ConnectionCoefficients gamma = connection(inst);
  const double cmax = std::max(1.0, structure_tensor(inst).max_abs());
  RecurrenceReport rep;
  rep.norm_squared = inst.signature().inner(X, X);
  rep.light_like = std::abs(rep.norm_squared) <= tol * xx;

  const Mat3 I = Mat3::Identity();
  Vec3 omega;
  for (int i = 0; i < 3; ++i) {
    const Vec3 v = gamma.covariant(I.col(i), X);
    omega[i] = v.dot(X) / xx;
    rep.defect = std::max(rep.defect, (v - omega[i] * X).norm());
  }
  rep.recurrent = rep.defect <= tol * cmax * std::sqrt(xx);
  if (rep.recurrent) rep.omega = omega;
  return rep;
}

}  // namespace grs3d
