#include "grs3d/grs_system.hpp"

#include <cmath>

#include "grs3d/curvature_engine.hpp"

namespace grs3d {

namespace {

// Matrix of ad(X) = sum_a X_a ad(e_a).
Mat3 ad_of(const StructureTensor& c, const Vec3& X) {
  Mat3 m = Mat3::Zero();
  for (int a = 0; a < 3; ++a)
    if (X[a] != 0.0) m += X[a] * c.ad(a);
  return m;
}

Mat3 lie_derivative_from(const StructureTensor& c, const Mat3& g, const Vec3& X) {
  const Mat3 m = ad_of(c, X);
  return -(m.transpose() * g + g * m);
}

bool near(double x, double target) { return std::abs(x - target) <= kClassifyTol; }

}  // namespace

bool is_trivial(const CandidateSolution& cand) {
  return cand.X.isZero(0.0) && cand.params.beta == 0.0 && cand.params.lambda == 0.0;
}

Mat3 lie_derivative_metric(const FamilyInstance& inst, const Vec3& X) {
  return lie_derivative_from(structure_tensor(inst), inst.signature().metric(), X);
}

Mat3 flat_square(const Vec3& X, const MetricSignature& sig) {
  const Vec3 lowered(sig[0] * X[0], sig[1] * X[1], sig[2] * X[2]);
  return lowered * lowered.transpose();
}

ResidualReport residual(const FamilyInstance& inst, const CandidateSolution& cand, double tol) {
  const auto& [alpha, beta, lambda] = cand.params;
  const MetricSignature& sig = inst.signature();
  ResidualReport rep;
  rep.tol = tol;
  rep.matrix = lie_derivative_metric(inst, cand.X) + 2.0 * alpha * flat_square(cand.X, sig) -
               2.0 * beta * ricci(inst) - 2.0 * lambda * sig.metric();
  // Symmetric by construction; copy the upper triangle down so roundoff in
  // the Ricci sum cannot leave it lopsided.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) rep.matrix(j, i) = rep.matrix(i, j);
  for (int e = 0; e < 6; ++e) {
    rep.six_equations[e] = rep.matrix(kEquationIndex[e][0], kEquationIndex[e][1]);
    rep.inf_norm = std::max(rep.inf_norm, std::abs(rep.six_equations[e]));
  }
  rep.passes = rep.inf_norm < tol;
  rep.trivial = is_trivial(cand);
  return rep;
}

ResidualModel::ResidualModel(const FamilyInstance& inst, double alpha, double beta) {
  const StructureTensor c = structure_tensor(inst);
  const MetricSignature& sig = inst.signature();
  const Mat3 g = sig.metric();
  const Mat3 ric = ricci(inst);
  const Mat3 I = Mat3::Identity();
  std::array<Mat3, 3> lie;
  for (int a = 0; a < 3; ++a) lie[a] = lie_derivative_from(c, g, I.col(a));
  for (int e = 0; e < 6; ++e) {
    const int i = kEquationIndex[e][0], j = kEquationIndex[e][1];
    for (int a = 0; a < 3; ++a) linear_[e][a] = lie[a](i, j);
    constant_[e] = -2.0 * beta * ric(i, j);
    lambda_coef_[e] = -2.0 * g(i, j);
    quad_scale_[e] = 2.0 * alpha * sig[i] * sig[j];
  }
}

std::array<double, 6> ResidualModel::evaluate(const Vec3& X, double lambda) const {
  std::array<double, 6> r{};
  for (int e = 0; e < 6; ++e) {
    const int i = kEquationIndex[e][0], j = kEquationIndex[e][1];
    r[e] = linear_[e].dot(X) + quad_scale_[e] * X[i] * X[j] + constant_[e] + lambda_coef_[e] * lambda;
  }
  return r;
}

Eigen::Matrix<double, 6, 4> ResidualModel::jacobian(const Vec3& X) const {
  Eigen::Matrix<double, 6, 4> J;
  for (int e = 0; e < 6; ++e) {
    const int i = kEquationIndex[e][0], j = kEquationIndex[e][1];
    for (int a = 0; a < 3; ++a) J(e, a) = linear_[e][a];
    J(e, i) += quad_scale_[e] * X[j];
    J(e, j) += quad_scale_[e] * X[i];
    J(e, 3) = lambda_coef_[e];
  }
  return J;
}

double printed_line_scale(FamilyTag tag, int row, int col) {
  const bool special = tag == FamilyTag::SpecialRiem || tag == FamilyTag::SpecialLor;
  return special && row == col ? 0.5 : 1.0;
}

SystemDescriptor scalar_system(const FamilyInstance& inst, double alpha, double beta,
                               std::optional<double> lambda) {
  const StructureTensor c = structure_tensor(inst);
  const MetricSignature& sig = inst.signature();
  const Mat3 g = sig.metric();
  const Mat3 ric = ricci(inst);
  const Mat3 I = Mat3::Identity();
  std::array<Mat3, 3> lie;
  for (int a = 0; a < 3; ++a) lie[a] = lie_derivative_from(c, g, I.col(a));

  SystemDescriptor sys;
  sys.lambda = lambda;
  for (int e = 0; e < 6; ++e) {
    const int i = kEquationIndex[e][0], j = kEquationIndex[e][1];
    SystemLine& line = sys.lines[e];
    line.row = i;
    line.col = j;
    line.scale = printed_line_scale(inst.tag(), i, j);
    for (int a = 0; a < 3; ++a) line.linear[a] = line.scale * lie[a](i, j);
    line.constant = -2.0 * beta * line.scale * ric(i, j);
    // 2 alpha eps_i eps_j X_i X_j split symmetrically over (i,j) and (j,i).
    const double q = 2.0 * alpha * sig[i] * sig[j] * line.scale;
    line.quadratic(i, j) += 0.5 * q;
    line.quadratic(j, i) += 0.5 * q;
    line.lambda_coef = 2.0 * line.scale * g(i, j);
  }
  return sys;
}

std::string_view to_string(NamedEquation eq) {
  switch (eq) {
    case NamedEquation::Killing: return "KILLING";
    case NamedEquation::Homothetic: return "HOMOTHETIC";
    case NamedEquation::RicciSoliton: return "RICCI_SOLITON";
    case NamedEquation::EinsteinWeyl: return "EINSTEIN_WEYL";
    case NamedEquation::ProjectiveSkew: return "PROJECTIVE_SKEW";
    case NamedEquation::NearHorizon: return "NEAR_HORIZON";
    case NamedEquation::Generic: return "GENERIC";
  }
  return "GENERIC";
}

NamedClassification classify_named(const SolitonParams& p, int dim) {
  if (dim < 3) throw ValidationError("classify_named: dimension must be at least 3");
  const double ew_beta = -1.0 / (dim - 2);
  const double ps_beta = -1.0 / (dim - 1);
  const double a = p.alpha, b = p.beta, l = p.lambda;

  NamedClassification out;
  if (near(a, 0) && near(b, 0) && near(l, 0)) out.primary = NamedEquation::Killing;
  else if (near(a, 0) && near(b, 0)) out.primary = NamedEquation::Homothetic;
  else if (near(a, 0) && near(b, 1)) out.primary = NamedEquation::RicciSoliton;
  else if (near(a, 1) && near(b, ew_beta)) out.primary = NamedEquation::EinsteinWeyl;
  else if (near(a, 1) && near(b, ps_beta) && near(l, 0)) out.primary = NamedEquation::ProjectiveSkew;
  else if (near(a, 1) && near(b, 0.5)) out.primary = NamedEquation::NearHorizon;

  const double ab = a * b;
  if (near(a, 0) && !near(b, 0)) {
    out.rs_compat = true;
    out.rs_scale = 1.0 / b;
  }
  if (!near(a, 0)) {
    if (near(ab, ew_beta)) {
      out.ew_compat = true;
      out.ew_scale = a;
    }
    if (near(ab, ps_beta) && near(l, 0)) {
      out.ps_compat = true;
      out.ps_scale = a;
    }
    out.vnh_exact = near(ab, 0.5);
    if (ab > 0.0) {
      out.vnh_compat = true;
      out.vnh_scale = a;
    }
  }
  if (out.vnh_compat && !out.vnh_exact)
    out.note =
        "near-horizon compatibility is keyed on sign(alpha*beta) > 0; the exact normal form "
        "alpha = 1, beta = 1/2 needs alpha*beta = 1/2";
  return out;
}

}  // namespace grs3d
