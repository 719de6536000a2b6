#include "grs3d/algebra_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace grs3d {

namespace {

constexpr std::string_view kABC[] = {"A", "B", "C"};
constexpr std::string_view kABCD[] = {"A", "B", "C", "D"};
constexpr std::string_view kAB[] = {"A", "B"};
constexpr std::string_view kABEta[] = {"A", "B", "eta"};

struct FamilyName {
  FamilyTag tag;
  std::string_view name;
};

constexpr FamilyName kNames[] = {
    {FamilyTag::RiemUnimodular, "riem-unimodular"},
    {FamilyTag::RiemNonunimodular, "riem-nonunimodular"},
    {FamilyTag::G1, "g1"},
    {FamilyTag::G2, "g2"},
    {FamilyTag::G3, "g3"},
    {FamilyTag::G4, "g4"},
    {FamilyTag::G5, "g5"},
    {FamilyTag::G6, "g6"},
    {FamilyTag::G7, "g7"},
    {FamilyTag::SpecialRiem, "special-riem"},
    {FamilyTag::SpecialLor, "special-lor"},
};

double max_abs_param(const ParamMap& p) {
  double m = 0.0;
  for (const auto& [k, v] : p) m = std::max(m, std::abs(v));
  return m;
}

// "x == 0" for a quantity that is a product of two parameters.
bool vanishes(double x, double scale) {
  return std::abs(x) <= kConstraintTol * std::max(1.0, scale);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_constraints(FamilyTag tag, const ParamMap& p) {
  auto get = [&](std::string_view k) { return p.find(k)->second; };
  const double m = max_abs_param(p);
  auto require_nonzero = [&](double v, double scale, const char* what) {
    if (vanishes(v, scale))
      throw ValidationError(std::string(to_string(tag)) + ": constraint " + what +
                            " violated (value " + fmt(v) + ")");
  };
  auto require_zero = [&](double v, double scale, const char* what) {
    if (!vanishes(v, scale))
      throw ValidationError(std::string(to_string(tag)) + ": constraint " + what +
                            " violated (value " + fmt(v) + ")");
  };
  switch (tag) {
    case FamilyTag::RiemNonunimodular:
    case FamilyTag::G5: {
      const double A = get("A"), B = get("B"), C = get("C"), D = get("D");
      require_nonzero(A + D, m, "A+D != 0");
      require_zero(A * C + B * D, m * m, "AC+BD = 0");
      break;
    }
    case FamilyTag::G6: {
      const double A = get("A"), B = get("B"), C = get("C"), D = get("D");
      require_nonzero(A + D, m, "A+D != 0");
      require_zero(A * C - B * D, m * m, "AC-BD = 0");
      break;
    }
    case FamilyTag::G7: {
      const double A = get("A"), C = get("C"), D = get("D");
      require_nonzero(A + D, m, "A+D != 0");
      require_zero(A * C, m * m, "AC = 0");
      break;
    }
    case FamilyTag::G1:
      if (get("A") == 0.0) throw ValidationError("g1: constraint A != 0 violated");
      break;
    case FamilyTag::G2:
      if (get("C") == 0.0) throw ValidationError("g2: constraint C != 0 violated");
      break;
    default:
      break;
  }
}

void set_bracket(StructureTensor& c, int i, int j, double v0, double v1, double v2) {
  const double v[3] = {v0, v1, v2};
  for (int k = 0; k < 3; ++k) {
    c(i, j, k) = v[k];
    c(j, i, k) = -v[k];
  }
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// Milnor class of a diagonal unimodular algebra from the signs of its
// three eigenvalues, up to permutation and overall sign.
LieGroup milnor_class(double a, double b, double c) {
  int pos = 0, neg = 0;
  for (double x : {a, b, c}) {
    if (x > 0.0) ++pos;
    else if (x < 0.0) ++neg;
  }
  if (neg > pos) std::swap(pos, neg);
  const int zero = 3 - pos - neg;
  if (pos == 3) return LieGroup::SU2;
  if (pos == 2 && neg == 1) return LieGroup::SL2R;
  if (pos == 2 && zero == 1) return LieGroup::E2;
  if (pos == 1 && neg == 1) return LieGroup::E11;
  if (pos == 1) return LieGroup::H3;
  return LieGroup::R3;
}

}  // namespace

std::string_view to_string(FamilyTag tag) {
  for (const auto& n : kNames)
    if (n.tag == tag) return n.name;
  return "unknown";
}

FamilyTag parse_family(std::string_view name) {
  for (const auto& n : kNames)
    if (n.name == name) return n.tag;
  throw SchemaError("unknown family '" + std::string(name) + "'");
}

std::span<const std::string_view> required_params(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::RiemUnimodular:
    case FamilyTag::G2:
    case FamilyTag::G3:
    case FamilyTag::SpecialRiem:
    case FamilyTag::SpecialLor:
      return kABC;
    case FamilyTag::G1:
      return kAB;
    case FamilyTag::G4:
      return kABEta;
    default:
      return kABCD;
  }
}

MetricSignature signature_of(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::RiemUnimodular:
    case FamilyTag::RiemNonunimodular:
    case FamilyTag::SpecialRiem:
      return MetricSignature::riemannian();
    default:
      return MetricSignature::lorentzian();
  }
}

double FamilyInstance::param(std::string_view name) const {
  if (name == "eta") {
    if (!eta_) throw SchemaError("family has no parameter 'eta'");
    return static_cast<double>(static_cast<int>(*eta_));
  }
  auto it = params_.find(name);
  if (it == params_.end())
    throw SchemaError(std::string(to_string(tag_)) + " has no parameter '" + std::string(name) + "'");
  return it->second;
}

double FamilyInstance::param_or_zero(std::string_view name) const {
  if (name == "eta") return eta_ ? static_cast<double>(static_cast<int>(*eta_)) : 0.0;
  auto it = params_.find(name);
  return it == params_.end() ? 0.0 : it->second;
}

ParamMap FamilyInstance::param_map() const {
  ParamMap out = params_;
  if (eta_) out["eta"] = static_cast<double>(static_cast<int>(*eta_));
  return out;
}

FamilyInstance make_instance(FamilyTag tag, const ParamMap& params) {
  const auto req = required_params(tag);
  for (auto name : req)
    if (!params.contains(name))
      throw SchemaError(std::string(to_string(tag)) + ": missing parameter '" + std::string(name) + "'");
  for (const auto& [k, v] : params) {
    if (std::find(req.begin(), req.end(), k) == req.end())
      throw SchemaError(std::string(to_string(tag)) + ": unexpected parameter '" + k + "'");
    if (!std::isfinite(v)) throw SchemaError("parameter '" + k + "' is not finite");
  }
  ParamMap real;
  std::optional<Eta> eta;
  for (const auto& [k, v] : params) {
    if (k == "eta") {
      if (v == 1.0) eta = Eta::Plus;
      else if (v == -1.0) eta = Eta::Minus;
      else throw ValidationError("g4: constraint eta = +-1 violated (value " + fmt(v) + ")");
    } else {
      real.emplace(k, v);
    }
  }
  check_constraints(tag, real);
  return FamilyInstance(tag, std::move(real), eta);
}

Vec3 StructureTensor::bracket(const Vec3& u, const Vec3& v) const {
  Vec3 out = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double w = u[i] * v[j];
      if (w == 0.0) continue;
      for (int k = 0; k < 3; ++k) out[k] += w * (*this)(i, j, k);
    }
  return out;
}

Mat3 StructureTensor::ad(int i) const {
  Mat3 m;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m(k, j) = (*this)(i, j, k);
  return m;
}

double StructureTensor::jacobi_defect() const {
  double worst = 0.0;
  const Mat3 I = Mat3::Identity();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k) {
        const Vec3 ei = I.col(i), ej = I.col(j), ek = I.col(k);
        const Vec3 s = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                       bracket(ek, bracket(ei, ej));
        worst = std::max(worst, s.cwiseAbs().maxCoeff());
      }
  return worst;
}

double StructureTensor::max_abs() const {
  double m = 0.0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

StructureTensor structure_tensor(const FamilyInstance& inst) {
  StructureTensor c;
  const double A = inst.param_or_zero("A"), B = inst.param_or_zero("B");
  const double C = inst.param_or_zero("C"), D = inst.param_or_zero("D");
  switch (inst.tag()) {
    case FamilyTag::RiemUnimodular:
      set_bracket(c, 0, 1, 0, 0, C);
      set_bracket(c, 1, 2, A, 0, 0);
      set_bracket(c, 2, 0, 0, B, 0);
      break;
    case FamilyTag::RiemNonunimodular:
    case FamilyTag::G6:
      set_bracket(c, 0, 1, 0, A, B);
      set_bracket(c, 0, 2, 0, C, D);
      break;
    case FamilyTag::G1:
      set_bracket(c, 0, 1, A, 0, -B);
      set_bracket(c, 0, 2, -A, -B, 0);
      set_bracket(c, 1, 2, B, A, A);
      break;
    case FamilyTag::G2:
      set_bracket(c, 0, 1, 0, -C, -B);
      set_bracket(c, 0, 2, 0, -B, C);
      set_bracket(c, 1, 2, A, 0, 0);
      break;
    case FamilyTag::G3:
      set_bracket(c, 0, 1, 0, 0, -C);
      set_bracket(c, 0, 2, 0, -B, 0);
      set_bracket(c, 1, 2, A, 0, 0);
      break;
    case FamilyTag::G4: {
      const double eta = inst.param("eta");
      set_bracket(c, 0, 1, 0, -1.0, 2.0 * eta - B);
      set_bracket(c, 0, 2, 0, -B, 1.0);
      set_bracket(c, 1, 2, A, 0, 0);
      break;
    }
    case FamilyTag::G5:
      set_bracket(c, 0, 2, A, B, 0);
      set_bracket(c, 1, 2, C, D, 0);
      break;
    case FamilyTag::G7:
      set_bracket(c, 0, 1, -A, -B, -B);
      set_bracket(c, 0, 2, A, B, B);
      set_bracket(c, 1, 2, C, D, D);
      break;
    case FamilyTag::SpecialRiem:
    case FamilyTag::SpecialLor:
      set_bracket(c, 0, 1, B, -A, 0);
      set_bracket(c, 0, 2, C, 0, -A);
      set_bracket(c, 1, 2, 0, C, -B);
      break;
  }
  return c;
}

bool is_unimodular(const FamilyInstance& inst) {
  const StructureTensor c = structure_tensor(inst);
  const double tol = 1e-12 * std::max(1.0, c.max_abs());
  for (int i = 0; i < 3; ++i)
    if (std::abs(c.ad(i).trace()) > tol) return false;
  return true;
}

Vec3 cross_product(const Vec3& u, const Vec3& v, const MetricSignature& sig) {
  Vec3 w = u.cross(v);
  if (sig.is_lorentzian()) w[2] = -w[2];
  return w;
}

LEndomorphism l_endomorphism(const FamilyInstance& inst, double tol) {
  if (!is_unimodular(inst))
    throw DomainError(std::string(to_string(inst.tag())) +
                      ": L is only defined for unimodular algebras");
  const StructureTensor c = structure_tensor(inst);
  const Mat3 I = Mat3::Identity();
  const bool lor = inst.signature().is_lorentzian();
  Mat3 L;
  L.col(0) = c.bracket(I.col(1), I.col(2));
  L.col(1) = c.bracket(I.col(2), I.col(0));
  L.col(2) = (lor ? -1.0 : 1.0) * c.bracket(I.col(0), I.col(1));

  if (!lor) return {L, SegreType::Diagonal, "DIAGONAL"};

  const double scale = L.cwiseAbs().maxCoeff();
  if (scale == 0.0) return {L, SegreType::Diagonal, "DIAGONAL_{11,1}"};
  const Mat3 M = L / scale;

  // Monic characteristic polynomial t^3 + b t^2 + c t + d.
  const double b = -M.trace();
  const double cc = 0.5 * (M.trace() * M.trace() - (M * M).trace());
  const double d = -M.determinant();
  const double disc = 18 * b * cc * d - 4 * b * b * b * d + b * b * cc * cc - 4 * cc * cc * cc - 27 * d * d;

  auto rank = [&](const Mat3& m) {
    Eigen::JacobiSVD<Mat3> svd(m);
    const double thresh = 10.0 * std::sqrt(tol);
    int r = 0;
    for (int i = 0; i < 3; ++i)
      if (svd.singularValues()[i] > thresh) ++r;
    return r;
  };

  if (disc < -tol) return {L, SegreType::ComplexPair, "COMPLEX_{1zz}"};
  if (disc > tol) return {L, SegreType::Diagonal, "DIAGONAL_{11,1}"};

  const double gap = b * b - 3 * cc;
  if (std::abs(gap) <= std::sqrt(tol)) {
    const double mu = -b / 3.0;
    switch (rank(M - mu * Mat3::Identity())) {
      case 0: return {L, SegreType::Diagonal, "DIAGONAL_{11,1}"};
      case 1: return {L, SegreType::DoubleRoot, "DOUBLE_{21}"};
      default: return {L, SegreType::TripleRoot, "TRIPLE_{3}"};
    }
  }
  const double mu = (9 * d - b * cc) / (2 * gap);
  if (rank(M - mu * Mat3::Identity()) <= 1) return {L, SegreType::Diagonal, "DIAGONAL_{11,1}"};
  return {L, SegreType::DoubleRoot, "DOUBLE_{21}"};
}

std::string_view to_string(LieGroup group) {
  switch (group) {
    case LieGroup::SU2: return "SU(2)";
    case LieGroup::SL2R: return "SL~(2,R)";
    case LieGroup::E2: return "E~(2)";
    case LieGroup::E11: return "E(1,1)";
    case LieGroup::H3: return "H3";
    case LieGroup::R3: return "R3";
    case LieGroup::UnclassifiedNonunimodular: return "UNCLASSIFIED_NONUNIMODULAR";
  }
  return "UNCLASSIFIED_NONUNIMODULAR";
}

LieGroup parse_group(std::string_view name) {
  for (LieGroup g : {LieGroup::SU2, LieGroup::SL2R, LieGroup::E2, LieGroup::E11, LieGroup::H3,
                     LieGroup::R3, LieGroup::UnclassifiedNonunimodular})
    if (to_string(g) == name) return g;
  throw SchemaError("unknown group '" + std::string(name) + "'");
}

LieGroup identify_group(const FamilyInstance& inst) {
  const double A = inst.param_or_zero("A"), B = inst.param_or_zero("B");
  const double C = inst.param_or_zero("C");
  switch (inst.tag()) {
    case FamilyTag::RiemUnimodular:
      return milnor_class(A, B, C);
    case FamilyTag::G3:
      return milnor_class(A, B, -C);
    case FamilyTag::G1:
      return B != 0.0 ? LieGroup::SL2R : LieGroup::E11;
    case FamilyTag::G2:
      return A != 0.0 ? LieGroup::SL2R : LieGroup::E11;
    case FamilyTag::G4: {
      const double eta = inst.param("eta");
      const int s = sign_of(eta * A);
      if (B != eta) return s != 0 ? LieGroup::SL2R : LieGroup::E11;
      if (s < 0) return LieGroup::E11;
      if (s > 0) return LieGroup::E2;
      return LieGroup::H3;
    }
    default:
      return LieGroup::UnclassifiedNonunimodular;
  }
}

}  // namespace grs3d
