#pragma once

// Three-dimensional metric Lie algebra families: bracket tables, constraint
// validation, the cross-product endomorphism L, and group identification.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace grs3d {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Parameters outside a family's constraint set (A+D = 0, AC+BD != 0, ...).
class ValidationError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Missing, extra or malformed parameters; unknown names.
class SchemaError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation called outside its mathematical domain.
class DomainError : public std::domain_error {
  using std::domain_error::domain_error;
};

using ParamMap = std::map<std::string, double, std::less<>>;

enum class FamilyTag {
  RiemUnimodular,
  RiemNonunimodular,
  G1,
  G2,
  G3,
  G4,
  G5,
  G6,
  G7,
  SpecialRiem,
  SpecialLor,
};

inline constexpr std::array<FamilyTag, 11> kAllFamilies = {
    FamilyTag::RiemUnimodular, FamilyTag::RiemNonunimodular,
    FamilyTag::G1,             FamilyTag::G2,
    FamilyTag::G3,             FamilyTag::G4,
    FamilyTag::G5,             FamilyTag::G6,
    FamilyTag::G7,             FamilyTag::SpecialRiem,
    FamilyTag::SpecialLor,
};

/// Lowercase kebab tag, e.g. "riem-unimodular", "g4", "special-lor".
std::string_view to_string(FamilyTag tag);
FamilyTag parse_family(std::string_view name);

/// Scalar parameter names a family requires ("eta" included for g4).
std::span<const std::string_view> required_params(FamilyTag tag);

enum class Eta : int { Plus = 1, Minus = -1 };

/// Causal characters of the frame. Only (+,+,+) and (+,+,-) exist.
class MetricSignature {
 public:
  static constexpr MetricSignature riemannian() { return MetricSignature(1.0); }
  static constexpr MetricSignature lorentzian() { return MetricSignature(-1.0); }

  constexpr double operator[](int i) const { return i == 2 ? eps3_ : 1.0; }
  constexpr bool is_lorentzian() const { return eps3_ < 0.0; }
  Mat3 metric() const { return Vec3(1.0, 1.0, eps3_).asDiagonal(); }
  double inner(const Vec3& u, const Vec3& v) const {
    return u[0] * v[0] + u[1] * v[1] + eps3_ * u[2] * v[2];
  }

  constexpr bool operator==(const MetricSignature&) const = default;

 private:
  constexpr explicit MetricSignature(double eps3) : eps3_(eps3) {}
  double eps3_;
};

MetricSignature signature_of(FamilyTag tag);

/// A validated family member. Build with make_instance().
class FamilyInstance {
 public:
  FamilyTag tag() const { return tag_; }
  const MetricSignature& signature() const { return signature_; }

  /// Real structure scalars (A, B, C, D as required; never eta).
  const ParamMap& params() const { return params_; }
  double param(std::string_view name) const;
  /// Parameter value or 0 when the family does not carry it.
  double param_or_zero(std::string_view name) const;
  std::optional<Eta> eta() const { return eta_; }

  /// params() plus "eta" as +-1 when present; the JSON/CLI form.
  ParamMap param_map() const;

 private:
  friend FamilyInstance make_instance(FamilyTag tag, const ParamMap& params);
  FamilyInstance(FamilyTag tag, ParamMap params, std::optional<Eta> eta)
      : tag_(tag), signature_(signature_of(tag)), params_(std::move(params)), eta_(eta) {}

  FamilyTag tag_;
  MetricSignature signature_;
  ParamMap params_;
  std::optional<Eta> eta_;
};

/// Constraint checks use |x| <= kConstraintTol * scale for "= 0" and the
/// negation for "!= 0".
inline constexpr double kConstraintTol = 1e-12;

FamilyInstance make_instance(FamilyTag tag, const ParamMap& params);

/// c(i,j,k) with [e_i, e_j] = sum_k c(i,j,k) e_k, zero-based indices.
class StructureTensor {
 public:
  double operator()(int i, int j, int k) const { return c_[idx(i, j, k)]; }
  double& operator()(int i, int j, int k) { return c_[idx(i, j, k)]; }

  Vec3 bracket(const Vec3& u, const Vec3& v) const;
  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  Mat3 ad(int i) const;
  /// Largest |cyclic sum| over basis triples and output components.
  double jacobi_defect() const;
  double max_abs() const;

 private:
  static constexpr int idx(int i, int j, int k) { return (i * 3 + j) * 3 + k; }
  std::array<double, 27> c_{};
};

StructureTensor structure_tensor(const FamilyInstance& inst);

bool is_unimodular(const FamilyInstance& inst);

/// Riemannian: right-handed cross product. Lorentzian: the para-quaternion
/// product e1 x e2 = -e3, e2 x e3 = e1, e3 x e1 = e2.
Vec3 cross_product(const Vec3& u, const Vec3& v, const MetricSignature& sig);

enum class SegreType { Diagonal, ComplexPair, DoubleRoot, TripleRoot };

struct LEndomorphism {
  Mat3 matrix;
  SegreType segre;
  /// "DIAGONAL" for Riemannian; "DIAGONAL_{11,1}", "COMPLEX_{1zz}",
  /// "DOUBLE_{21}" or "TRIPLE_{3}" for Lorentzian.
  std::string label;
};

inline constexpr double kSegreTol = 1e-9;

/// L with [Z, Y] = L(Z x Y). Throws DomainError on non-unimodular input.
LEndomorphism l_endomorphism(const FamilyInstance& inst, double tol = kSegreTol);

enum class LieGroup { SU2, SL2R, E2, E11, H3, R3, UnclassifiedNonunimodular };

/// "SU(2)", "SL~(2,R)", "E~(2)", "E(1,1)", "H3", "R3",
/// "UNCLASSIFIED_NONUNIMODULAR".
std::string_view to_string(LieGroup group);
LieGroup parse_group(std::string_view name);

/// Sign-pattern lookup on the exact parameters.
LieGroup identify_group(const FamilyInstance& inst);

}  // namespace grs3d
