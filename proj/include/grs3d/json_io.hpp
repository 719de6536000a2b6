#pragma once

#include <json.hpp>

#include "grs3d/algebra_catalog.hpp"
#include "grs3d/curvature_engine.hpp"
#include "grs3d/grs_system.hpp"
#include "grs3d/soliton_solver.hpp"
#include "grs3d/theorem_atlas.hpp"

namespace grs3d {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

Json to_json(const Mat3& m);
Json to_json(const Vec3& v);
Json to_json(const ParamMap& p);

/// {"family": "<tag>", "params": {...}}
Json to_json(const FamilyInstance& inst);
/// Accepts the instance form above or any report carrying it under
/// "instance". Throws SchemaError on malformed input.
FamilyInstance instance_from_json(const Json& j);
Mat3 mat3_from_json(const Json& j);

Json to_json(const SolitonParams& p);
Json to_json(const CandidateSolution& c);
Json to_json(const CurvatureReport& r);
Json to_json(const ResidualReport& r);
Json to_json(const NamedClassification& c);
Json to_json(const SolutionSet& s, bool with_diagnostics = false);
Json to_json(const CaseReport& r);
Json to_json(const CorollaryReport& r);

/// Instance, curvature, unimodularity, L endomorphism when defined, group.
Json describe_json(const FamilyInstance& inst);

}  // namespace grs3d
