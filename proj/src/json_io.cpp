#include "grs3d/json_io.hpp"

#include <cmath>

namespace grs3d {

namespace {

// JSON has no infinity; report it as null.
Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string_view segre_name(SegreType t) {
  switch (t) {
    case SegreType::Diagonal: return "DIAGONAL";
    case SegreType::ComplexPair: return "COMPLEX";
    case SegreType::DoubleRoot: return "DOUBLE";
    case SegreType::TripleRoot: return "TRIPLE";
  }
  return "DIAGONAL";
}

}  // namespace

Json to_json(const Mat3& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) rows.push_back({num(m(i, 0)), num(m(i, 1)), num(m(i, 2))});
  return rows;
}

Json to_json(const Vec3& v) { return Json::array({num(v[0]), num(v[1]), num(v[2])}); }

Json to_json(const ParamMap& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = num(v);
  return j;
}

Json to_json(const FamilyInstance& inst) {
  return {{"family", to_string(inst.tag())}, {"params", to_json(inst.param_map())}};
}

FamilyInstance instance_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("instance JSON must be an object");
  const Json& body = j.contains("instance") ? j.at("instance") : j;
  if (!body.is_object() || !body.contains("family") || !body.contains("params"))
    throw SchemaError("instance JSON needs \"family\" and \"params\"");
  if (!body.at("family").is_string()) throw SchemaError("\"family\" must be a string");
  const FamilyTag tag = parse_family(body.at("family").get<std::string>());
  const Json& pj = body.at("params");
  if (!pj.is_object()) throw SchemaError("\"params\" must be an object");
  ParamMap params;
  for (auto it = pj.begin(); it != pj.end(); ++it) {
    if (!it.value().is_number()) throw SchemaError("parameter '" + it.key() + "' must be a number");
    params[it.key()] = it.value().get<double>();
  }
  return make_instance(tag, params);
}

Mat3 mat3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw SchemaError("matrix must be a 3x3 array");
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw SchemaError("matrix must be a 3x3 array");
    for (int k = 0; k < 3; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

Json to_json(const SolitonParams& p) {
  return {{"alpha", num(p.alpha)}, {"beta", num(p.beta)}, {"lambda", num(p.lambda)}};
}

Json to_json(const CandidateSolution& c) { return {{"X", to_json(c.X)}, {"params", to_json(c.params)}}; }

Json to_json(const CurvatureReport& r) {
  Json j = {
      {"ricci", to_json(r.ricci)},
      {"scalar_curvature", num(r.scalar_curvature)},
      {"principal_sectional", {num(r.principal_sectional[0]), num(r.principal_sectional[1]),
                               num(r.principal_sectional[2])}},
      {"sectional_is_constant", r.sectional_is_constant},
      {"is_einstein", r.is_einstein},
      {"is_flat", r.is_flat},
      {"sectional_constant", r.sectional_constant ? num(*r.sectional_constant) : Json(nullptr)},
      {"tolerance", num(r.tolerance)},
  };
  return j;
}

Json to_json(const ResidualReport& r) {
  Json six = Json::array();
  for (double v : r.six_equations) six.push_back(num(v));
  return {{"matrix", to_json(r.matrix)}, {"six_equations", six}, {"inf_norm", num(r.inf_norm)},
          {"tol", num(r.tol)},           {"passes", r.passes},   {"trivial", r.trivial}};
}

Json to_json(const NamedClassification& c) {
  auto opt = [](const std::optional<double>& v) { return v ? num(*v) : Json(nullptr); };
  Json compat = Json::array();
  if (c.rs_compat) compat.push_back("RICCI_SOLITON");
  if (c.ew_compat) compat.push_back("EINSTEIN_WEYL");
  if (c.ps_compat) compat.push_back("PROJECTIVE_SKEW");
  if (c.vnh_compat) compat.push_back("NEAR_HORIZON");
  return {{"primary", to_string(c.primary)},
          {"compatible", compat},
          {"rs_compat", c.rs_compat},
          {"ew_compat", c.ew_compat},
          {"ps_compat", c.ps_compat},
          {"vnh_compat", c.vnh_compat},
          {"vnh_exact", c.vnh_exact},
          {"scales", {{"rs", opt(c.rs_scale)}, {"ew", opt(c.ew_scale)}, {"ps", opt(c.ps_scale)},
                      {"vnh", opt(c.vnh_scale)}}},
          {"note", c.note}};
}

Json to_json(const SolutionSet& s, bool with_diagnostics) {
  Json sols = Json::array();
  for (const auto& f : s.solutions) {
    Json m = Json::array();
    for (const auto& id : f.matches) m.push_back(id);
    sols.push_back({{"X", to_json(f.candidate.X)},
                    {"lambda", num(f.candidate.params.lambda)},
                    {"residual", num(f.residual)},
                    {"trivial", f.trivial},
                    {"matches", f.matches.empty() ? Json("UNMATCHED") : m}});
  }
  Json j = {{"solutions", sols},
            {"n_solutions", s.solutions.size()},
            {"manifold_flag", s.manifold_flag},
            {"converged_starts", s.converged_starts},
            {"distinct_fine", s.distinct_fine}};
  if (with_diagnostics) {
    Json d = Json::array();
    for (const auto& r : s.diagnostics)
      d.push_back({{"start", r.index},
                   {"iterations", r.iterations},
                   {"final_residual", num(r.final_residual)},
                   {"converged", r.converged}});
    j["diagnostics"] = d;
  }
  return j;
}

namespace {

Json reading_json(const ReadingReport& r) {
  Json branches = Json::object();
  for (const auto& [k, v] : r.branch_max) branches[k] = num(v);
  return {{"passes", r.passes},           {"evaluated", r.evaluated},     {"failures", r.failures},
          {"max_residual", num(r.max_residual)}, {"branch_max_residual", branches},
          {"first_failure", r.first_failure}};
}

}  // namespace

Json to_json(const CaseReport& r) {
  Json j = {{"id", r.id},
            {"family", to_string(r.family)},
            {"notes", note_names(r.notes)},
            {"samples", r.samples},
            {"seed", r.seed},
            {"tol", num(r.tol)},
            {"rejected_draws", r.rejected_draws},
            {"passes", r.passes},
            {"reading_passed", r.reading_passed},
            {"literal", reading_json(r.literal)}};
  if (r.corrected) {
    j["corrected"] = reading_json(*r.corrected);
    j["typo_note"] = r.typo_note;
  }
  return j;
}

Json to_json(const CorollaryReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json pj = {{"group", to_string(p.group)},
               {"equation", to_string(p.equation)},
               {"status", p.status},
               {"witness", p.witness},
               {"group_ok", p.group_ok},
               {"equation_ok", p.equation_ok},
               {"residual_ok", p.residual_ok},
               {"residual", num(p.residual)}};
    if (p.candidate) {
      pj["instance"] = to_json(p.candidate->instance);
      pj["candidate"] = to_json(p.candidate->candidate);
    }
    pairs.push_back(pj);
  }
  return {{"id", r.id}, {"passes", r.passes}, {"pairs", pairs}};
}

Json describe_json(const FamilyInstance& inst) {
  const CurvatureReport curv = curvature_report(inst);
  const bool uni = is_unimodular(inst);
  Json j = {{"instance", to_json(inst)},
            {"signature", {inst.signature()[0], inst.signature()[1], inst.signature()[2]}},
            {"unimodular", uni},
            {"group", to_string(identify_group(inst))},
            {"curvature", to_json(curv)},
            {"ricci", to_json(curv.ricci)}};
  if (uni) {
    const LEndomorphism L = l_endomorphism(inst);
    j["l_endomorphism"] = {{"matrix", to_json(L.matrix)},
                           {"segre", segre_name(L.segre)},
                           {"segre_label", L.label}};
  }
  return j;
}

}  // namespace grs3d
