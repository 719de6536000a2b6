#include "grs3d/theorem_atlas.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace grs3d {

namespace {

void check_free(const TheoremCase& tc, const ParamMap& free) {
  for (const auto& name : tc.free_params)
    if (!free.contains(name))
      throw SchemaError(tc.id + ": missing free parameter '" + name + "'");
  for (const auto& [k, v] : free) {
    if (std::find(tc.free_params.begin(), tc.free_params.end(), k) == tc.free_params.end())
      throw SchemaError(tc.id + ": unexpected free parameter '" + k + "'");
    if (!std::isfinite(v)) throw SchemaError(tc.id + ": free parameter '" + k + "' is not finite");
    if (k == "eta" && v != 1.0 && v != -1.0) throw ValidationError(tc.id + ": eta must be +1 or -1");
  }
}

std::vector<MaterializedCandidate> materialize(const TheoremCase& tc, const ParamMap& free, Reading reading) {
  check_free(tc, free);
  if (auto bad = tc.violated(free)) throw DomainError(tc.id + ": condition " + *bad + " violated");
  std::vector<MaterializedCandidate> out;
  for (auto& b : tc.construct(free, reading)) {
    CandidateSolution cand{b.X, b.soliton};
    out.push_back({b.label, make_instance(tc.family, b.family_params), cand});
  }
  return out;
}

double largest_value(const MaterializedCandidate& m) {
  double big = std::max({std::abs(m.candidate.params.alpha), std::abs(m.candidate.params.beta),
                         std::abs(m.candidate.params.lambda), m.candidate.X.cwiseAbs().maxCoeff()});
  for (const auto& [k, v] : m.instance.params()) big = std::max(big, std::abs(v));
  return big;
}

bool all_finite(const MaterializedCandidate& m) {
  return std::isfinite(largest_value(m));
}

// One admissible draw; counts rejections.
std::optional<ParamMap> draw(const TheoremCase& tc, std::mt19937_64& rng, int max_attempts, int& rejected) {
  std::uniform_real_distribution<double> mag(kSampleFloor, kSampleBox);
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    ParamMap free;
    for (const auto& name : tc.free_params) {
      if (name == "eta") free[name] = coin(rng) ? 1.0 : -1.0;
      else free[name] = (coin(rng) ? 1.0 : -1.0) * mag(rng);
    }
    bool ok = !tc.violated(free).has_value();
    if (ok) {
      try {
        for (Reading rd : {Reading::Corrected, Reading::Literal}) {
          if (rd == Reading::Literal && !tc.suspected_typo()) continue;
          for (const auto& m : materialize(tc, free, rd))
            if (!all_finite(m) || largest_value(m) > kConditioningGuard) ok = false;
        }
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (ok) return free;
    ++rejected;
  }
  return std::nullopt;
}

void record(ReadingReport& rep, const MaterializedCandidate& m, double tol) {
  const ResidualReport r = residual(m.instance, m.candidate, tol);
  ++rep.evaluated;
  double& worst = rep.branch_max[m.branch.empty() ? "main" : m.branch];
  worst = std::max(worst, r.inf_norm);
  rep.max_residual = std::max(rep.max_residual, r.inf_norm);
  if (!r.passes || r.trivial) {
    ++rep.failures;
    if (rep.first_failure.empty()) {
      rep.first_failure = (m.branch.empty() ? "" : "[" + m.branch + "] ") + std::string("residual ") +
                          std::to_string(r.inf_norm) + (r.trivial ? " (trivial solution)" : "");
    }
  }
}

// Signed permutations of the frame that keep the diagonal bracket form:
// e'_i = s_i e_{p(i)}.
struct Frame {
  std::array<int, 3> p;
  std::array<double, 3> s;
  std::string label;
};

const std::vector<Frame>& diagonal_frames() {
  static const std::vector<Frame> frames = {
      {{0, 1, 2}, {1, 1, 1}, ""},           {{1, 2, 0}, {1, 1, 1}, "@perm(231)"},
      {{2, 0, 1}, {1, 1, 1}, "@perm(312)"}, {{1, 0, 2}, {1, 1, -1}, "@perm(213)"},
      {{0, 2, 1}, {1, 1, -1}, "@perm(132)"}, {{2, 1, 0}, {1, 1, -1}, "@perm(321)"},
  };
  return frames;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

std::vector<std::string> note_names(unsigned notes) {
  std::vector<std::string> out;
  if (notes & kNoteEinstein) out.emplace_back("EINSTEIN");
  if (notes & kNoteFlat) out.emplace_back("FLAT");
  if (notes & kNoteKillingContinuum) out.emplace_back("KILLING_CONTINUUM");
  if (notes & kNoteRicciSoliton) out.emplace_back("RICCI_SOLITON");
  if (notes & kNoteSuspectedTypo) out.emplace_back("SUSPECTED_TYPO");
  return out;
}

const TheoremCase& find_case(std::string_view id) {
  for (const auto& tc : theorem_cases())
    if (tc.id == id) return tc;
  throw SchemaError("unknown theorem case '" + std::string(id) + "'");
}

std::vector<MaterializedCandidate> instantiate(std::string_view case_id, const ParamMap& free, Reading reading) {
  return materialize(find_case(case_id), free, reading);
}

std::optional<ParamMap> sample_free_params(const TheoremCase& tc, std::mt19937_64& rng, int max_attempts) {
  int rejected = 0;
  return draw(tc, rng, max_attempts, rejected);
}

std::mt19937_64 case_rng(std::string_view case_id, std::uint64_t seed) {
  std::uint32_t h = 2166136261u;
  for (char c : case_id) h = (h ^ static_cast<unsigned char>(c)) * 16777619u;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), h};
  return std::mt19937_64(seq);
}

CaseReport verify_case(std::string_view case_id, int samples, std::uint64_t seed, double tol) {
  const TheoremCase& tc = find_case(case_id);
  if (samples < 1) throw ValidationError("verify_case: samples must be >= 1");
  if (!(tol > 0)) throw ValidationError("verify_case: tol must be > 0");

  CaseReport rep;
  rep.id = tc.id;
  rep.family = tc.family;
  rep.notes = tc.notes;
  rep.samples = samples;
  rep.seed = seed;
  rep.tol = tol;
  rep.typo_note = tc.typo_note;
  if (tc.suspected_typo()) rep.corrected.emplace();

  auto rng = case_rng(tc.id, seed);
  bool exhausted = false;
  for (int n = 0; n < samples; ++n) {
    auto free = draw(tc, rng, 100000, rep.rejected_draws);
    if (!free) {
      exhausted = true;
      break;
    }
    for (const auto& m : materialize(tc, *free, Reading::Literal)) record(rep.literal, m, tol);
    if (rep.corrected)
      for (const auto& m : materialize(tc, *free, Reading::Corrected)) record(*rep.corrected, m, tol);
  }
  auto finish = [&](ReadingReport& r) {
    r.passes = !exhausted && r.evaluated > 0 && r.failures == 0;
    if (exhausted && r.first_failure.empty()) r.first_failure = "no admissible draw found";
  };
  finish(rep.literal);
  if (rep.corrected) finish(*rep.corrected);

  if (!rep.corrected) {
    rep.reading_passed = rep.literal.passes ? "literal" : "none";
    rep.passes = rep.literal.passes;
  } else {
    const bool l = rep.literal.passes, c = rep.corrected->passes;
    rep.reading_passed = l && c ? "both" : c ? "corrected" : l ? "literal" : "none";
    rep.passes = c;
  }
  return rep;
}

std::string_view to_string(ClaimedEquation eq) {
  switch (eq) {
    case ClaimedEquation::EinsteinWeyl: return "E-W";
    case ClaimedEquation::ProjectiveSkew: return "PS";
    case ClaimedEquation::NearHorizon: return "VN-H";
  }
  return "?";
}

namespace {

using CE = ClaimedEquation;
using LG = LieGroup;

ClaimPair by_case(LG g, CE e, std::string id, ParamMap free, std::string branch = {}) {
  ClaimPair p;
  p.group = g;
  p.equation = e;
  p.case_id = std::move(id);
  p.free = std::move(free);
  p.branch = std::move(branch);
  return p;
}

ClaimPair by_search(LG g, CE e, std::vector<SearchInstance> inst) {
  ClaimPair p;
  p.group = g;
  p.equation = e;
  p.search = std::move(inst);
  return p;
}

// The three equations on one case with alpha = 1 and beta = -1, -1/2, 1/2.
std::vector<ClaimPair> triple(LG g, const std::string& id, ParamMap free, std::string branch = {}) {
  std::vector<ClaimPair> out;
  for (auto [eq, beta] : {std::pair{CE::EinsteinWeyl, -1.0}, std::pair{CE::ProjectiveSkew, -0.5},
                          std::pair{CE::NearHorizon, 0.5}}) {
    ParamMap f = free;
    f["alpha"] = 1.0;
    f["beta"] = beta;
    out.push_back(by_case(g, eq, id, f, branch));
  }
  return out;
}

std::vector<CorollaryClaim> build_claims() {
  std::vector<CorollaryClaim> c;

  c.push_back({"riem-unimodular", FamilyTag::RiemUnimodular,
               {
                   by_case(LG::SU2, CE::EinsteinWeyl, "riem-unimodular-4", {{"A", 1}, {"C", 2}, {"alpha", 1}, {"beta", -1}}, "+"),
                   by_case(LG::SU2, CE::NearHorizon, "riem-unimodular-4", {{"A", 2}, {"C", 1}, {"alpha", 1}, {"beta", 0.5}}, "+"),
                   by_case(LG::SL2R, CE::NearHorizon, "riem-unimodular-4", {{"A", -1}, {"C", 1}, {"alpha", 1}, {"beta", 0.5}}, "+"),
                   by_case(LG::E2, CE::NearHorizon, "riem-unimodular-3", {{"B", 1}, {"alpha", 1}, {"beta", 0.5}}),
                   by_case(LG::H3, CE::NearHorizon, "riem-unimodular-4", {{"A", 1}, {"C", 0}, {"alpha", 1}, {"beta", 0.5}}, "+"),
               }});

  c.push_back({"riem-nonunimodular", FamilyTag::RiemNonunimodular,
               triple(LG::UnclassifiedNonunimodular, "riem-nonunimodular-1", {{"A", 1}, {"B", 0}})});

  c.push_back({"g1", FamilyTag::G1,
               {
                   by_case(LG::E11, CE::EinsteinWeyl, "g1-3", {{"A", 1}, {"alpha", 1}, {"beta", -1}}, "+"),
                   by_case(LG::E11, CE::ProjectiveSkew, "g1-3", {{"A", 1}, {"alpha", 1}, {"beta", -0.5}}, "+"),
               }});

  std::vector<SearchInstance> h3_ps;
  for (double s : {1.0, -1.0})
    for (int slot = 0; slot < 3; ++slot) {
      ParamMap fam{{"A", 0.0}, {"B", 0.0}, {"C", 0.0}};
      fam[std::string(1, char('A' + slot))] = s;
      h3_ps.push_back({fam, 1.0, -0.5, 0.0});
    }
  c.push_back({"g3", FamilyTag::G3,
               {
                   by_case(LG::SL2R, CE::EinsteinWeyl, "g3-5", {{"A", 2}, {"C", 1}, {"alpha", 1}, {"beta", -1}}, "+"),
                   by_case(LG::SL2R, CE::ProjectiveSkew, "g3-5", {{"A", 2}, {"C", 1}, {"alpha", 1}, {"beta", -0.5}}, "+"),
                   by_case(LG::SL2R, CE::NearHorizon, "g3-5", {{"A", 1}, {"C", 2}, {"alpha", 1}, {"beta", 0.5}}, "+"),
                   by_case(LG::H3, CE::EinsteinWeyl, "g3-5", {{"A", 1}, {"C", 0}, {"alpha", 1}, {"beta", -1}}, "+"),
                   by_search(LG::H3, CE::ProjectiveSkew, h3_ps),
                   by_case(LG::H3, CE::NearHorizon, "g3-6", {{"A", 0}, {"C", 1}, {"alpha", 1}, {"beta", 0.5}}, "+"),
                   by_case(LG::SU2, CE::NearHorizon, "g3-6", {{"A", 1}, {"C", -1}, {"alpha", 1}, {"beta", 0.5}}, "+"),
               }});

  std::vector<SearchInstance> e11_vnh;
  for (double eta : {1.0, -1.0}) {
    std::vector<ParamMap> fams;
    for (double t : {0.5, 1.0, 2.0}) fams.push_back({{"A", -eta * t}, {"B", eta}, {"eta", eta}});
    for (double b : {-2.0, -0.5, 0.5, 2.0, -eta}) fams.push_back({{"A", 0.0}, {"B", b}, {"eta", eta}});
    for (const auto& f : fams)
      for (double beta : {0.25, 0.5, 1.0, 2.0}) e11_vnh.push_back({f, 1.0, beta, std::nullopt});
  }
  c.push_back({"g4", FamilyTag::G4,
               {
                   by_case(LG::SL2R, CE::EinsteinWeyl, "g4-1", {{"B", 3}, {"eta", 1}, {"alpha", 1}, {"beta", -1}}, "+"),
                   by_case(LG::SL2R, CE::NearHorizon, "g4-1", {{"B", 0}, {"eta", 1}, {"alpha", 1}, {"beta", 0.5}}, "+"),
                   by_case(LG::E2, CE::EinsteinWeyl, "g4-4", {{"A", 1}, {"B", 1}, {"eta", 1}, {"alpha", 1}}),
                   by_search(LG::E11, CE::NearHorizon, e11_vnh),
               }});

  c.push_back({"g5", FamilyTag::G5, triple(LG::UnclassifiedNonunimodular, "g5-1", {{"A", 1}, {"B", 0}})});
  c.push_back({"g6", FamilyTag::G6, triple(LG::UnclassifiedNonunimodular, "g6-1", {{"A", 1}, {"B", 0}})});
  c.push_back({"g7", FamilyTag::G7,
               triple(LG::UnclassifiedNonunimodular, "g7-3", {{"A", 1}, {"B", 0}, {"D", 4}}, "+")});

  auto special = triple(LG::UnclassifiedNonunimodular, "special-I-3", {{"A", 1}, {"B", 0}, {"C", 0}});
  for (auto& p : triple(LG::UnclassifiedNonunimodular, "special-II-3", {{"A", 1}, {"B", 0}, {"C", 0}}, "C=0"))
    special.push_back(p);
  c.push_back({"special", FamilyTag::SpecialRiem, special});
  return c;
}

bool equation_holds(CE eq, const SolitonParams& p) {
  const NamedClassification n = classify_named(p);
  switch (eq) {
    case CE::EinsteinWeyl: return n.ew_compat;
    case CE::ProjectiveSkew: return n.ps_compat;
    case CE::NearHorizon: return n.vnh_compat;
  }
  return false;
}

}  // namespace

const std::vector<CorollaryClaim>& corollary_claims() {
  static const std::vector<CorollaryClaim> claims = build_claims();
  return claims;
}

CorollaryReport verify_corollary(std::string_view claim_id, double tol, const SolveConfig& search_cfg) {
  const CorollaryClaim* claim = nullptr;
  for (const auto& c : corollary_claims())
    if (c.id == claim_id) claim = &c;
  if (!claim) throw SchemaError("unknown corollary claim '" + std::string(claim_id) + "'");

  CorollaryReport rep;
  rep.id = claim->id;
  bool any_witnessed = false, any_failed = false;
  for (const auto& pair : claim->pairs) {
    PairReport pr;
    pr.group = pair.group;
    pr.equation = pair.equation;
    if (pair.search.empty()) {
      pr.witness = pair.case_id + (pair.branch.empty() ? "" : "[" + pair.branch + "]");
      try {
        const auto cands = instantiate(pair.case_id, pair.free, Reading::Corrected);
        auto it = std::find_if(cands.begin(), cands.end(), [&](const MaterializedCandidate& m) {
          return pair.branch.empty() || m.branch == pair.branch;
        });
        if (it == cands.end()) throw SchemaError("no branch '" + pair.branch + "'");
        const ResidualReport r = residual(it->instance, it->candidate, tol);
        pr.group_ok = identify_group(it->instance) == pair.group;
        pr.equation_ok = equation_holds(pair.equation, it->candidate.params);
        pr.residual_ok = r.passes && !r.trivial;
        pr.residual = r.inf_norm;
        pr.candidate = *it;
      } catch (const std::exception& e) {
        pr.witness += std::string(": ") + e.what();
      }
      pr.status = pr.group_ok && pr.equation_ok && pr.residual_ok ? "WITNESSED" : "FAILED";
    } else {
      pr.witness = "solver search over " + std::to_string(pair.search.size()) + " instances";
      pr.status = "UNWITNESSED";
      for (const auto& si : pair.search) {
        const FamilyInstance inst = make_instance(claim->family, si.family_params);
        if (identify_group(inst) != pair.group) continue;
        const SolutionSet set = solve(inst, si.alpha, si.beta, si.lambda, search_cfg);
        for (const auto& s : set.solutions) {
          if (s.trivial || !equation_holds(pair.equation, s.candidate.params)) continue;
          const ResidualReport r = residual(inst, s.candidate, tol);
          if (!r.passes) continue;
          pr.group_ok = pr.equation_ok = pr.residual_ok = true;
          pr.residual = r.inf_norm;
          pr.candidate = MaterializedCandidate{"search", inst, s.candidate};
          pr.status = "WITNESSED";
          break;
        }
        if (pr.status == "WITNESSED") break;
      }
    }
    any_witnessed |= pr.status == "WITNESSED";
    any_failed |= pr.status == "FAILED";
    rep.pairs.push_back(std::move(pr));
  }
  rep.passes = any_witnessed && !any_failed;
  return rep;
}

std::vector<std::string> match_solution(const FamilyInstance& inst, const CandidateSolution& cand, double tol) {
  std::vector<std::string> out;
  const bool diagonal = inst.tag() == FamilyTag::RiemUnimodular;
  static const std::vector<Frame> identity = {diagonal_frames().front()};
  const auto& frames = diagonal ? diagonal_frames() : identity;

  for (const Frame& f : frames) {
    ParamMap fam = inst.param_map();
    Vec3 X = cand.X;
    if (diagonal) {
      const StructureTensor c = structure_tensor(inst);
      auto cp = [&](int i, int j, int k) { return f.s[i] * f.s[j] * f.s[k] * c(f.p[i], f.p[j], f.p[k]); };
      fam = {{"A", cp(1, 2, 0)}, {"B", cp(2, 0, 1)}, {"C", cp(0, 1, 2)}};
      for (int k = 0; k < 3; ++k) X[k] = f.s[k] * cand.X[f.p[k]];
    }
    ParamMap known = fam;
    known["alpha"] = cand.params.alpha;
    known["beta"] = cand.params.beta;
    known["lambda"] = cand.params.lambda;
    known["X1"] = X[0];
    known["X2"] = X[1];
    known["X3"] = X[2];

    for (const auto& tc : theorem_cases()) {
      if (tc.family != inst.tag()) continue;
      ParamMap free;
      for (const auto& name : tc.free_params) free[name] = known.at(name);
      std::vector<MaterializedCandidate> branches;
      try {
        branches = materialize(tc, free, Reading::Corrected);
      } catch (const std::exception&) {
        continue;
      }
      for (const auto& m : branches) {
        bool same = close(m.candidate.params.alpha, cand.params.alpha, 1e-9) &&
                    close(m.candidate.params.beta, cand.params.beta, 1e-9) &&
                    std::abs(m.candidate.params.lambda - cand.params.lambda) <= tol &&
                    (m.candidate.X - X).norm() <= tol;
        const ParamMap mp = m.instance.param_map();
        for (const auto& [k, v] : fam) {
          auto it = mp.find(k);
          const double mv = it == mp.end() ? 0.0 : it->second;
          same = same && close(mv, v, 1e-9);
        }
        if (same) {
          std::string label = tc.id + f.label + (m.branch.empty() ? "" : "[" + m.branch + "]");
          if (std::find(out.begin(), out.end(), label) == out.end()) out.push_back(label);
        }
      }
    }
  }
  return out;
}

void annotate_matches(const FamilyInstance& inst, SolutionSet& set, double tol) {
  for (auto& s : set.solutions) s.matches = match_solution(inst, s.candidate, tol);
}

}  // namespace grs3d
