#include "grs3d/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "grs3d/curvature_engine.hpp"
#include "grs3d/grs_system.hpp"
#include "grs3d/json_io.hpp"
#include "grs3d/soliton_solver.hpp"
#include "grs3d/theorem_atlas.hpp"

namespace grs3d::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view text, std::string_view what) {
  std::string t = trim(text);
  std::string_view v = t;
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size())
    throw ValidationError("malformed number '" + t + "' in " + std::string(what));
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double default_tol() {
  const char* env = std::getenv("GRS3D_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  const double t = parse_double(env, "GRS3D_TOL");
  if (!(t > 0.0)) throw ValidationError("GRS3D_TOL must be positive");
  return t;
}

struct InstanceOptions {
  std::string family;
  std::string params;
  std::string instance_file;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--family", family, "family tag, e.g. riem-unimodular");
    cmd->add_option("--params", params, "comma list K=V, e.g. A=1,B=1,C=1");
    auto* i = cmd->add_option("--instance-file", instance_file, "JSON file with family and params");
    f->excludes(i);
  }

  FamilyInstance load() const {
    if (!instance_file.empty()) {
      std::ifstream in(instance_file);
      if (!in) throw ValidationError("cannot read instance file '" + instance_file + "'");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw SchemaError("instance file '" + instance_file + "' is not valid JSON: " + e.what());
      }
      return instance_from_json(j);
    }
    if (family.empty()) throw ValidationError("either --family or --instance-file is required");
    return make_instance(parse_family(family), parse_params(params));
  }
};

struct SolverOptions {
  int starts = 200;
  std::uint64_t seed = 0;
  double box = 10.0;
  double dedup = 1e-4;
  int max_iters = 200;
  int threads = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--starts", starts, "random initial points")->capture_default_str();
    cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    cmd->add_option("--box", box, "half-width of the sampling box")->capture_default_str();
    cmd->add_option("--dedup", dedup, "deduplication radius")->capture_default_str();
    cmd->add_option("--max-iters", max_iters, "iterations per start")->capture_default_str();
    cmd->add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
  }

  SolveConfig config(double tol) const {
    SolveConfig cfg;
    cfg.starts = starts;
    cfg.seed = seed;
    cfg.box = box;
    cfg.tol = tol;
    cfg.dedup_radius = dedup;
    cfg.max_iters = max_iters;
    cfg.threads = threads;
    validate(cfg);
    return cfg;
  }
};

Json envelope(std::string_view command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

Json sweep_json(const SweepResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"family", to_string(row.family)},
                    {"params", to_json(row.params)},
                    {"alpha", row.alpha},
                    {"beta", row.beta},
                    {"n_solutions", row.n_solutions},
                    {"n_nonzero_x", row.n_nonzero_x},
                    {"min_residual", row.min_residual},
                    {"manifold_flag", row.manifold_flag},
                    {"ew_compat", row.ew_compat},
                    {"ps_compat", row.ps_compat},
                    {"vnh_compat", row.vnh_compat}});
  Json skipped = Json::array();
  for (const auto& s : r.skipped) skipped.push_back(s);
  return {{"rows", rows}, {"skipped", skipped}};
}

// Case reports in registry order; workers pull indices from a shared counter.
std::vector<CaseReport> verify_cases(const std::vector<std::string>& ids, int samples, std::uint64_t seed,
                                     double tol) {
  std::vector<CaseReport> reports(ids.size());
  std::atomic<std::size_t> next{0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, ids.size());
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < ids.size(); i = next++)
          reports[i] = verify_case(ids[i], samples, seed, tol);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return reports;
}

}  // namespace

ParamMap parse_params(const std::string& text) {
  ParamMap params;
  if (trim(text).empty()) return params;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("malformed parameter '" + item + "', expected K=V");
    const std::string key = trim(std::string_view(item).substr(0, eq));
    if (key.empty()) throw ValidationError("malformed parameter '" + item + "', empty name");
    if (params.count(key) != 0) throw ValidationError("parameter '" + key + "' given twice");
    params[key] = parse_double(std::string_view(item).substr(eq + 1), "parameter " + key);
  }
  return params;
}

Vec3 parse_vec3(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ValidationError("expected three comma-separated components, got '" + text + "'");
  return Vec3(parse_double(parts[0], "X"), parse_double(parts[1], "X"), parse_double(parts[2], "X"));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Ricci solitons on three-dimensional Lie groups"};
  app.name("grs3d");
  app.require_subcommand(1);
  app.fallthrough();

  std::string output_path;
  std::string format;
  app.add_option("-o,--output", output_path, "write the report to this file instead of stdout");
  app.add_option("--format", format, "json or csv (csv only for sweep)")
      ->check(CLI::IsMember({"json", "csv"}));

  std::optional<double> tol_flag;
  auto add_tol = [&](CLI::App* cmd) { cmd->add_option("--tol", tol_flag, "residual tolerance (default 1e-9 or GRS3D_TOL)"); };

  // describe
  auto* describe = app.add_subcommand("describe", "curvature, unimodularity, L endomorphism and group");
  InstanceOptions describe_inst;
  describe_inst.attach(describe);

  // residual
  auto* residual_cmd = app.add_subcommand("residual", "evaluate the soliton residual at a candidate");
  InstanceOptions residual_inst;
  residual_inst.attach(residual_cmd);
  std::string x_text;
  double alpha = 0.0, beta = 0.0, lambda = 0.0;
  residual_cmd->add_option("--X", x_text, "vector components x1,x2,x3")->required();
  residual_cmd->add_option("--alpha", alpha)->required();
  residual_cmd->add_option("--beta", beta)->required();
  residual_cmd->add_option("--lambda", lambda)->required();
  add_tol(residual_cmd);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "numerically search for left-invariant solitons");
  InstanceOptions solve_inst;
  solve_inst.attach(solve_cmd);
  SolverOptions solve_opts;
  solve_opts.attach(solve_cmd);
  double solve_alpha = 0.0, solve_beta = 0.0;
  std::optional<double> solve_lambda;
  bool diagnostics = false;
  solve_cmd->add_option("--alpha", solve_alpha)->required();
  solve_cmd->add_option("--beta", solve_beta)->required();
  solve_cmd->add_option("--lambda", solve_lambda, "fix lambda; solved for when omitted");
  solve_cmd->add_flag("--diagnostics", diagnostics, "include per-start records");
  add_tol(solve_cmd);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "solve over a parameter grid");
  std::string sweep_family;
  std::vector<std::string> grid_specs, tie_specs;
  double sweep_alpha = 0.0, sweep_beta = 0.0;
  SolverOptions sweep_opts;
  sweep_cmd->add_option("--family", sweep_family)->required();
  sweep_cmd->add_option("--grid", grid_specs, "axis K=start:stop:count or K=v1;v2")->required();
  sweep_cmd->add_option("--tie", tie_specs, "copy one parameter from another, e.g. C=B");
  sweep_cmd->add_option("--alpha", sweep_alpha)->required();
  sweep_cmd->add_option("--beta", sweep_beta)->required();
  sweep_opts.attach(sweep_cmd);
  add_tol(sweep_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check closed-form cases or corollary witnesses");
  std::string theorem_id, corollary_id;
  int samples = 100;
  std::uint64_t verify_seed = 0;
  auto* th = verify_cmd->add_option("--theorem", theorem_id, "case id or 'all'");
  auto* co = verify_cmd->add_option("--corollary", corollary_id, "claim id or 'all'");
  th->excludes(co);
  verify_cmd->add_option("--samples", samples)->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed)->capture_default_str();
  add_tol(verify_cmd);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "name the equation selected by (alpha, beta, lambda)");
  double c_alpha = 0.0, c_beta = 0.0, c_lambda = 0.0;
  int dim = 3;
  classify_cmd->add_option("--alpha", c_alpha)->required();
  classify_cmd->add_option("--beta", c_beta)->required();
  classify_cmd->add_option("--lambda", c_lambda)->required();
  classify_cmd->add_option("--dim", dim, "manifold dimension")->capture_default_str();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int status = kExitOk;
  std::string payload;
  try {
    const double tol = tol_flag ? *tol_flag : default_tol();
    if (!(tol > 0.0)) throw ValidationError("--tol must be positive");
    const bool want_csv = format == "csv";
    if (want_csv && !sweep_cmd->parsed()) throw ValidationError("--format csv is only available for sweep");

    Json report;
    if (describe->parsed()) {
      report = envelope("describe");
      report.update(describe_json(describe_inst.load()));
    } else if (residual_cmd->parsed()) {
      const FamilyInstance inst = residual_inst.load();
      const CandidateSolution cand{parse_vec3(x_text), {alpha, beta, lambda}};
      report = envelope("residual");
      report["instance"] = to_json(inst);
      report["candidate"] = to_json(cand);
      report["residual"] = to_json(residual(inst, cand, tol));
      report["ricci"] = to_json(ricci(inst));
      report["lie_derivative"] = to_json(lie_derivative_metric(inst, cand.X));
      report["classification"] = to_json(classify_named(cand.params));
    } else if (solve_cmd->parsed()) {
      const FamilyInstance inst = solve_inst.load();
      SolutionSet set = solve(inst, solve_alpha, solve_beta, solve_lambda, solve_opts.config(tol));
      annotate_matches(inst, set);
      report = envelope("solve");
      report["instance"] = to_json(inst);
      report["alpha"] = solve_alpha;
      report["beta"] = solve_beta;
      report["lambda"] = solve_lambda ? Json(*solve_lambda) : Json(nullptr);
      report.update(to_json(set, diagnostics));
    } else if (sweep_cmd->parsed()) {
      ParamGrid grid;
      for (const auto& g : grid_specs) grid.axes.push_back(parse_axis(g));
      for (const auto& t : tie_specs) grid.ties.push_back(parse_tie(t));
      const SweepResult result =
          sweep(parse_family(sweep_family), grid, sweep_alpha, sweep_beta, sweep_opts.config(tol));
      for (const auto& s : result.skipped) err << "skipped " << s << '\n';
      if (want_csv || format.empty()) {
        std::ostringstream csv;
        write_sweep_csv(result, csv);
        payload = csv.str();
      } else {
        report = envelope("sweep");
        report.update(sweep_json(result));
      }
    } else if (verify_cmd->parsed()) {
      if (theorem_id.empty() == corollary_id.empty())
        throw ValidationError("verify needs exactly one of --theorem or --corollary");
      if (samples < 1) throw ValidationError("--samples must be at least 1");
      report = envelope("verify");
      if (!theorem_id.empty()) {
        std::vector<std::string> ids;
        if (theorem_id == "all") {
          for (const auto& tc : theorem_cases()) ids.push_back(tc.id);
        } else {
          ids.push_back(std::string(find_case(theorem_id).id));
        }
        const auto reports = verify_cases(ids, samples, verify_seed, tol);
        Json cases = Json::array();
        int passed = 0, failed_strict = 0, failed_typo = 0;
        for (const auto& r : reports) {
          cases.push_back(to_json(r));
          if (r.passes) {
            ++passed;
          } else if ((r.notes & kNoteSuspectedTypo) != 0) {
            ++failed_typo;
          } else {
            ++failed_strict;
          }
        }
        report["samples"] = samples;
        report["seed"] = verify_seed;
        report["tol"] = tol;
        report["cases"] = cases;
        report["summary"] = {{"total", reports.size()},
                             {"passed", passed},
                             {"failed", failed_strict},
                             {"failed_suspected_typo", failed_typo}};
        if (failed_strict > 0) status = kExitVerificationFailed;
      } else {
        std::vector<std::string> ids;
        if (corollary_id == "all") {
          for (const auto& c : corollary_claims()) ids.push_back(c.id);
        } else {
          ids.push_back(corollary_id);
        }
        SolveConfig cfg;
        cfg.seed = verify_seed;
        Json claims = Json::array();
        int failed = 0;
        for (const auto& id : ids) {
          const CorollaryReport r = verify_corollary(id, tol, cfg);
          claims.push_back(to_json(r));
          if (!r.passes) ++failed;
        }
        report["tol"] = tol;
        report["corollaries"] = claims;
        report["summary"] = {{"total", ids.size()}, {"failed", failed}};
        if (failed > 0) status = kExitVerificationFailed;
      }
    } else if (classify_cmd->parsed()) {
      report = envelope("classify");
      report["params"] = to_json(SolitonParams{c_alpha, c_beta, c_lambda});
      report["dim"] = dim;
      report["classification"] = to_json(classify_named({c_alpha, c_beta, c_lambda}, dim));
    }
    if (payload.empty()) payload = report.dump(2) + "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (output_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(output_path);
    if (!file || !(file << payload)) {
      err << "error: cannot write output file '" << output_path << "'\n";
      return kExitUsage;
    }
  }
  return status;
}

}  // namespace grs3d::cli
