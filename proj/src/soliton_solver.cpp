#include "grs3d/soliton_solver.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace grs3d {

namespace {

using Vec4 = Eigen::Vector4d;

struct StartResult {
  Vec4 point = Vec4::Zero();
  StartRecord record;
};

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// One damped least-squares run. Steps are accepted only when they lower the
// squared residual; iteration continues past the tolerance until no further
// decrease is possible, so converged points sit at roundoff level.
StartResult run_start(const ResidualModel& model, const Vec4& start, bool free_lambda,
                      const SolveConfig& cfg) {
  const int n = free_lambda ? 4 : 3;
  Vec4 p = start;
  auto eval = [&](const Vec4& q) {
    const auto r = model.evaluate(q.head<3>(), q[3]);
    return Eigen::Matrix<double, 6, 1>(r.data());
  };

  Eigen::Matrix<double, 6, 1> r = eval(p);
  double cost = r.squaredNorm();
  double mu = 1e-3;
  int stagnant = 0;
  int it = 0;
  for (; it < cfg.max_iters && cost > 0.0; ++it) {
    const Eigen::Matrix<double, 6, 4> Jfull = model.jacobian(p.head<3>());
    const Eigen::MatrixXd J = Jfull.leftCols(n);
    const Eigen::VectorXd g = J.transpose() * r;
    const Eigen::MatrixXd H = J.transpose() * J;
    if (it == 0) mu = 1e-3 * std::max(1.0, H.diagonal().maxCoeff());

    bool accepted = false;
    while (mu < 1e20) {
      Eigen::MatrixXd damped = H;
      damped.diagonal().array() += mu;
      const Eigen::VectorXd step = damped.ldlt().solve(-g);
      Vec4 trial = p;
      trial.head(n) += step;
      const Eigen::Matrix<double, 6, 1> r_trial = eval(trial);
      const double c_trial = r_trial.squaredNorm();
      if (c_trial < cost) {
        const double gain = cost - c_trial;
        stagnant = gain <= 1e-14 * cost ? stagnant + 1 : 0;
        p = trial;
        r = r_trial;
        cost = c_trial;
        mu = std::max(mu / 3.0, 1e-15);
        accepted = true;
        break;
      }
      mu *= 4.0;
    }
    if (!accepted || stagnant >= 5) break;
  }

  StartResult out;
  out.point = p;
  out.record.iterations = it;
  out.record.final_residual = r.cwiseAbs().maxCoeff();
  out.record.converged = std::isfinite(out.record.final_residual) && out.record.final_residual < cfg.tol;
  return out;
}

bool lex_less(const Vec4& a, const Vec4& b) {
  for (int i = 0; i < 4; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Greedy dedup over a lexicographically sorted list; keeps the first of
// every cluster.
std::vector<Vec4> dedup(const std::vector<Vec4>& sorted, double radius) {
  std::vector<Vec4> kept;
  for (const Vec4& p : sorted) {
    bool fresh = true;
    for (const Vec4& q : kept)
      if ((p - q).norm() < radius) {
        fresh = false;
        break;
      }
    if (fresh) kept.push_back(p);
  }
  return kept;
}

}  // namespace

void validate(const SolveConfig& cfg) {
  if (cfg.starts < 1) throw ValidationError("solve config: starts must be >= 1");
  if (!(cfg.tol > 0.0)) throw ValidationError("solve config: tol must be > 0");
  if (!(cfg.dedup_radius > 0.0)) throw ValidationError("solve config: dedup_radius must be > 0");
  if (!(cfg.box > 0.0)) throw ValidationError("solve config: box must be > 0");
  if (cfg.max_iters < 1) throw ValidationError("solve config: max_iters must be >= 1");
  if (cfg.threads < 0) throw ValidationError("solve config: threads must be >= 0");
}

SolutionSet solve(const FamilyInstance& inst, double alpha, double beta,
                  std::optional<double> lambda, const SolveConfig& cfg) {
  validate(cfg);
  const bool free_lambda = !lambda.has_value();
  if (cfg.unknowns) {
    if (*cfg.unknowns == Unknowns::XOnly && free_lambda)
      throw ValidationError("solve config: unknowns X_ONLY requires a fixed lambda");
    if (*cfg.unknowns == Unknowns::XAndLambda && !free_lambda)
      throw ValidationError("solve config: unknowns X_AND_LAMBDA conflicts with a fixed lambda");
  }

  const ResidualModel model(inst, alpha, beta);
  std::vector<StartResult> results(cfg.starts);

  auto work = [&](int first, int last) {
    for (int s = first; s < last; ++s) {
      std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                        static_cast<std::uint32_t>(s)};
      std::mt19937_64 rng(seq);
      std::uniform_real_distribution<double> u(-cfg.box, cfg.box);
      Vec4 start;
      for (int i = 0; i < 3; ++i) start[i] = u(rng);
      start[3] = free_lambda ? u(rng) : *lambda;
      results[s] = run_start(model, start, free_lambda, cfg);
      results[s].record.index = s;
    }
  };

  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, cfg.starts);
  if (threads == 1) {
    work(0, cfg.starts);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (cfg.starts + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int first = t * chunk, last = std::min(cfg.starts, first + chunk);
      if (first < last) pool.emplace_back(work, first, last);
    }
    for (auto& th : pool) th.join();
  }

  SolutionSet set;
  std::vector<Vec4> converged;
  for (const auto& r : results) {
    set.diagnostics.push_back(r.record);
    if (r.record.converged) converged.push_back(r.point);
  }
  set.converged_starts = static_cast<int>(converged.size());
  std::sort(converged.begin(), converged.end(), lex_less);

  set.distinct_fine = static_cast<int>(dedup(converged, cfg.dedup_radius / 10.0).size());
  set.manifold_flag = set.distinct_fine >= kManifoldThreshold;

  for (const Vec4& p : dedup(converged, cfg.dedup_radius)) {
    FoundSolution sol;
    sol.candidate.X = p.head<3>();
    sol.candidate.params = {alpha, beta, p[3]};
    const ResidualReport rep = residual(inst, sol.candidate, cfg.tol);
    if (!rep.passes) continue;
    sol.residual = rep.inf_norm;
    sol.trivial = beta == 0.0 && p.head<3>().norm() <= cfg.dedup_radius &&
                  std::abs(p[3]) <= cfg.dedup_radius;
    set.solutions.push_back(std::move(sol));
  }
  return set;
}

std::pair<std::string, std::vector<double>> parse_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw SchemaError("grid axis '" + spec + "' must look like K=start:stop:count or K=v1;v2");
  const std::string key = spec.substr(0, eq);
  const std::string body = spec.substr(eq + 1);

  auto number = [&](const std::string& s) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || s.empty())
      throw SchemaError("grid axis '" + spec + "': bad number '" + s + "'");
    return v;
  };
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    return parts;
  };

  std::vector<double> values;
  if (body.find(':') != std::string::npos) {
    const auto parts = split(body, ':');
    if (parts.size() != 3) throw SchemaError("grid axis '" + spec + "': expected start:stop:count");
    const double a = number(parts[0]), b = number(parts[1]);
    const double cnt = number(parts[2]);
    if (cnt < 1 || cnt != std::floor(cnt)) throw SchemaError("grid axis '" + spec + "': bad count");
    const int count = static_cast<int>(cnt);
    for (int i = 0; i < count; ++i)
      values.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(i) / (count - 1));
  } else {
    for (const auto& p : split(body, ';')) values.push_back(number(p));
  }
  if (values.empty()) throw SchemaError("grid axis '" + spec + "' has no values");
  return {key, values};
}

std::pair<std::string, std::string> parse_tie(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
    throw SchemaError("tie '" + spec + "' must look like C=B");
  return {spec.substr(0, eq), spec.substr(eq + 1)};
}

SweepResult sweep(FamilyTag family, const ParamGrid& grid, double alpha, double beta,
                  const SolveConfig& cfg) {
  validate(cfg);
  std::size_t total = grid.axes.empty() ? 0 : 1;
  for (const auto& [k, vals] : grid.axes) total *= vals.size();
  if (total == 0) throw ValidationError("sweep: empty parameter grid");

  const NamedClassification named = classify_named({alpha, beta, 0.0});
  SweepResult out;
  std::vector<std::size_t> idx(grid.axes.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    ParamMap params;
    for (std::size_t a = 0; a < grid.axes.size(); ++a)
      params[grid.axes[a].first] = grid.axes[a].second[idx[a]];
    for (const auto& [dst, src] : grid.ties) {
      auto it = params.find(src);
      if (it == params.end()) throw SchemaError("tie source '" + src + "' is not a grid axis");
      params[dst] = it->second;
    }
    // Odometer increment, last axis fastest.
    for (std::size_t a = grid.axes.size(); a-- > 0;) {
      if (++idx[a] < grid.axes[a].second.size()) break;
      idx[a] = 0;
    }

    std::optional<FamilyInstance> inst;
    try {
      inst = make_instance(family, params);
    } catch (const ValidationError& e) {
      std::string label;
      for (const auto& [k, v] : params) label += (label.empty() ? "" : ",") + k + "=" + shortest(v);
      out.skipped.push_back(label + ": " + e.what());
      continue;
    }

    SweepRow row;
    row.family = family;
    row.params = params;
    row.alpha = alpha;
    row.beta = beta;
    row.solutions = solve(*inst, alpha, beta, std::nullopt, cfg);
    row.manifold_flag = row.solutions.manifold_flag;
    row.min_residual = INFINITY;
    for (const auto& d : row.solutions.diagnostics)
      row.min_residual = std::min(row.min_residual, d.final_residual);
    bool zero_lambda = false;
    for (const auto& s : row.solutions.solutions) {
      if (s.trivial) continue;
      ++row.n_solutions;
      if (s.candidate.X.norm() > cfg.dedup_radius) ++row.n_nonzero_x;
      if (std::abs(s.candidate.params.lambda) <= cfg.dedup_radius) zero_lambda = true;
    }
    row.ew_compat = row.n_solutions > 0 && named.ew_compat;
    row.ps_compat = zero_lambda && named.ps_compat;
    row.vnh_compat = row.n_solutions > 0 && named.vnh_compat;
    out.rows.push_back(std::move(row));
  }
  return out;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : result.rows) {
    out << to_string(row.family);
    for (const char* k : {"A", "B", "C", "D", "eta"}) {
      out << ',';
      auto it = row.params.find(k);
      if (it != row.params.end()) out << shortest(it->second);
    }
    out << ',' << shortest(row.alpha) << ',' << shortest(row.beta) << ',' << row.n_solutions << ','
        << shortest(row.min_residual) << ',' << row.ew_compat << ',' << row.ps_compat << ','
        << row.vnh_compat << '\n';
  }
}

}  // namespace grs3d
