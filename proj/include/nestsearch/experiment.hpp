#pragma once

// Multi-trial experiment runner: repeated independent solver runs with
// per-trial substreams, success-rate and evaluation-count statistics, and
// parameter sweeps. Trials may execute on several workers; results are
// collected by trial index so output is schedule-independent.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nestsearch/benchmarks.hpp"
#include "nestsearch/cuckoo.hpp"
#include "nestsearch/ga.hpp"
#include "nestsearch/pso.hpp"
#include "nestsearch/statistics.hpp"

namespace nestsearch {

enum class Algorithm { kCuckoo, kGa, kPso };

inline std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kCuckoo: return "cs";
    case Algorithm::kGa: return "ga";
    case Algorithm::kPso: return "pso";
  }
  throw std::invalid_argument("algorithm_name: unknown algorithm");
}

inline Algorithm algorithm_from_name(const std::string& name) {
  if (name == "cs") return Algorithm::kCuckoo;
  if (name == "ga") return Algorithm::kGa;
  if (name == "pso") return Algorithm::kPso;
  throw not_found_error("unknown algorithm '" + name +
                        "'; valid names: cs ga pso");
}

/// One experiment cell: `trials` independent runs of one algorithm on one
/// catalog function. The embedded algorithm config supplies
/// algorithm-specific knobs; seed, budget and tolerance come from the
/// experiment fields (trial k runs with substream(master_seed, k)).
struct ExperimentSpec {
  Algorithm algorithm = Algorithm::kCuckoo;
  std::string function_name;
  std::size_t dim = 0;  // 0 = catalog default
  CsConfig cs;
  GaConfig ga;
  PsoConfig pso;
  std::uint64_t trials = 100;
  std::uint64_t master_seed = 0;
  double epsilon = 1e-5;
  std::uint64_t max_evals = 100000;
  unsigned workers = 0;  // 0 = hardware concurrency, capped by NESTSEARCH_THREADS

  void validate() const {
    if (trials == 0) {
      throw std::invalid_argument("ExperimentSpec: trials must be >= 1");
    }
    if (!(epsilon > 0.0)) {
      throw std::invalid_argument("ExperimentSpec: epsilon must be > 0");
    }
  }
};

namespace detail {

inline unsigned thread_cap_from_env() {
  if (const char* env = std::getenv("NESTSEARCH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 0;  // no cap
}

inline unsigned resolve_workers(unsigned requested) {
  unsigned w = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (w == 0) w = 1;
  if (const unsigned cap = thread_cap_from_env(); cap != 0) {
    w = std::min(w, cap);
  }
  return std::max(1u, w);
}

}  // namespace detail

/// Runs trial `trial_index` of an experiment. Deterministic in
/// (spec, trial_index) alone, which keeps trial order and scheduling
/// irrelevant.
inline RunResult run_single_trial(const ExperimentSpec& spec,
                                  std::uint64_t trial_index) {
  const BenchmarkFunction& fn = benchmark(spec.function_name);
  const std::size_t d = fn.resolve_dim(spec.dim);
  const SearchSpace space = fn.space(d);
  const double target = fn.optimum(d).value;
  const std::uint64_t seed = derive_seed(spec.master_seed, trial_index);
  const Objective objective = [&fn](const std::vector<double>& x) {
    return fn.eval(x);
  };

  switch (spec.algorithm) {
    case Algorithm::kCuckoo: {
      CsConfig cfg = spec.cs;
      cfg.seed = seed;
      cfg.max_evals = spec.max_evals;
      cfg.target_tol = spec.epsilon;
      return run_cuckoo(objective, space, cfg, target);
    }
    case Algorithm::kGa: {
      GaConfig cfg = spec.ga;
      cfg.seed = seed;
      cfg.max_evals = spec.max_evals;
      cfg.target_tol = spec.epsilon;
      return run_ga(objective, space, cfg, target);
    }
    case Algorithm::kPso: {
      PsoConfig cfg = spec.pso;
      cfg.seed = seed;
      cfg.max_evals = spec.max_evals;
      cfg.target_tol = spec.epsilon;
      return run_pso(objective, space, cfg, target);
    }
  }
  throw std::invalid_argument("run_single_trial: unknown algorithm");
}

/// One full experiment cell: independent trials, success counting, and
/// evaluation statistics over the successful trials.
inline SummaryStats run_trials(const ExperimentSpec& spec) {
  spec.validate();
  const BenchmarkFunction& fn = benchmark(spec.function_name);
  const std::size_t d = fn.resolve_dim(spec.dim);

  std::vector<TrialRecord> records(spec.trials);
  const unsigned workers = std::min<std::uint64_t>(
      detail::resolve_workers(spec.workers), spec.trials);

  auto work = [&](std::atomic<std::uint64_t>& next) {
    for (std::uint64_t t = next.fetch_add(1); t < spec.trials;
         t = next.fetch_add(1)) {
      const RunResult run = run_single_trial(spec, t);
      records[t] = {t, run.evals_used, run.best.value, run.success};
    }
  };

  std::atomic<std::uint64_t> next{0};
  if (workers <= 1) {
    work(next);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] { work(next); });
    }
    for (auto& th : pool) th.join();
  }

  SummaryStats stats;
  stats.algorithm = algorithm_name(spec.algorithm);
  stats.function_name = spec.function_name;
  stats.dim = d;
  switch (spec.algorithm) {
    case Algorithm::kCuckoo:
      stats.n_or_pop = spec.cs.nests;
      stats.p_a = spec.cs.p_a;
      break;
    case Algorithm::kGa:
      stats.n_or_pop = spec.ga.population;
      break;
    case Algorithm::kPso:
      stats.n_or_pop = spec.pso.swarm;
      break;
  }
  stats.trials = spec.trials;
  stats.epsilon = spec.epsilon;
  stats.max_evals = spec.max_evals;
  stats.master_seed = spec.master_seed;
  stats.per_trial = std::move(records);

  std::vector<double> successful_evals;
  for (const TrialRecord& r : stats.per_trial) {
    if (r.success) successful_evals.push_back(static_cast<double>(r.evals));
  }
  stats.successes = successful_evals.size();
  stats.success_rate =
      static_cast<double>(stats.successes) / static_cast<double>(stats.trials);
  if (!successful_evals.empty()) {
    const auto [mean, sd] = summarize(successful_evals);
    stats.mean_evals = mean;
    stats.std_evals = sd;
  }
  return stats;
}

/// Cuckoo-search parameter study: one cell per (n, p_a) grid point, each a
/// full run_trials with the same master seed. Row-major over grid_n.
inline std::vector<SummaryStats> parameter_sweep(
    const ExperimentSpec& base, const std::vector<std::size_t>& grid_n,
    const std::vector<double>& grid_pa) {
  if (grid_n.empty() || grid_pa.empty()) {
    throw std::invalid_argument("parameter_sweep: grids must be non-empty");
  }
  std::vector<SummaryStats> cells;
  cells.reserve(grid_n.size() * grid_pa.size());
  for (const std::size_t n : grid_n) {
    for (const double pa : grid_pa) {
      ExperimentSpec spec = base;
      spec.algorithm = Algorithm::kCuckoo;
      spec.cs.nests = n;
      spec.cs.p_a = pa;
      cells.push_back(run_trials(spec));
    }
  }
  return cells;
}

}  // namespace nestsearch
