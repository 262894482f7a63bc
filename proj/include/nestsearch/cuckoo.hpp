#pragma once

// Cuckoo Search: population of host nests, one Lévy-flight cuckoo per
// generation placed against a randomly chosen nest, then abandonment of a
// fraction of the worst nests. Minimizes a black-box objective over a
// bounded box, deterministically for a given seed.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nestsearch/levy.hpp"
#include "nestsearch/rng.hpp"
#include "nestsearch/search_space.hpp"
#include "nestsearch/solver.hpp"

namespace nestsearch {

/// How the abandonment step rebuilds discovered nests.
/// kRankReplace: rank by value and rebuild the worst floor(p_a * n) with
///   fresh uniform samples, never the single best nest.
/// kBernoulli: rebuild each non-best nest independently with probability
///   p_a, again from fresh uniform samples.
/// kMixing: pick the worst floor(p_a * n) as in kRankReplace, but rebuild
///   each by a random walk along the difference of two randomly chosen
///   nests, keeping the new position only if it improves. Walk lengths
///   scale with the population spread, so refinement sharpens as the
///   search converges; this is the rebuild rule most published cuckoo
///   implementations use and the one the benchmark protocol runs with.
enum class DiscoveryMode { kRankReplace, kBernoulli, kMixing };

struct CsConfig {
  std::size_t nests = 15;
  double p_a = 0.25;
  /// Step scale as a fraction of the per-coordinate domain width (or of the
  /// per-coordinate distance to the incumbent best when around_best is set).
  double alpha_frac = 0.01;
  /// Power-law exponent of the Lévy step-length distribution.
  double lambda = 2.5;
  std::uint64_t max_evals = 100000;
  double target_tol = 1e-5;
  std::uint64_t seed = 0;
  DiscoveryMode discovery_mode = DiscoveryMode::kRankReplace;
  /// Off by default: scale each step coordinate by the distance between the
  /// source nest and the incumbent best instead of the domain width. Steps
  /// then shrink as the population converges, which sharpens local search;
  /// the cuckoo launched from the best nest itself stays put.
  bool around_best = false;
  /// kMixing only: probability that a coordinate takes part in the rebuild
  /// walk. 0 selects the dimension-aware default min(0.5, 12/d); dense
  /// walks stop being accepted in high dimension.
  double mixing_cross = 0.0;

  double mixing_cross_probability(std::size_t dim) const {
    if (mixing_cross > 0.0) return mixing_cross;
    return std::min(0.5, 12.0 / static_cast<double>(dim));
  }

  void validate() const {
    if (nests == 0) throw std::invalid_argument("CsConfig: nests must be > 0");
    if (!(p_a >= 0.0 && p_a <= 1.0)) {
      throw std::invalid_argument("CsConfig: p_a must lie in [0, 1]");
    }
    if (!(alpha_frac > 0.0)) {
      throw std::invalid_argument("CsConfig: alpha_frac must be > 0");
    }
    if (!(target_tol > 0.0)) {
      throw std::invalid_argument("CsConfig: target_tol must be > 0");
    }
    if (!(mixing_cross >= 0.0 && mixing_cross <= 1.0)) {
      throw std::invalid_argument(
          "CsConfig: mixing_cross must lie in [0, 1] (0 = automatic)");
    }
    LevyParams check(lambda);  // validates lambda
    (void)check;
  }
};

/// n nests sampled i.i.d. uniform in the box, each evaluated once.
inline std::vector<Nest> initialize_population(const SearchSpace& space,
                                               std::size_t n, RngStream& rng,
                                               const Objective& objective) {
  if (n == 0) {
    throw std::invalid_argument("initialize_population: n must be > 0");
  }
  std::vector<Nest> nests;
  nests.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Nest nest;
    nest.position = space.uniform_point(rng);
    nest.value = objective(nest.position);
    nests.push_back(std::move(nest));
  }
  return nests;
}

/// New candidate position by a Lévy flight from `current`:
///   x' = x + alpha_frac * scale_j * L_j,
/// scale_j being the domain width (default) or |current - best| per
/// coordinate (around_best). Consumes exactly d Lévy coordinates from the
/// stream and returns the clamped position.
inline std::vector<double> levy_flight_move(const Nest& current,
                                            const Nest& best,
                                            const SearchSpace& space,
                                            const CsConfig& cfg,
                                            RngStream& rng) {
  const LevyParams params(cfg.lambda);
  const std::vector<double> step = sample_levy_step(rng, params, space.dim());
  std::vector<double> pos(space.dim());
  for (std::size_t j = 0; j < pos.size(); ++j) {
    const double scale = cfg.around_best
                             ? current.position[j] - best.position[j]
                             : space.width(j);
    pos[j] = current.position[j] + cfg.alpha_frac * scale * step[j];
  }
  return clamp_to_bounds(pos, space);
}

/// Replace nests[j] iff the candidate strictly improves on it.
inline bool greedy_replace(const std::vector<double>& candidate_pos,
                           double candidate_val, std::vector<Nest>& nests,
                           std::size_t j) {
  if (j >= nests.size()) {
    throw std::invalid_argument("greedy_replace: nest index out of range");
  }
  if (candidate_val < nests[j].value) {
    nests[j].position = candidate_pos;
    nests[j].value = candidate_val;
    return true;
  }
  return false;
}

/// Abandonment step. Sorts the nests by value (ties keep nest order) and
/// rebuilds abandoned ones with fresh uniform samples, each evaluated once.
/// The single best nest is never abandoned. `max_new` caps how many
/// replacements may be evaluated (budget clipping). Returns evaluations
/// consumed.
inline std::uint64_t abandon_worst(
    std::vector<Nest>& nests, const CsConfig& cfg, const SearchSpace& space,
    RngStream& rng, const Objective& objective,
    std::uint64_t max_new = std::numeric_limits<std::uint64_t>::max()) {
  if (nests.empty()) {
    throw std::invalid_argument("abandon_worst: nests must be non-empty");
  }
  std::stable_sort(nests.begin(), nests.end(),
                   [](const Nest& a, const Nest& b) { return a.value < b.value; });
  const std::size_t n = nests.size();
  std::uint64_t used = 0;

  auto rebuild = [&](Nest& nest) {
    nest.position = space.uniform_point(rng);
    nest.value = objective(nest.position);
    ++used;
  };

  switch (cfg.discovery_mode) {
    case DiscoveryMode::kRankReplace: {
      std::size_t k = static_cast<std::size_t>(cfg.p_a * static_cast<double>(n));
      k = std::min(k, n - 1);  // the best nest survives even at p_a = 1
      for (std::size_t i = n - k; i < n && used < max_new; ++i) {
        rebuild(nests[i]);
      }
      break;
    }
    case DiscoveryMode::kBernoulli: {
      for (std::size_t i = 1; i < n && used < max_new; ++i) {
        if (rng.uniform01() < cfg.p_a) rebuild(nests[i]);
      }
      break;
    }
    case DiscoveryMode::kMixing: {
      std::size_t k = static_cast<std::size_t>(cfg.p_a * static_cast<double>(n));
      k = std::min(k, n - 1);
      const double cross = cfg.mixing_cross_probability(space.dim());
      for (std::size_t i = n - k; i < n && used < max_new; ++i) {
        const std::vector<double>& base =
            nests[rng.uniform_index(n)].position;
        const std::size_t a = rng.uniform_index(n);
        const std::size_t b = rng.uniform_index(n);
        // Dithered walk length, bounded away from zero: accepting
        // micro-steps would shrink population diversity faster than the
        // error and freeze the search early.
        const double stretch = rng.uniform(0.3, 1.0);
        std::vector<double> cand = nests[i].position;
        for (std::size_t j = 0; j < cand.size(); ++j) {
          if (rng.uniform01() < cross) {
            cand[j] = base[j] + stretch * (nests[a].position[j] -
                                           nests[b].position[j]);
          }
        }
        cand = clamp_to_bounds(cand, space);
        const double val = objective(cand);
        ++used;
        if (val < nests[i].value) {
          nests[i].position = std::move(cand);
          nests[i].value = val;
        }
      }
      break;
    }
  }
  return used;
}

/// Full Cuckoo Search run. One generation = one Lévy-flight cuckoo from a
/// uniformly chosen source nest placed against a uniformly chosen nest,
/// then abandonment, then best update. Stops when the evaluation budget is
/// exhausted or the best value comes within target_tol of a supplied known
/// optimum.
inline RunResult run_cuckoo(const Objective& objective,
                            const SearchSpace& space, const CsConfig& cfg,
                            std::optional<double> known_optimum = {}) {
  cfg.validate();
  if (cfg.max_evals < cfg.nests) {
    throw std::invalid_argument(
        "run_cuckoo: max_evals cannot cover population initialization");
  }

  detail::EvalTracker tracker(objective, cfg.max_evals, known_optimum,
                              cfg.target_tol);
  RngStream rng(cfg.seed);
  Objective counted = [&tracker](const std::vector<double>& x) {
    return tracker.evaluate(x);
  };

  std::vector<Nest> nests =
      initialize_population(space, cfg.nests, rng, counted);

  auto best_of = [](const std::vector<Nest>& pop) {
    std::size_t bi = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
      if (pop[i].value < pop[bi].value) bi = i;
    }
    return pop[bi];
  };

  RunResult result;
  result.best = best_of(nests);
  result.trace.push_back({tracker.count(), result.best.value});

  while (!tracker.target_met(result.best.value) && tracker.remaining() > 0) {
    ++result.generations;

    // Lévy-flight cuckoo against a random nest.
    const std::size_t source = rng.uniform_index(cfg.nests);
    std::vector<double> candidate =
        levy_flight_move(nests[source], result.best, space, cfg, rng);
    const double candidate_val = tracker.evaluate(candidate);
    const std::size_t j = rng.uniform_index(cfg.nests);
    greedy_replace(candidate, candidate_val, nests, j);
    if (candidate_val < result.best.value) {
      result.best.position = std::move(candidate);
      result.best.value = candidate_val;
    }

    // Abandon a fraction of the worst nests; fresh samples may beat the
    // incumbent best.
    if (!tracker.target_met(result.best.value) && tracker.remaining() > 0) {
      abandon_worst(nests, cfg, space, rng, counted, tracker.remaining());
      const Nest& pop_best = best_of(nests);
      if (pop_best.value < result.best.value) result.best = pop_best;
    }

    result.trace.push_back({tracker.count(), result.best.value});
  }

  result.evals_used = tracker.count();
  result.success = tracker.target_met(result.best.value);
  return result;
}

}  // namespace nestsearch
