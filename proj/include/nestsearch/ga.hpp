#pragma once

// Reference real-coded genetic algorithm: tournament selection, blend
// crossover (BLX-0.5), per-gene Gaussian mutation, generational replacement
// with elitism. Shares the engine's run/result contract.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nestsearch/rng.hpp"
#include "nestsearch/search_space.hpp"
#include "nestsearch/solver.hpp"

namespace nestsearch {

struct GaConfig {
  std::size_t population = 100;
  double crossover_rate = 0.95;
  double mutation_rate = 0.05;  // per gene
  std::size_t tournament_size = 3;
  double mutation_sigma_frac = 0.1;  // of the coordinate width
  std::size_t elitism_count = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_evals = 100000;
  double target_tol = 1e-5;

  void validate() const {
    if (population == 0) {
      throw std::invalid_argument("GaConfig: population must be > 0");
    }
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
      throw std::invalid_argument("GaConfig: crossover_rate must lie in [0, 1]");
    }
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
      throw std::invalid_argument("GaConfig: mutation_rate must lie in [0, 1]");
    }
    if (tournament_size < 2) {
      throw std::invalid_argument("GaConfig: tournament_size must be >= 2");
    }
    if (!(mutation_sigma_frac > 0.0)) {
      throw std::invalid_argument("GaConfig: mutation_sigma_frac must be > 0");
    }
    if (elitism_count >= population) {
      throw std::invalid_argument(
          "GaConfig: elitism_count must be below population");
    }
    if (!(target_tol > 0.0)) {
      throw std::invalid_argument("GaConfig: target_tol must be > 0");
    }
  }
};

namespace detail {

/// Tournament pick: best of `size` uniform draws (with replacement).
inline const Nest& tournament_select(const std::vector<Nest>& pop,
                                     std::size_t size, RngStream& rng) {
  std::size_t winner = rng.uniform_index(pop.size());
  for (std::size_t t = 1; t < size; ++t) {
    const std::size_t i = rng.uniform_index(pop.size());
    if (pop[i].value < pop[winner].value) winner = i;
  }
  return pop[winner];
}

}  // namespace detail

inline RunResult run_ga(const Objective& objective, const SearchSpace& space,
                        const GaConfig& cfg,
                        std::optional<double> known_optimum = {}) {
  cfg.validate();
  if (cfg.max_evals < cfg.population) {
    throw std::invalid_argument(
        "run_ga: max_evals cannot cover population initialization");
  }

  detail::EvalTracker tracker(objective, cfg.max_evals, known_optimum,
                              cfg.target_tol);
  RngStream rng(cfg.seed);

  const std::size_t d = space.dim();
  std::vector<Nest> pop;
  pop.reserve(cfg.population);
  for (std::size_t i = 0; i < cfg.population; ++i) {
    Nest ind;
    ind.position = space.uniform_point(rng);
    ind.value = tracker.evaluate(ind.position);
    pop.push_back(std::move(ind));
  }
  std::stable_sort(pop.begin(), pop.end(),
                   [](const Nest& a, const Nest& b) { return a.value < b.value; });

  RunResult result;
  result.best = pop.front();
  result.trace.push_back({tracker.count(), result.best.value});

  std::vector<Nest> next;
  next.reserve(cfg.population);
  while (!tracker.target_met(result.best.value) && tracker.remaining() > 0) {
    ++result.generations;
    next.clear();
    // Elites carry over unchanged and are not re-evaluated.
    next.insert(next.end(), pop.begin(),
                pop.begin() + static_cast<std::ptrdiff_t>(cfg.elitism_count));

    while (next.size() < cfg.population && tracker.remaining() > 0 &&
           !tracker.target_met(result.best.value)) {
      const Nest& p1 = detail::tournament_select(pop, cfg.tournament_size, rng);
      const Nest& p2 = detail::tournament_select(pop, cfg.tournament_size, rng);

      std::vector<double> child(d);
      if (rng.uniform01() < cfg.crossover_rate) {
        // BLX-0.5: sample each gene in the parent interval extended by half
        // its length on both sides.
        for (std::size_t j = 0; j < d; ++j) {
          const double lo = std::min(p1.position[j], p2.position[j]);
          const double hi = std::max(p1.position[j], p2.position[j]);
          const double spread = hi - lo;
          child[j] = rng.uniform(lo - 0.5 * spread, hi + 0.5 * spread);
        }
      } else {
        child = p1.position;
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (rng.uniform01() < cfg.mutation_rate) {
          child[j] += rng.normal(cfg.mutation_sigma_frac * space.width(j));
        }
      }
      child = clamp_to_bounds(child, space);

      Nest offspring;
      offspring.value = tracker.evaluate(child);
      offspring.position = std::move(child);
      if (offspring.value < result.best.value) result.best = offspring;
      next.push_back(std::move(offspring));
    }

    if (next.size() == cfg.population) {
      pop.swap(next);
      std::stable_sort(pop.begin(), pop.end(), [](const Nest& a, const Nest& b) {
        return a.value < b.value;
      });
    }
    result.trace.push_back({tracker.count(), result.best.value});
  }

  result.evals_used = tracker.count();
  result.success = tracker.target_met(result.best.value);
  return result;
}

}  // namespace nestsearch
