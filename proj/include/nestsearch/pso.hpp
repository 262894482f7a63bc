#pragma once

// Reference global-best particle swarm optimizer with velocity clamping and
// bound clamping. Shares the engine's run/result contract.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nestsearch/rng.hpp"
#include "nestsearch/search_space.hpp"
#include "nestsearch/solver.hpp"

namespace nestsearch {

struct PsoConfig {
  std::size_t swarm = 30;
  double inertia = 0.7;
  double c1 = 1.5;  // cognitive pull toward the personal best
  double c2 = 1.5;  // social pull toward the global best
  double vmax_frac = 0.5;  // velocity clamp as a fraction of coordinate width
  std::uint64_t seed = 0;
  std::uint64_t max_evals = 100000;
  double target_tol = 1e-5;

  void validate() const {
    if (swarm == 0) throw std::invalid_argument("PsoConfig: swarm must be > 0");
    if (!(inertia > 0.0 && inertia <= 1.0)) {
      throw std::invalid_argument("PsoConfig: inertia must lie in (0, 1]");
    }
    if (!(c1 > 0.0) || !(c2 > 0.0)) {
      throw std::invalid_argument("PsoConfig: c1 and c2 must be > 0");
    }
    if (!(vmax_frac > 0.0)) {
      throw std::invalid_argument("PsoConfig: vmax_frac must be > 0");
    }
    if (!(target_tol > 0.0)) {
      throw std::invalid_argument("PsoConfig: target_tol must be > 0");
    }
  }
};

inline RunResult run_pso(const Objective& objective, const SearchSpace& space,
                         const PsoConfig& cfg,
                         std::optional<double> known_optimum = {}) {
  cfg.validate();
  if (cfg.max_evals < cfg.swarm) {
    throw std::invalid_argument(
        "run_pso: max_evals cannot cover swarm initialization");
  }

  detail::EvalTracker tracker(objective, cfg.max_evals, known_optimum,
                              cfg.target_tol);
  RngStream rng(cfg.seed);
  const std::size_t d = space.dim();

  std::vector<std::vector<double>> pos(cfg.swarm);
  std::vector<std::vector<double>> vel(cfg.swarm,
                                       std::vector<double>(d, 0.0));
  std::vector<Nest> pbest(cfg.swarm);
  for (std::size_t i = 0; i < cfg.swarm; ++i) {
    pos[i] = space.uniform_point(rng);
    const double v = tracker.evaluate(pos[i]);
    pbest[i].position = pos[i];
    pbest[i].value = v;
  }

  std::size_t gbest = 0;
  for (std::size_t i = 1; i < cfg.swarm; ++i) {
    if (pbest[i].value < pbest[gbest].value) gbest = i;
  }

  RunResult result;
  result.best = pbest[gbest];
  result.trace.push_back({tracker.count(), result.best.value});

  while (!tracker.target_met(result.best.value) && tracker.remaining() > 0) {
    ++result.generations;
    for (std::size_t i = 0;
         i < cfg.swarm && tracker.remaining() > 0 &&
         !tracker.target_met(result.best.value);
         ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        double v = cfg.inertia * vel[i][j] +
                   cfg.c1 * r1 * (pbest[i].position[j] - pos[i][j]) +
                   cfg.c2 * r2 * (result.best.position[j] - pos[i][j]);
        const double vmax = cfg.vmax_frac * space.width(j);
        vel[i][j] = std::clamp(v, -vmax, vmax);
        pos[i][j] += vel[i][j];
      }
      pos[i] = clamp_to_bounds(pos[i], space);

      const double value = tracker.evaluate(pos[i]);
      if (value < pbest[i].value) {
        pbest[i].position = pos[i];
        pbest[i].value = value;
        if (value < result.best.value) result.best = pbest[i];
      }
    }
    result.trace.push_back({tracker.count(), result.best.value});
  }

  result.evals_used = tracker.count();
  result.success = tracker.target_met(result.best.value);
  return result;
}

}  // namespace nestsearch
