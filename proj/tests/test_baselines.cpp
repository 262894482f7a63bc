#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "nestsearch/benchmarks.hpp"
#include "nestsearch/ga.hpp"
#include "nestsearch/pso.hpp"

using namespace nestsearch;

namespace {

struct Instrumented {
  const SearchSpace& space;
  const BenchmarkFunction& fn;
  std::uint64_t calls = 0;
  bool all_in_bounds = true;

  Objective objective() {
    return [this](const std::vector<double>& x) {
      ++calls;
      if (!space.contains(x)) all_in_bounds = false;
      return fn.eval(x);
    };
  }
};

template <typename Result>
bool identical(const Result& a, const Result& b) {
  return a.evals_used == b.evals_used && a.success == b.success &&
         a.generations == b.generations && a.best.value == b.best.value &&
         a.best.position == b.best.position && a.trace.size() == b.trace.size();
}

}  // namespace

TEST_CASE("GA solves the 2-D sphere with default settings") {
  const auto& fn = benchmark("sphere");
  const SearchSpace box = fn.space(2);
  GaConfig cfg;
  cfg.seed = 3;
  cfg.max_evals = 50000;
  cfg.target_tol = 1e-5;

  Instrumented wrap{box, fn};
  const RunResult run = run_ga(wrap.objective(), box, cfg, 0.0);
  REQUIRE(run.success);
  REQUIRE(run.best.value <= 1e-5);
  REQUIRE(run.evals_used == wrap.calls);
  REQUIRE(run.evals_used <= cfg.max_evals);
  REQUIRE(wrap.all_in_bounds);
  for (std::size_t i = 1; i < run.trace.size(); ++i) {
    REQUIRE(run.trace[i].best_value <= run.trace[i - 1].best_value);
  }
}

TEST_CASE("GA runs are bit-identical for a fixed seed") {
  const auto& fn = benchmark("rastrigin");
  const SearchSpace box = fn.space(4);
  GaConfig cfg;
  cfg.seed = 11;
  cfg.max_evals = 3000;
  const Objective objective = [&fn](const std::vector<double>& x) {
    return fn.eval(x);
  };
  const RunResult a = run_ga(objective, box, cfg, 0.0);
  const RunResult b = run_ga(objective, box, cfg, 0.0);
  REQUIRE(identical(a, b));
}

TEST_CASE("GA validates its configuration") {
  const SearchSpace box = SearchSpace::cube(2, -1.0, 1.0);
  const Objective objective = [](const std::vector<double>& x) {
    return x[0] * x[0] + x[1] * x[1];
  };

  GaConfig cfg;
  cfg.crossover_rate = 1.5;
  REQUIRE_THROWS_AS(run_ga(objective, box, cfg, {}), std::invalid_argument);

  cfg = GaConfig{};
  cfg.max_evals = 10;  // below one population
  REQUIRE_THROWS_AS(run_ga(objective, box, cfg, {}), std::invalid_argument);

  cfg = GaConfig{};
  cfg.elitism_count = cfg.population;
  REQUIRE_THROWS_AS(run_ga(objective, box, cfg, {}), std::invalid_argument);

  cfg = GaConfig{};
  cfg.tournament_size = 1;
  REQUIRE_THROWS_AS(run_ga(objective, box, cfg, {}), std::invalid_argument);
}

TEST_CASE("PSO solves the 2-D sphere with default settings") {
  const auto& fn = benchmark("sphere");
  const SearchSpace box = fn.space(2);
  PsoConfig cfg;
  cfg.seed = 3;
  cfg.max_evals = 50000;
  cfg.target_tol = 1e-5;

  Instrumented wrap{box, fn};
  const RunResult run = run_pso(wrap.objective(), box, cfg, 0.0);
  REQUIRE(run.success);
  REQUIRE(run.best.value <= 1e-5);
  REQUIRE(run.evals_used == wrap.calls);
  REQUIRE(run.evals_used <= cfg.max_evals);
  REQUIRE(wrap.all_in_bounds);
  for (std::size_t i = 1; i < run.trace.size(); ++i) {
    REQUIRE(run.trace[i].best_value <= run.trace[i - 1].best_value);
  }
}

TEST_CASE("PSO runs are bit-identical for a fixed seed") {
  const auto& fn = benchmark("ackley");
  const SearchSpace box = fn.space(4);
  PsoConfig cfg;
  cfg.seed = 17;
  cfg.max_evals = 3000;
  const Objective objective = [&fn](const std::vector<double>& x) {
    return fn.eval(x);
  };
  const RunResult a = run_pso(objective, box, cfg, 0.0);
  const RunResult b = run_pso(objective, box, cfg, 0.0);
  REQUIRE(identical(a, b));
}

TEST_CASE("PSO validates its configuration") {
  const SearchSpace box = SearchSpace::cube(2, -1.0, 1.0);
  const Objective objective = [](const std::vector<double>& x) {
    return x[0] * x[0] + x[1] * x[1];
  };

  PsoConfig cfg;
  cfg.swarm = 0;
  REQUIRE_THROWS_AS(run_pso(objective, box, cfg, {}), std::invalid_argument);

  cfg = PsoConfig{};
  cfg.inertia = 1.5;
  REQUIRE_THROWS_AS(run_pso(objective, box, cfg, {}), std::invalid_argument);

  cfg = PsoConfig{};
  cfg.max_evals = 10;  // below one swarm sweep
  REQUIRE_THROWS_AS(run_pso(objective, box, cfg, {}), std::invalid_argument);

  cfg = PsoConfig{};
  cfg.c1 = 0.0;
  REQUIRE_THROWS_AS(run_pso(objective, box, cfg, {}), std::invalid_argument);
}
