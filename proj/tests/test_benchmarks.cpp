#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "nestsearch/benchmarks.hpp"
#include "nestsearch/rng.hpp"

using namespace nestsearch;

namespace {

std::vector<double> zeros(std::size_t d) { return std::vector<double>(d, 0.0); }

}  // namespace

TEST_CASE("stated optima evaluate to their known values") {
  // exact-zero minima
  REQUIRE(evaluate_benchmark("sphere", zeros(256)) == 0.0);
  REQUIRE(evaluate_benchmark("rastrigin", zeros(16)) == 0.0);
  REQUIRE(evaluate_benchmark("griewank", zeros(16)) == 0.0);
  REQUIRE(evaluate_benchmark("ackley", zeros(128)) ==
          Catch::Approx(0.0).margin(1e-12));
  REQUIRE(evaluate_benchmark("rosenbrock", std::vector<double>(16, 1.0)) == 0.0);

  // paper-rounded constants
  REQUIRE(evaluate_benchmark("easom", {std::numbers::pi, std::numbers::pi}) ==
          Catch::Approx(-1.0).margin(1e-12));
  REQUIRE(evaluate_benchmark("michalewicz", {2.20319, 1.57049}) ==
          Catch::Approx(-1.8013).margin(1e-3));
  REQUIRE(evaluate_benchmark("schwefel", {420.9687}) ==
          Catch::Approx(-418.9829).margin(1e-3));
}

TEST_CASE("dimension rules are enforced") {
  REQUIRE_THROWS_AS(evaluate_benchmark("easom", zeros(3)), std::invalid_argument);
  REQUIRE_THROWS_AS(evaluate_benchmark("shubert", zeros(1)), std::invalid_argument);
  REQUIRE_THROWS_AS(evaluate_benchmark("rosenbrock", zeros(1)),
                    std::invalid_argument);
  REQUIRE_NOTHROW(evaluate_benchmark("sphere", zeros(1)));
}

TEST_CASE("unknown names raise a not-found error listing valid names") {
  try {
    benchmark("spherical");
    FAIL("expected not_found_error");
  } catch (const not_found_error& e) {
    const std::string msg = e.what();
    REQUIRE(msg.find("sphere") != std::string::npos);
    REQUIRE(msg.find("rastrigin") != std::string::npos);
  }
  REQUIRE_THROWS_AS(known_optimum("nope", 2), not_found_error);
}

TEST_CASE("catalog lists all nine functions with their domains") {
  const auto names = benchmark_names();
  REQUIRE(names.size() == 9);

  const auto& sphere = benchmark("sphere");
  REQUIRE(sphere.lower == -5.12);
  REQUIRE(sphere.upper == 5.12);

  const auto& easom = benchmark("easom");
  REQUIRE(easom.lower == -100.0);
  REQUIRE(easom.upper == 100.0);
  REQUIRE(easom.dim_rule == DimRule::kFixed);
  REQUIRE(easom.default_dim == 2);

  const auto& schwefel = benchmark("schwefel");
  REQUIRE(schwefel.lower == -500.0);
  REQUIRE(schwefel.upper == 500.0);

  const auto& mich = benchmark("michalewicz");
  REQUIRE(mich.steepness == 10);
  REQUIRE(mich.upper == Catch::Approx(std::numbers::pi));
}

TEST_CASE("known optima match the stated values") {
  REQUIRE(known_optimum("michalewicz", 2).value ==
          Catch::Approx(-1.8013).margin(1e-3));
  REQUIRE(known_optimum("michalewicz", 5).value ==
          Catch::Approx(-4.6877).margin(1e-3));
  REQUIRE(known_optimum("michalewicz", 2).analytic);
  REQUIRE(known_optimum("michalewicz", 5).analytic);
  // beyond the stated dimensions the catalog serves reference values
  REQUIRE_FALSE(known_optimum("michalewicz", 16).analytic);
  REQUIRE(known_optimum("michalewicz", 16).value ==
          Catch::Approx(-15.6418648).margin(1e-6));

  REQUIRE(known_optimum("schwefel", 128).value ==
          Catch::Approx(-418.9829 * 128).margin(1e-2));
  REQUIRE(known_optimum("easom", 2).value == -1.0);
  REQUIRE(known_optimum("shubert", 2).value ==
          Catch::Approx(-186.7309).margin(1e-3));
  REQUIRE(known_optimum("sphere", 64).value == 0.0);
}

TEST_CASE("optimum consistency: catalog points evaluate to catalog values") {
  for (const auto& fn : benchmark_catalog()) {
    const OptimumInfo opt = fn.optimum(fn.default_dim);
    REQUIRE(!opt.points.empty());
    const double tol = opt.value == 0.0 ? 1e-12 : 1e-9 * std::abs(opt.value);
    for (const auto& point : opt.points) {
      REQUIRE(fn(point) == Catch::Approx(opt.value).margin(tol));
    }
  }
}

TEST_CASE("local minimality probe around catalog minimizers") {
  RngStream rng(2024);
  for (const auto& fn : benchmark_catalog()) {
    const OptimumInfo opt = fn.optimum(fn.default_dim);
    for (const auto& point : opt.points) {
      const double fstar = fn(point);
      for (int trial = 0; trial < 100; ++trial) {
        // random direction scaled to norm 1e-3
        std::vector<double> dir(point.size());
        double norm = 0.0;
        for (auto& v : dir) {
          v = rng.normal();
          norm += v * v;
        }
        norm = std::sqrt(norm);
        std::vector<double> probe = point;
        for (std::size_t j = 0; j < probe.size(); ++j) {
          probe[j] += 1e-3 * dir[j] / norm;
        }
        REQUIRE(fn(probe) >= fstar - 1e-9);
      }
    }
  }
}

TEST_CASE("even functions are symmetric under negation") {
  RngStream rng(5);
  for (const std::string name : {"sphere", "rastrigin", "ackley", "griewank"}) {
    const auto& fn = benchmark(name);
    const SearchSpace space = fn.space(8);
    for (int i = 0; i < 100; ++i) {
      const auto x = space.uniform_point(rng);
      std::vector<double> neg(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) neg[j] = -x[j];
      REQUIRE(fn(x) == Catch::Approx(fn(neg)).margin(1e-12));
    }
  }
}

// Independent dense-grid + local-polish oracle over [-10,10]^2; the catalog
// claims exactly 18 distinct global minimizers at -186.7309.
TEST_CASE("shubert grid oracle finds exactly 18 global minimizers") {
  const auto& fn = benchmark("shubert");
  const double step = 0.01;
  const int cells = static_cast<int>(std::lround(20.0 / step));

  double fmin = 0.0;
  for (int iy = 0; iy <= cells; ++iy) {
    const double y = -10.0 + step * iy;
    for (int ix = 0; ix <= cells; ++ix) {
      const double x = -10.0 + step * ix;
      fmin = std::min(fmin, fn({x, y}));
    }
  }
  REQUIRE(fmin < -186.0);

  // collect near-minimal grid cells and polish with coordinate Newton steps
  std::vector<std::pair<double, double>> minimizers;
  auto polish = [&fn](double x, double y) {
    const double h = 1e-5;
    for (int it = 0; it < 60; ++it) {
      const double gx = (fn({x + h, y}) - fn({x - h, y})) / (2 * h);
      const double hxx =
          (fn({x + h, y}) - 2 * fn({x, y}) + fn({x - h, y})) / (h * h);
      if (hxx > 0) x -= gx / hxx;
      const double gy = (fn({x, y + h}) - fn({x, y - h})) / (2 * h);
      const double hyy =
          (fn({x, y + h}) - 2 * fn({x, y}) + fn({x, y - h})) / (h * h);
      if (hyy > 0) y -= gy / hyy;
    }
    return std::make_pair(x, y);
  };

  for (int iy = 0; iy <= cells; ++iy) {
    const double y = -10.0 + step * iy;
    for (int ix = 0; ix <= cells; ++ix) {
      const double x = -10.0 + step * ix;
      if (fn({x, y}) > fmin + 2.0) continue;
      const auto [px, py] = polish(x, y);
      if (px < -10.0 || px > 10.0 || py < -10.0 || py > 10.0) continue;
      if (fn({px, py}) > -186.7309 + 1e-3) continue;
      bool duplicate = false;
      for (const auto& [qx, qy] : minimizers) {
        if ((px - qx) * (px - qx) + (py - qy) * (py - qy) < 1e-4) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) minimizers.emplace_back(px, py);
    }
  }

  REQUIRE(minimizers.size() == 18);
  for (const auto& [x, y] : minimizers) {
    REQUIRE(fn({x, y}) == Catch::Approx(-186.7309).margin(1e-3));
  }

  // and they coincide with the catalog's stored points
  const OptimumInfo opt = known_optimum("shubert", 2);
  REQUIRE(opt.points.size() == 18);
  for (const auto& stored : opt.points) {
    bool matched = false;
    for (const auto& [x, y] : minimizers) {
      if ((stored[0] - x) * (stored[0] - x) +
              (stored[1] - y) * (stored[1] - y) <
          1e-6) {
        matched = true;
        break;
      }
    }
    REQUIRE(matched);
  }
}

TEST_CASE("catalog exports as JSON") {
  const auto j = catalog_json();
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 9);
  bool saw_easom = false;
  for (const auto& item : j) {
    REQUIRE(item.contains("name"));
    REQUIRE(item.contains("dim_rule"));
    REQUIRE(item.contains("lower"));
    REQUIRE(item.contains("upper"));
    REQUIRE(item.contains("known_best_value"));
    REQUIRE(item.contains("analytic"));
    if (item["name"] == "easom") {
      saw_easom = true;
      REQUIRE(item["dim_rule"] == "fixed");
      REQUIRE(item["lower"] == -100.0);
      REQUIRE(item["upper"] == 100.0);
      REQUIRE(item["known_best_value"] == -1.0);
      REQUIRE(item["analytic"] == true);
    }
  }
  REQUIRE(saw_easom);
}
