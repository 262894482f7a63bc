#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "nestsearch/rng.hpp"

using nestsearch::RngStream;
using nestsearch::derive_seed;

TEST_CASE("same seed gives a bit-identical sequence") {
  RngStream a(12345);
  RngStream b(12345);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(a.next_u64() == b.next_u64());
  }
  RngStream c(12345);
  RngStream d(12345);
  for (int i = 0; i < 100; ++i) {
    REQUIRE(c.uniform01() == d.uniform01());
    REQUIRE(c.normal() == d.normal());
  }
}

TEST_CASE("different seeds give different sequences") {
  RngStream a(1);
  RngStream b(2);
  int distinct = 0;
  for (int i = 0; i < 64; ++i) {
    if (a.next_u64() != b.next_u64()) ++distinct;
  }
  REQUIRE(distinct > 60);
}

TEST_CASE("substreams are reproducible and mutually distinct") {
  std::set<std::uint64_t> first_words;
  for (std::uint64_t k = 0; k < 100; ++k) {
    RngStream s1 = RngStream::substream(777, k);
    RngStream s2 = RngStream::substream(777, k);
    const std::uint64_t w = s1.next_u64();
    REQUIRE(w == s2.next_u64());
    first_words.insert(w);
  }
  REQUIRE(first_words.size() == 100);
  // trial stream != master stream
  REQUIRE(RngStream::substream(777, 0).next_u64() != RngStream(777).next_u64());
  // derive_seed is the substream mapping
  REQUIRE(RngStream(derive_seed(777, 3)).next_u64() ==
          RngStream::substream(777, 3).next_u64());
}

TEST_CASE("uniform01 lies in [0,1) and fills the range") {
  RngStream rng(9);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  REQUIRE(lo < 1e-3);
  REQUIRE(hi > 1.0 - 1e-3);
}

TEST_CASE("uniform_index covers [0,n) and rejects n=0") {
  RngStream rng(4);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const std::size_t k = rng.uniform_index(7);
    REQUIRE(k < 7);
    ++counts[k];
  }
  for (const int c : counts) {
    REQUIRE(c > 8000);  // roughly uniform
  }
  REQUIRE_THROWS_AS(rng.uniform_index(0), std::invalid_argument);
}

TEST_CASE("normal draws have the right first two moments") {
  RngStream rng(11);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  REQUIRE(std::abs(mean) < 0.01);
  REQUIRE(std::abs(var - 1.0) < 0.02);
}
