#pragma once

// Bounded box search domains.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestsearch/rng.hpp"

namespace nestsearch {

/// Feasible box: per-coordinate lower/upper bounds, lower[j] < upper[j].
struct SearchSpace {
  std::vector<double> lower;
  std::vector<double> upper;

  SearchSpace(std::vector<double> lo, std::vector<double> up)
      : lower(std::move(lo)), upper(std::move(up)) {
    if (lower.empty() || lower.size() != upper.size()) {
      throw std::invalid_argument(
          "SearchSpace: bounds must be non-empty and of equal length");
    }
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (!(lower[j] < upper[j])) {
        throw std::invalid_argument(
            "SearchSpace: lower[" + std::to_string(j) +
            "] must be strictly below upper[" + std::to_string(j) + "]");
      }
    }
  }

  /// Hypercube [lo, hi]^dim.
  static SearchSpace cube(std::size_t dim, double lo, double hi) {
    return SearchSpace(std::vector<double>(dim, lo),
                       std::vector<double>(dim, hi));
  }

  std::size_t dim() const noexcept { return lower.size(); }

  double width(std::size_t j) const noexcept { return upper[j] - lower[j]; }

  bool contains(const std::vector<double>& x) const noexcept {
    if (x.size() != dim()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] < lower[j] || x[j] > upper[j]) return false;
    }
    return true;
  }

  /// I.i.d. uniform point in the box; consumes exactly dim() uniforms.
  std::vector<double> uniform_point(RngStream& rng) const {
    std::vector<double> x(dim());
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = rng.uniform(lower[j], upper[j]);
    }
    return x;
  }
};

/// Componentwise projection onto the box.
inline std::vector<double> clamp_to_bounds(const std::vector<double>& pos,
                                           const SearchSpace& space) {
  if (pos.size() != space.dim()) {
    throw std::invalid_argument(
        "clamp_to_bounds: position length does not match space dimension");
  }
  std::vector<double> out(pos.size());
  for (std::size_t j = 0; j < pos.size(); ++j) {
    out[j] = std::min(space.upper[j], std::max(space.lower[j], pos[j]));
  }
  return out;
}

}  // namespace nestsearch
