#pragma once

// Heavy-tailed Lévy-flight step sampling via Mantegna's algorithm.
//
// Step lengths follow a power law with density exponent lambda; the sampler
// works in terms of the stable index beta = lambda - 1 (survival function
// ~ x^-beta). Each coordinate is u / |v|^(1/beta) with u ~ N(0, sigma_u^2),
// v ~ N(0, 1) and sigma_u the Mantegna scale for beta.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "nestsearch/rng.hpp"

namespace nestsearch {

/// Mantegna scale sigma_u for stable index beta in (0, 2):
///   sigma_u = [ Gamma(1+b) sin(pi b / 2) / (Gamma((1+b)/2) b 2^((b-1)/2)) ]^(1/b)
/// beta = 2 is rejected: sin(pi) = 0 makes the expression degenerate
/// (Gaussian limit).
inline double mantegna_sigma(double beta) {
  if (!(beta > 0.0) || !(beta < 2.0)) {
    throw std::invalid_argument("mantegna_sigma: beta must lie in (0, 2)");
  }
  const double num =
      std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta *
                     std::pow(2.0, (beta - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / beta);
}

/// Validated Lévy step parameters: lambda is the power-law exponent of the
/// step-length density, beta = lambda - 1 the stable index, sigma_u the
/// precomputed Mantegna scale.
struct LevyParams {
  double lambda;
  double beta;
  double sigma_u;

  explicit LevyParams(double lambda_) : lambda(lambda_), beta(lambda_ - 1.0) {
    if (!(lambda > 1.0) || !(lambda <= 3.0)) {
      throw std::invalid_argument("LevyParams: lambda must lie in (1, 3]");
    }
    if (beta >= 2.0) {
      throw std::invalid_argument(
          "LevyParams: lambda = 3 gives beta = 2, the degenerate Gaussian "
          "limit of the Mantegna sampler");
    }
    sigma_u = mantegna_sigma(beta);
  }
};

/// One heavy-tailed step vector: `dim` independent Mantegna draws.
/// Draw order is fixed (u before v, coordinate-major) and each coordinate
/// consumes exactly four uniforms, so sequences are bit-reproducible.
inline std::vector<double> sample_levy_step(RngStream& rng,
                                            const LevyParams& params,
                                            std::size_t dim) {
  if (dim == 0) {
    throw std::invalid_argument("sample_levy_step: dim must be > 0");
  }
  std::vector<double> step(dim);
  const double inv_beta = 1.0 / params.beta;
  for (std::size_t j = 0; j < dim; ++j) {
    const double u = rng.normal(params.sigma_u);
    const double v = rng.normal();
    step[j] = u / std::pow(std::abs(v), inv_beta);
  }
  return step;
}

}  // namespace nestsearch
