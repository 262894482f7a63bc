#pragma once

// Seedable deterministic random streams with derivable per-trial substreams.
//
// Core generator is xoshiro256++ (Blackman & Vigna, public domain) seeded
// through the SplitMix64 finalizer. The raw 64-bit sequence is bit-exact
// across platforms for a given seed; floating-point helpers are exact given
// the same libm. Substreams for trial k are derived from
// (master_seed, trial_index) so multi-trial experiments stay reproducible
// under any execution order.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace nestsearch {

namespace detail {

inline constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ULL;

/// SplitMix64 output finalizer; bijective avalanche mix of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// Maps (master_seed, stream_index) to the seed of an independent substream.
/// Distinct indices give distinct, well-mixed seeds; index 0 is already a
/// different stream than RngStream(master_seed) itself.
inline std::uint64_t derive_seed(std::uint64_t master_seed,
                                 std::uint64_t stream_index) noexcept {
  std::uint64_t h = detail::mix64(master_seed + detail::kSplitMixGamma);
  h = detail::mix64(h ^ (stream_index * 0xd1b54a32d192ed03ULL + 1));
  return h;
}

/// Single-owner random stream. One stream per solver run; never shared
/// between concurrently executing runs.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {
    // Expand the seed into four state words with SplitMix64.
    std::uint64_t x = seed;
    for (auto& s : state_) {
      x += detail::kSplitMixGamma;
      s = detail::mix64(x);
    }
    state_[0] |= 1;  // xoshiro state must not be all zero
  }

  /// Stream for trial `stream_index` of an experiment seeded by
  /// `master_seed`.
  static RngStream substream(std::uint64_t master_seed,
                             std::uint64_t stream_index) {
    return RngStream(derive_seed(master_seed, stream_index));
  }

  std::uint64_t seed() const noexcept { return seed_; }

  /// Next raw 64-bit word (xoshiro256++).
  std::uint64_t next_u64() noexcept {
    const std::uint64_t result =
        detail::rotl64(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) noexcept {
    return lo + uniform01() * (hi - lo);
  }

  /// Uniform index in [0, n). Consumes exactly one 64-bit word.
  std::size_t uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: n must be > 0");
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Standard normal draw via the Box-Muller cosine branch. Always consumes
  /// exactly two uniforms, which keeps draw counts deterministic.
  double normal() noexcept {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Normal draw with standard deviation `sigma`.
  double normal(double sigma) noexcept { return sigma * normal(); }

 private:
  std::array<std::uint64_t, 4> state_{};
  std::uint64_t seed_ = 0;
};

}  // namespace nestsearch
