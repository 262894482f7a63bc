#pragma once

// Shared run contract for all optimizers: candidate solutions, run results,
// and the evaluation bookkeeping every solver goes through.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nestsearch {

/// Black-box objective, minimization convention.
using Objective = std::function<double(const std::vector<double>&)>;

/// One candidate solution: a position and its objective value as of the
/// last evaluation.
struct Nest {
  std::vector<double> position;
  double value = 0.0;
};

struct TracePoint {
  std::uint64_t evals = 0;
  double best_value = 0.0;
};

/// Outcome of one solver run. `trace` holds one (evals_used, best_value)
/// point after initialization and one per generation; best_value is
/// non-increasing along it.
struct RunResult {
  Nest best;
  std::uint64_t evals_used = 0;
  bool success = false;
  std::uint64_t generations = 0;
  std::vector<TracePoint> trace;
};

namespace detail {

/// Counts every objective invocation, enforces the evaluation budget and
/// answers the success question against an optional known optimum.
class EvalTracker {
 public:
  EvalTracker(const Objective& objective, std::uint64_t max_evals,
              std::optional<double> known_optimum, double target_tol)
      : objective_(objective),
        max_evals_(max_evals),
        known_optimum_(known_optimum),
        target_tol_(target_tol) {}

  std::uint64_t count() const noexcept { return count_; }

  std::uint64_t remaining() const noexcept { return max_evals_ - count_; }

  double evaluate(const std::vector<double>& x) {
    if (count_ >= max_evals_) {
      throw std::logic_error("EvalTracker: evaluation budget exceeded");
    }
    ++count_;
    return objective_(x);
  }

  bool target_met(double best_value) const noexcept {
    return known_optimum_.has_value() &&
           std::abs(best_value - *known_optimum_) <= target_tol_;
  }

 private:
  const Objective& objective_;
  std::uint64_t max_evals_;
  std::optional<double> known_optimum_;
  double target_tol_;
  std::uint64_t count_ = 0;
};

}  // namespace detail
}  // namespace nestsearch
