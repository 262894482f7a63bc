#pragma once

// Aggregate statistics over repeated solver trials and the paper-style
// "mean ± std (rate%)" cell formatting.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nestsearch {

/// Arithmetic mean and sample standard deviation (n - 1 denominator;
/// 0 for a singleton). Throws on an empty list.
inline std::pair<double, double> summarize(const std::vector<double>& values) {
  if (values.empty()) {
    throw std::invalid_argument("summarize: values must be non-empty");
  }
  double sum = 0.0;
  for (const double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t evals = 0;
  double best_value = 0.0;
  bool success = false;
};

/// Aggregate over the trials of one experiment cell. Evaluation-count
/// statistics cover successful trials only; when no trial succeeds they are
/// reported as 0 (successes == 0 is the flag).
struct SummaryStats {
  std::string algorithm;
  std::string function_name;
  std::size_t dim = 0;
  std::size_t n_or_pop = 0;   // nests (CS), population (GA) or swarm (PSO)
  double p_a = -1.0;          // abandonment fraction; < 0 when not applicable
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0.0;
  double mean_evals = 0.0;
  double std_evals = 0.0;
  double epsilon = 0.0;
  std::uint64_t max_evals = 0;
  std::uint64_t master_seed = 0;
  std::vector<TrialRecord> per_trial;

  bool has_pa() const noexcept { return p_a >= 0.0; }
};

/// True on the serialized fields (per-trial records are not part of the
/// reporting schema).
inline bool operator==(const SummaryStats& a, const SummaryStats& b) {
  return a.algorithm == b.algorithm && a.function_name == b.function_name &&
         a.dim == b.dim && a.n_or_pop == b.n_or_pop && a.p_a == b.p_a &&
         a.trials == b.trials && a.successes == b.successes &&
         a.success_rate == b.success_rate && a.mean_evals == b.mean_evals &&
         a.std_evals == b.std_evals && a.epsilon == b.epsilon &&
         a.max_evals == b.max_evals && a.master_seed == b.master_seed;
}

namespace detail {

/// Integer rounding, halves away from zero.
inline long long round_half_away(double v) { return std::llround(v); }

/// Success rate as a percentage string: no decimals when integral,
/// otherwise up to four decimals with trailing zeros trimmed.
inline std::string format_rate_percent(double rate) {
  const double pct = rate * 100.0;
  const double nearest = std::round(pct);
  if (std::abs(pct - nearest) < 1e-9) {
    return std::to_string(static_cast<long long>(nearest));
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", pct);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace detail

/// Paper-style cell: "927 ± 105 (100%)".
inline std::string format_summary(const SummaryStats& s) {
  return std::to_string(detail::round_half_away(s.mean_evals)) + " ± " +
         std::to_string(detail::round_half_away(s.std_evals)) + " (" +
         detail::format_rate_percent(s.success_rate) + "%)";
}

}  // namespace nestsearch
