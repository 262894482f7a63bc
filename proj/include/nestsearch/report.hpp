#pragma once

// Report emission for experiment results: CSV, JSON and Markdown
// comparison tables, plus per-run convergence traces. Output is bit-stable
// for identical inputs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nestsearch/solver.hpp"
#include "nestsearch/statistics.hpp"

namespace nestsearch {

enum class ReportFormat { kCsv, kJson, kMarkdown };

inline ReportFormat report_format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw std::invalid_argument("unknown report format '" + name +
                              "'; valid formats: csv json markdown");
}

inline constexpr const char* kCsvHeader =
    "algorithm,function,dim,n_or_pop,p_a,trials,successes,success_rate,"
    "mean_evals,std_evals,epsilon,max_evals,master_seed";

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace detail

inline nlohmann::json to_json(const SummaryStats& s) {
  nlohmann::json j{{"algorithm", s.algorithm},
                   {"function", s.function_name},
                   {"dim", s.dim},
                   {"n_or_pop", s.n_or_pop},
                   {"trials", s.trials},
                   {"successes", s.successes},
                   {"success_rate", s.success_rate},
                   {"mean_evals", s.mean_evals},
                   {"std_evals", s.std_evals},
                   {"epsilon", s.epsilon},
                   {"max_evals", s.max_evals},
                   {"master_seed", s.master_seed}};
  if (s.has_pa()) {
    j["p_a"] = s.p_a;
  } else {
    j["p_a"] = nullptr;
  }
  return j;
}

inline SummaryStats summary_from_json(const nlohmann::json& j) {
  SummaryStats s;
  s.algorithm = j.at("algorithm").get<std::string>();
  s.function_name = j.at("function").get<std::string>();
  s.dim = j.at("dim").get<std::size_t>();
  s.n_or_pop = j.at("n_or_pop").get<std::size_t>();
  s.p_a = j.at("p_a").is_null() ? -1.0 : j.at("p_a").get<double>();
  s.trials = j.at("trials").get<std::uint64_t>();
  s.successes = j.at("successes").get<std::uint64_t>();
  s.success_rate = j.at("success_rate").get<double>();
  s.mean_evals = j.at("mean_evals").get<double>();
  s.std_evals = j.at("std_evals").get<double>();
  s.epsilon = j.at("epsilon").get<double>();
  s.max_evals = j.at("max_evals").get<std::uint64_t>();
  s.master_seed = j.at("master_seed").get<std::uint64_t>();
  return s;
}

inline void emit_csv(const std::vector<SummaryStats>& results,
                     std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const SummaryStats& s : results) {
    out << s.algorithm << ',' << s.function_name << ',' << s.dim << ','
        << s.n_or_pop << ',' << (s.has_pa() ? detail::format_double(s.p_a) : "")
        << ',' << s.trials << ',' << s.successes << ','
        << detail::format_double(s.success_rate) << ','
        << detail::format_double(s.mean_evals) << ','
        << detail::format_double(s.std_evals) << ','
        << detail::format_double(s.epsilon) << ',' << s.max_evals << ','
        << s.master_seed << "\n";
  }
}

inline void emit_json(const std::vector<SummaryStats>& results,
                      std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SummaryStats& s : results) arr.push_back(to_json(s));
  out << arr.dump(2) << "\n";
}

/// Comparison table: one row per (function, dim), one column per algorithm,
/// cells in the "mean ± std (rate%)" format. Rows and columns appear in
/// first-seen order.
inline void emit_markdown(const std::vector<SummaryStats>& results,
                          std::ostream& out) {
  std::vector<std::string> algos;
  std::vector<std::string> rows;
  std::map<std::string, std::map<std::string, std::string>> cells;
  for (const SummaryStats& s : results) {
    const std::string row =
        s.function_name + " (d=" + std::to_string(s.dim) + ")";
    if (std::find(algos.begin(), algos.end(), s.algorithm) == algos.end()) {
      algos.push_back(s.algorithm);
    }
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) {
      rows.push_back(row);
    }
    cells[row][s.algorithm] = format_summary(s);
  }

  out << "| Function |";
  for (const auto& a : algos) out << ' ' << a << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < algos.size(); ++i) out << "---|";
  out << "\n";
  for (const auto& row : rows) {
    out << "| " << row << " |";
    for (const auto& a : algos) {
      const auto& byAlgo = cells[row];
      const auto it = byAlgo.find(a);
      out << ' ' << (it == byAlgo.end() ? "-" : it->second) << " |";
    }
    out << "\n";
  }
}

inline void emit_report(const std::vector<SummaryStats>& results,
                        ReportFormat format, std::ostream& out) {
  if (results.empty()) {
    throw std::invalid_argument("emit_report: results must be non-empty");
  }
  switch (format) {
    case ReportFormat::kCsv: emit_csv(results, out); break;
    case ReportFormat::kJson: emit_json(results, out); break;
    case ReportFormat::kMarkdown: emit_markdown(results, out); break;
  }
}

inline void emit_report(const std::vector<SummaryStats>& results,
                        ReportFormat format,
                        const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) {
    throw std::runtime_error("emit_report: cannot open '" +
                             destination.string() + "' for writing");
  }
  emit_report(results, format, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("emit_report: failed writing '" +
                             destination.string() + "'");
  }
}

/// Per-run convergence trace as `evals,best_value` CSV.
inline void write_trace_csv(const RunResult& run, std::ostream& out) {
  out << "evals,best_value\n";
  for (const TracePoint& p : run.trace) {
    out << p.evals << ',' << detail::format_double(p.best_value) << "\n";
  }
}

inline void write_trace_csv(const RunResult& run,
                            const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_trace_csv: cannot open '" +
                             destination.string() + "' for writing");
  }
  write_trace_csv(run, out);
}

}  // namespace nestsearch
