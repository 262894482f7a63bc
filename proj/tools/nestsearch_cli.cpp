// nestsearch command line: single runs, benchmark experiments, algorithm
// comparisons and parameter sweeps over the built-in test functions.
//
// Exit codes: 0 success, 2 usage error (bad flags or parameter values),
// 1 runtime error (unknown names, I/O failures). Results go to stdout or
// --output; diagnostics go to stderr. With an explicit --seed, stdout is
// byte-identical across invocations.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nestsearch/nestsearch.hpp"

namespace {

using namespace nestsearch;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string fmt_double_exact(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string function;
  std::size_t dim = 0;
  std::string algo = "cs";
  std::uint64_t runs = 100;
  std::optional<std::uint64_t> seed;
  std::uint64_t max_evals = 100000;
  double tol = 1e-5;
  std::string output;
  std::string format;

  // Cuckoo knobs (paper-recommended defaults).
  std::size_t nests = 15;
  double pa = 0.25;
  double alpha = 0.01;
  double lambda = 2.5;
  bool around_best = false;
  std::string discovery = "rank";
  double mixing_cross = 0.0;
};

std::uint64_t resolve_seed(CommonOpts& opts) {
  if (!opts.seed) {
    std::random_device rd;
    const std::uint64_t generated =
        (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    opts.seed = generated;
    std::cerr << "note: no --seed given, using generated seed " << generated
              << "\n";
  }
  return *opts.seed;
}

CsConfig make_cs_config(const CommonOpts& o) {
  CsConfig cfg;
  cfg.nests = o.nests;
  cfg.p_a = o.pa;
  cfg.alpha_frac = o.alpha;
  cfg.lambda = o.lambda;
  cfg.around_best = o.around_best;
  if (o.discovery == "bernoulli") {
    cfg.discovery_mode = DiscoveryMode::kBernoulli;
  } else if (o.discovery == "mixing") {
    cfg.discovery_mode = DiscoveryMode::kMixing;
  } else {
    cfg.discovery_mode = DiscoveryMode::kRankReplace;
  }
  cfg.mixing_cross = o.mixing_cross;
  return cfg;
}

ExperimentSpec make_spec(const CommonOpts& o, std::uint64_t master_seed) {
  ExperimentSpec spec;
  spec.algorithm = algorithm_from_name(o.algo);
  spec.function_name = o.function;
  spec.dim = o.dim;
  spec.cs = make_cs_config(o);
  spec.trials = o.runs;
  spec.master_seed = master_seed;
  spec.epsilon = o.tol;
  spec.max_evals = o.max_evals;
  return spec;
}

/// Writes `text` to --output when given, stdout otherwise.
void deliver(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + output + "' for writing");
  }
  out << text;
  if (!out.flush()) {
    throw std::runtime_error("failed writing '" + output + "'");
  }
}

int cmd_run(CommonOpts& opts, const std::string& trace_file) {
  const std::uint64_t seed = resolve_seed(opts);
  const BenchmarkFunction& fn = benchmark(opts.function);
  const std::size_t d = fn.resolve_dim(opts.dim);
  const SearchSpace space = fn.space(d);
  const OptimumInfo opt = fn.optimum(d);
  const Objective objective = [&fn](const std::vector<double>& x) {
    return fn.eval(x);
  };

  RunResult result;
  if (opts.algo == "cs") {
    CsConfig cfg = make_cs_config(opts);
    cfg.seed = seed;
    cfg.max_evals = opts.max_evals;
    cfg.target_tol = opts.tol;
    result = run_cuckoo(objective, space, cfg, opt.value);
  } else if (opts.algo == "ga") {
    GaConfig cfg;
    cfg.seed = seed;
    cfg.max_evals = opts.max_evals;
    cfg.target_tol = opts.tol;
    result = run_ga(objective, space, cfg, opt.value);
  } else {
    PsoConfig cfg;
    cfg.seed = seed;
    cfg.max_evals = opts.max_evals;
    cfg.target_tol = opts.tol;
    result = run_pso(objective, space, cfg, opt.value);
  }

  std::ostringstream out;
  out << "algorithm: " << opts.algo << "\n"
      << "function: " << opts.function << "\n"
      << "dim: " << d << "\n"
      << "seed: " << seed << "\n"
      << "max_evals: " << opts.max_evals << "\n"
      << "tolerance: " << fmt_double(opts.tol) << "\n"
      << "target: " << fmt_double_exact(opt.value) << "\n"
      << "evals: " << result.evals_used << "\n"
      << "generations: " << result.generations << "\n"
      << "success: " << (result.success ? "true" : "false") << "\n"
      << "best_value: " << fmt_double_exact(result.best.value) << "\n";
  out << "best_position: ";
  for (std::size_t j = 0; j < result.best.position.size(); ++j) {
    out << (j ? "," : "") << fmt_double_exact(result.best.position[j]);
  }
  out << "\n";
  deliver(out.str(), opts.output);

  if (!trace_file.empty()) {
    write_trace_csv(result, std::filesystem::path(trace_file));
  }
  return 0;
}

int cmd_bench(CommonOpts& opts) {
  const std::uint64_t seed = resolve_seed(opts);
  const ExperimentSpec spec = make_spec(opts, seed);
  const SummaryStats stats = run_trials(spec);

  std::ostringstream out;
  if (opts.format.empty() || opts.format == "cell") {
    out << "# " << stats.algorithm << " " << stats.function_name
        << " d=" << stats.dim << " trials=" << stats.trials << " seed=" << seed
        << " eps=" << fmt_double(stats.epsilon)
        << " budget=" << stats.max_evals << "\n"
        << format_summary(stats) << "\n";
  } else {
    std::ostringstream body;
    emit_report({stats}, report_format_from_name(opts.format), body);
    out << body.str();
  }
  deliver(out.str(), opts.output);
  return 0;
}

int cmd_compare(CommonOpts& opts, std::vector<std::string> functions,
                std::vector<std::string> algos) {
  const std::uint64_t seed = resolve_seed(opts);
  if (functions.empty()) functions = benchmark_names();
  if (algos.empty()) algos = {"cs", "ga", "pso"};

  std::vector<SummaryStats> results;
  for (const auto& fname : functions) {
    for (const auto& algo : algos) {
      CommonOpts cell = opts;
      cell.function = fname;
      cell.algo = algo;
      results.push_back(run_trials(make_spec(cell, seed)));
    }
  }

  std::ostringstream out;
  const ReportFormat format = opts.format.empty()
                                  ? ReportFormat::kMarkdown
                                  : report_format_from_name(opts.format);
  emit_report(results, format, out);
  deliver(out.str(), opts.output);
  return 0;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(static_cast<std::size_t>(std::stoull(item)));
  }
  return out;
}

int cmd_sweep(CommonOpts& opts, const std::string& grid_n_csv,
              const std::string& grid_pa_csv) {
  const std::uint64_t seed = resolve_seed(opts);
  const std::vector<std::size_t> grid_n = parse_size_list(grid_n_csv);
  const std::vector<double> grid_pa = parse_double_list(grid_pa_csv);

  ExperimentSpec base = make_spec(opts, seed);
  base.algorithm = Algorithm::kCuckoo;
  const std::vector<SummaryStats> cells = parameter_sweep(base, grid_n, grid_pa);

  std::ostringstream out;
  if (opts.format.empty() || opts.format == "grid" ||
      opts.format == "markdown" || opts.format == "md") {
    // Markdown grid: one row per n, one column per p_a.
    out << "| n \\ p_a |";
    for (const double pa : grid_pa) out << ' ' << fmt_double(pa) << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < grid_pa.size(); ++i) out << "---|";
    out << "\n";
    std::size_t idx = 0;
    for (const std::size_t n : grid_n) {
      out << "| " << n << " |";
      for (std::size_t c = 0; c < grid_pa.size(); ++c) {
        out << ' ' << format_summary(cells[idx++]) << " |";
      }
      out << "\n";
    }
  } else {
    emit_report(cells, report_format_from_name(opts.format), out);
  }
  deliver(out.str(), opts.output);
  return 0;
}

int cmd_list_functions(const std::string& format, const std::string& output) {
  std::ostringstream out;
  if (format == "json") {
    out << catalog_json().dump(2) << "\n";
  } else {
    out << "name          dims             domain                 best_value\n";
    for (const auto& fn : benchmark_catalog()) {
      const OptimumInfo opt = fn.optimum(fn.default_dim);
      char dims[32];
      if (fn.dim_rule == DimRule::kFixed) {
        std::snprintf(dims, sizeof(dims), "fixed %zu", fn.default_dim);
      } else {
        std::snprintf(dims, sizeof(dims), "any (default %zu)", fn.default_dim);
      }
      char line[160];
      std::snprintf(line, sizeof(line), "%-13s %-16s [%g, %g]^d %14.6g%s\n",
                    fn.name.c_str(), dims, fn.lower, fn.upper, opt.value,
                    opt.analytic ? "" : " (reference)");
      out << line;
    }
  }
  deliver(out.str(), output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nestsearch: cuckoo-search optimizer and benchmark harness"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string trace_file;
  std::vector<std::string> functions;
  std::vector<std::string> algos;
  std::string grid_n_csv = "5,10,15,20,50,100,150,250,500";
  std::string grid_pa_csv = "0,0.01,0.05,0.1,0.15,0.2,0.25,0.4,0.5";
  std::string list_format = "table";

  const auto algo_check = CLI::IsMember({"cs", "ga", "pso"});
  const auto add_cs_flags = [&](CLI::App* cmd) {
    cmd->add_option("--nests", opts.nests, "Cuckoo: number of host nests");
    cmd->add_option("--pa", opts.pa, "Cuckoo: abandonment fraction p_a");
    cmd->add_option("--alpha", opts.alpha, "Cuckoo: step scale fraction");
    cmd->add_option("--lambda", opts.lambda, "Cuckoo: Levy exponent lambda");
    cmd->add_flag("--around-best", opts.around_best,
                  "Cuckoo: scale steps by distance to the incumbent best");
    cmd->add_option("--discovery", opts.discovery,
                    "Cuckoo: abandonment mode (rank|bernoulli|mixing)")
        ->check(CLI::IsMember({"rank", "bernoulli", "mixing"}));
    cmd->add_option("--mixing-cross", opts.mixing_cross,
                    "Cuckoo: mixing crossover probability (0 = auto)");
  };
  const auto add_common = [&](CLI::App* cmd, bool with_runs) {
    cmd->add_option("--dim", opts.dim, "Dimension (0 = catalog default)");
    cmd->add_option("--seed", opts.seed, "Master seed (omitted: generated)");
    cmd->add_option("--max-evals", opts.max_evals, "Evaluation budget per run");
    cmd->add_option("--tol", opts.tol, "Success tolerance epsilon");
    cmd->add_option("--output", opts.output, "Write results to file");
    if (with_runs) {
      cmd->add_option("--runs", opts.runs, "Number of independent trials");
    }
  };

  CLI::App* run = app.add_subcommand("run", "Single optimizer run");
  run->add_option("--function", opts.function, "Benchmark function name")
      ->required();
  run->add_option("--algo", opts.algo, "Algorithm")->check(algo_check);
  add_common(run, false);
  add_cs_flags(run);
  run->add_option("--trace", trace_file, "Write evals,best_value trace CSV");

  CLI::App* bench = app.add_subcommand("bench", "Multi-trial benchmark cell");
  bench->add_option("--function", opts.function, "Benchmark function name")
      ->required();
  bench->add_option("--algo", opts.algo, "Algorithm")->check(algo_check);
  add_common(bench, true);
  add_cs_flags(bench);
  bench->add_option("--format", opts.format,
                    "Output format (cell|csv|json|markdown)")
      ->check(CLI::IsMember({"cell", "csv", "json", "markdown", "md"}));

  CLI::App* compare =
      app.add_subcommand("compare", "Compare algorithms across functions");
  compare->add_option("--function", functions,
                      "Function name (repeatable; default: all)");
  compare->add_option("--algo", algos,
                      "Algorithm (repeatable; default: cs ga pso)")
      ->check(algo_check);
  add_common(compare, true);
  add_cs_flags(compare);
  compare->add_option("--format", opts.format, "Output format (markdown|csv|json)")
      ->check(CLI::IsMember({"csv", "json", "markdown", "md"}));

  CLI::App* sweep =
      app.add_subcommand("sweep", "Cuckoo parameter sweep over n and p_a");
  sweep->add_option("--function", opts.function, "Benchmark function name")
      ->required();
  sweep->add_option("--grid-n", grid_n_csv, "Comma-separated n grid");
  sweep->add_option("--grid-pa", grid_pa_csv, "Comma-separated p_a grid");
  add_common(sweep, true);
  add_cs_flags(sweep);
  sweep->add_option("--format", opts.format, "Output format (grid|csv|json)")
      ->check(CLI::IsMember({"grid", "csv", "json", "markdown", "md"}));

  CLI::App* list = app.add_subcommand("list-functions",
                                      "Show the benchmark function catalog");
  list->add_option("--format", list_format, "Output format (table|json)")
      ->check(CLI::IsMember({"table", "json"}));
  std::string list_output;
  list->add_option("--output", list_output, "Write results to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(opts, trace_file);
    if (bench->parsed()) return cmd_bench(opts);
    if (compare->parsed()) return cmd_compare(opts, functions, algos);
    if (sweep->parsed()) return cmd_sweep(opts, grid_n_csv, grid_pa_csv);
    if (list->parsed()) return cmd_list_functions(list_format, list_output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
