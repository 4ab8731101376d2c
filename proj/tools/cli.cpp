#include "cli.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "sbppa/sbppa.hpp"

namespace sbppa::cli {
namespace {

struct UsageError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

std::string printf_string(const char* format, ...)
{
  char buf[512];
  va_list ap;
  va_start(ap, format);
  std::vsnprintf(buf, sizeof buf, format, ap);
  va_end(ap);
  return buf;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag)
{
  if (flag) {
    return *flag;
  }
  if (const char* env = std::getenv("SBPPA_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') {
      throw UsageError(std::string("SBPPA_SEED is not an unsigned integer: ") + env);
    }
    return v;
  }
  return kDefaultSeed;
}

std::string optimum_text(const ProblemSpec& p)
{
  if (p.known_optimum) {
    return printf_string("%.10g", *p.known_optimum);
  }
  if (p.reference_value) {
    return printf_string("(ref %.10g)", *p.reference_value);
  }
  return "-";
}

int list_problems(bool as_json, std::ostream& out)
{
  if (as_json) {
    out << catalog_json() << '\n';
    return kExitOk;
  }
  out << printf_string("%-14s %-20s %4s %5s %5s  %s\n", "name", "label", "dim", "ineq", "eq",
                       "optimum");
  for (auto name : problem_names()) {
    const ProblemSpec& p = get_problem(name);
    out << printf_string("%-14s %-20s %4zu %5zu %5zu  %s\n", p.name.c_str(), p.label.c_str(),
                         p.dimension, p.inequality_constraints.size(),
                         p.equality_constraints.size(), optimum_text(p).c_str());
  }
  return kExitOk;
}

std::string stats_line(const ExperimentStats& s)
{
  if (!s.defined()) {
    return printf_string("no feasible runs (0/%zu)", s.total_runs);
  }
  return printf_string("best %.10g  worst %.10g  mean %.10g  sd %.4g  feasible %zu/%zu", s.best,
                       s.worst, s.mean, s.sd, s.feasible_runs, s.total_runs);
}

struct RunOptions
{
  std::string problem;
  std::size_t runs = 30;
  std::size_t np = 10;
  double pr = 0.8;
  double lambda = 1.1;
  double beta = 1.5;
  std::optional<std::uint64_t> gmax;
  std::optional<std::uint64_t> max_eval;
  std::string mode = "agent-index";
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format;
  std::string trace_path;
  unsigned jobs = 0;
};

SbppaConfig build_config(const ProblemSpec& problem, const RunOptions& o)
{
  SbppaConfig c = SbppaConfig::defaults_for(problem);
  c.population_size = o.np;
  c.perturbation_rate = o.pr;
  c.lambda = o.lambda;
  c.beta = o.beta;
  c.trial_runs = o.runs;
  c.mode_policy = parse_mode_policy(o.mode);
  c.rng_seed = resolve_seed(o.seed);
  c.max_generations = o.gmax.value_or(problem.constrained()
                                          ? 2400
                                          : problem.dimension * 20000 / c.population_size);
  c.max_evaluations = o.max_eval.value_or(c.evaluations_for_generations());
  return c;
}

int run_command(const RunOptions& o, std::ostream& out)
{
  const ProblemSpec& problem = get_problem(o.problem);
  SbppaConfig config;
  try {
    config = build_config(problem, o);
    config.validate();
    if (config.trial_runs < config.population_size) {
      throw ConfigError("--runs must be at least --np");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const ExperimentResult result = run_experiment(problem, config, o.jobs);

  out << "problem " << problem.name << " (" << problem.label << "), " << config.trial_runs
      << " runs, NP=" << config.population_size << ", gmax=" << config.max_generations
      << ", mode=" << to_string(config.mode_policy) << ", seed=" << config.rng_seed << '\n';
  out << "all runs: " << stats_line(result.stats) << '\n';
  out << "pop_best: " << stats_line(result.pop_best_stats) << '\n';

  if (!o.out_path.empty()) {
    ExportFormat format = ExportFormat::Csv;
    if (o.format == "json" ||
        (o.format.empty() && std::filesystem::path(o.out_path).extension() == ".json")) {
      format = ExportFormat::Json;
    }
    export_results(problem, config, result, format, o.out_path);
  }
  if (!o.trace_path.empty()) {
    export_trace(result.runs, o.trace_path);
  }
  return kExitOk;
}

struct ReproduceOptions
{
  int table = 3;
  std::string scale = "desk";
  std::size_t runs = 30;
  std::optional<std::uint64_t> seed;
  std::string mode = "agent-index";
  unsigned jobs = 0;
};

/// Table budgets; desk scale caps the 30-dimensional functions at 10000.
std::uint64_t reproduce_generations(const ProblemSpec& p, std::size_t np, bool desk)
{
  if (p.constrained()) {
    return 2400;
  }
  const std::uint64_t full = p.dimension * 20000 / np;
  return desk && p.dimension >= 30 ? std::min<std::uint64_t>(full, 10000) : full;
}

int reproduce_command(const ReproduceOptions& o, std::ostream& out)
{
  if (o.table != 3 && o.table != 4) {
    throw UsageError("--table must be 3 or 4");
  }
  if (o.scale != "desk" && o.scale != "full") {
    throw UsageError("--scale must be desk or full");
  }
  const bool desk = o.scale == "desk";
  const std::uint64_t seed = resolve_seed(o.seed);
  ModePolicy mode;
  try {
    mode = parse_mode_policy(o.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  out << "table " << o.table << ", scale " << o.scale << ", " << o.runs
      << " runs per problem, mode " << to_string(mode) << ", seed " << seed << '\n';
  out << "verdicts: + ours better, - ours worse, ~ approximately equal (compared on mean)\n";

  const auto refs = reference_table(o.table);
  for (auto name : reference_problems(o.table)) {
    const ProblemSpec& problem = get_problem(name);
    SbppaConfig config = SbppaConfig::defaults_for(problem);
    config.trial_runs = o.runs;
    config.rng_seed = seed;
    config.mode_policy = mode;
    config.max_generations = reproduce_generations(problem, config.population_size, desk);
    config.max_evaluations = config.evaluations_for_generations();
    if (config.trial_runs < config.population_size) {
      throw UsageError("--runs must be at least the population size");
    }

    const ExperimentResult result = run_experiment(problem, config, o.jobs);
    out << '\n'
        << problem.name << " (" << problem.label << ", n=" << problem.dimension
        << ", gmax=" << config.max_generations << ")\n";
    out << "  ours, all runs: " << stats_line(result.stats) << '\n';
    out << "  ours, pop_best: " << stats_line(result.pop_best_stats) << '\n';
    for (const ReferenceEntry& raw : refs) {
      if (raw.problem != name) {
        continue;
      }
      const ReferenceEntry ref = normalized(raw);
      std::string verdict = "n/a";
      if (result.stats.defined()) {
        verdict = std::string(1, verdict_symbol(compare_to_reference(result.stats, ref)));
      }
      out << printf_string("  %-6s best %-14.8g worst %-14.8g mean %-14.8g sd %-11.4g  %s\n",
                           std::string(ref.algorithm).c_str(), ref.best, ref.worst, ref.mean,
                           ref.sd, verdict.c_str());
    }
  }
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Seed-based plant propagation optimizer and benchmark harness", "sbppa"};
  app.require_subcommand(1);

  bool list_json = false;
  auto* list = app.add_subcommand("list-problems", "Print the benchmark problem catalog");
  list->add_flag("--json", list_json, "Emit the catalog as JSON");

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Run a multi-trial experiment on one problem");
  run->add_option("--problem", run_opts.problem, "Problem name (see list-problems)")->required();
  run->add_option("--runs", run_opts.runs, "Trial runs")->capture_default_str();
  run->add_option("--np", run_opts.np, "Population size")->capture_default_str();
  run->add_option("--pr", run_opts.pr, "Perturbation rate")->capture_default_str();
  run->add_option("--lambda", run_opts.lambda, "Poisson arrival rate")->capture_default_str();
  run->add_option("--beta", run_opts.beta, "Levy stability index")->capture_default_str();
  run->add_option("--gmax", run_opts.gmax, "Maximum generations (default: table budget)");
  run->add_option("--max-eval", run_opts.max_eval, "Maximum evaluations per run");
  run->add_option("--mode", run_opts.mode, "Dispersion gate policy")
      ->check(CLI::IsMember({"sampled-k", "agent-index"}))
      ->capture_default_str();
  run->add_option("--seed", run_opts.seed, "Experiment seed (default: $SBPPA_SEED)");
  run->add_option("--out", run_opts.out_path, "Write per-run results here");
  run->add_option("--format", run_opts.format, "Output format for --out")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--trace", run_opts.trace_path, "Write per-generation traces here (CSV)");
  run->add_option("--jobs", run_opts.jobs, "Worker threads (0: all cores)")->capture_default_str();

  ReproduceOptions repro_opts;
  auto* repro = app.add_subcommand("reproduce", "Run a results table and compare to published values");
  repro->add_option("--table", repro_opts.table, "3 (unconstrained) or 4 (constrained)")
      ->required()
      ->check(CLI::IsMember({3, 4}));
  repro->add_option("--scale", repro_opts.scale, "desk or full budgets")
      ->check(CLI::IsMember({"desk", "full"}))
      ->capture_default_str();
  repro->add_option("--runs", repro_opts.runs, "Trial runs per problem")->capture_default_str();
  repro->add_option("--seed", repro_opts.seed, "Experiment seed (default: $SBPPA_SEED)");
  repro->add_option("--mode", repro_opts.mode, "Dispersion gate policy")
      ->check(CLI::IsMember({"sampled-k", "agent-index"}))
      ->capture_default_str();
  repro->add_option("--jobs", repro_opts.jobs, "Worker threads (0: all cores)")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list->parsed()) {
      return list_problems(list_json, out);
    }
    if (run->parsed()) {
      return run_command(run_opts, out);
    }
    return reproduce_command(repro_opts, out);
  } catch (const UnknownProblemError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

} // namespace sbppa::cli
