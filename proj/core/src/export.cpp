#include "sbppa/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace sbppa {
namespace {

using nlohmann::json;

std::string format_real(double v)
{
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

// JSON has no representation for non-finite reals; they travel as strings.
json real(double v)
{
  return std::isfinite(v) ? json(v) : json(format_real(v));
}

double read_real(const json& j)
{
  if (j.is_number()) {
    return j.get<double>();
  }
  const auto s = j.get<std::string>();
  if (s == "inf") {
    return std::numeric_limits<double>::infinity();
  }
  if (s == "-inf") {
    return -std::numeric_limits<double>::infinity();
  }
  return std::numeric_limits<double>::quiet_NaN();
}

json config_json(const SbppaConfig& c)
{
  return json{{"population_size", c.population_size},
              {"perturbation_rate", c.perturbation_rate},
              {"lambda", c.lambda},
              {"poisson_threshold", c.poisson_threshold},
              {"beta", c.beta},
              {"max_generations", c.max_generations},
              {"max_evaluations", c.max_evaluations},
              {"trial_runs", c.trial_runs},
              {"mode_policy", to_string(c.mode_policy)},
              {"rng_seed", c.rng_seed}};
}

SbppaConfig read_config(const json& j)
{
  SbppaConfig c;
  c.population_size = j.at("population_size").get<std::size_t>();
  c.perturbation_rate = j.at("perturbation_rate").get<double>();
  c.lambda = j.at("lambda").get<double>();
  c.poisson_threshold = j.at("poisson_threshold").get<double>();
  c.beta = j.at("beta").get<double>();
  c.max_generations = j.at("max_generations").get<std::uint64_t>();
  c.max_evaluations = j.at("max_evaluations").get<std::uint64_t>();
  c.trial_runs = j.at("trial_runs").get<std::size_t>();
  c.mode_policy = parse_mode_policy(j.at("mode_policy").get<std::string>());
  c.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  return c;
}

json stats_json(const ExperimentStats& s)
{
  return json{{"best", real(s.best)},
              {"worst", real(s.worst)},
              {"mean", real(s.mean)},
              {"sd", real(s.sd)},
              {"feasible_runs", s.feasible_runs},
              {"total_runs", s.total_runs}};
}

ExperimentStats read_stats(const json& j, const std::string& problem)
{
  ExperimentStats s;
  s.problem = problem;
  s.best = read_real(j.at("best"));
  s.worst = read_real(j.at("worst"));
  s.mean = read_real(j.at("mean"));
  s.sd = read_real(j.at("sd"));
  s.feasible_runs = j.at("feasible_runs").get<std::size_t>();
  s.total_runs = j.at("total_runs").get<std::size_t>();
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << contents;
  out.flush();
  if (!out) {
    throw IoError("write to '" + path.string() + "' failed");
  }
}

} // namespace

std::string to_string(ModePolicy policy)
{
  return policy == ModePolicy::SampledK ? "sampled-k" : "agent-index";
}

ModePolicy parse_mode_policy(std::string_view name)
{
  if (name == "sampled-k") {
    return ModePolicy::SampledK;
  }
  if (name == "agent-index") {
    return ModePolicy::AgentIndex;
  }
  throw std::invalid_argument("unknown mode policy '" + std::string(name) +
                              "' (expected sampled-k or agent-index)");
}

std::string runs_csv(const std::vector<RunRecord>& runs)
{
  std::string out = "run_index,seed,best_objective,violation,evals_used\n";
  for (const RunRecord& r : runs) {
    out += std::to_string(r.run_index);
    out += ',';
    out += std::to_string(r.rng_seed);
    out += ',';
    out += format_real(r.best.objective);
    out += ',';
    out += format_real(r.best.violation.total);
    out += ',';
    out += std::to_string(r.evals_used);
    out += '\n';
  }
  return out;
}

std::string trace_csv(const std::vector<RunRecord>& runs)
{
  std::string out = "run_index,generation,best_objective\n";
  for (const RunRecord& r : runs) {
    const std::string prefix = std::to_string(r.run_index) + ',';
    for (const TracePoint& t : r.trace) {
      out += prefix;
      out += std::to_string(t.generation);
      out += ',';
      out += format_real(t.best_objective);
      out += '\n';
    }
  }
  return out;
}

std::string results_json(const ProblemSpec& problem, const SbppaConfig& config,
                         const ExperimentResult& result)
{
  json runs = json::array();
  for (const RunRecord& r : result.runs) {
    json position = json::array();
    for (double v : r.best.position) {
      position.push_back(real(v));
    }
    runs.push_back(json{{"run_index", r.run_index},
                        {"seed", r.rng_seed},
                        {"best_objective", real(r.best.objective)},
                        {"violation", real(r.best.violation.total)},
                        {"feasible", r.best.violation.feasible()},
                        {"evals_used", r.evals_used},
                        {"generations", r.trace.size()},
                        {"position", std::move(position)}});
  }
  json doc{{"problem", problem.name},
           {"config", config_json(config)},
           {"stats", stats_json(result.stats)},
           {"pop_best_stats", stats_json(result.pop_best_stats)},
           {"runs", std::move(runs)}};
  return doc.dump(2) + "\n";
}

void export_results(const ProblemSpec& problem, const SbppaConfig& config,
                    const ExperimentResult& result, ExportFormat format,
                    const std::filesystem::path& path)
{
  write_file(path, format == ExportFormat::Csv ? runs_csv(result.runs)
                                               : results_json(problem, config, result));
}

void export_trace(const std::vector<RunRecord>& runs, const std::filesystem::path& path)
{
  write_file(path, trace_csv(runs));
}

LoadedResults parse_results_json(const std::string& text)
{
  const json doc = json::parse(text);
  LoadedResults out;
  out.problem = doc.at("problem").get<std::string>();
  out.config = read_config(doc.at("config"));
  out.stats = read_stats(doc.at("stats"), out.problem);
  out.pop_best_stats = read_stats(doc.at("pop_best_stats"), out.problem);
  for (const json& r : doc.at("runs")) {
    RunRecord rec;
    rec.run_index = r.at("run_index").get<std::size_t>();
    rec.rng_seed = r.at("seed").get<std::uint64_t>();
    rec.best.objective = read_real(r.at("best_objective"));
    rec.best.violation.total = read_real(r.at("violation"));
    rec.evals_used = r.at("evals_used").get<std::uint64_t>();
    for (const json& v : r.at("position")) {
      rec.best.position.push_back(read_real(v));
    }
    out.runs.push_back(std::move(rec));
  }
  return out;
}

LoadedResults load_results_json(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_results_json(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed results file '" + path.string() + "': " + e.what());
  }
}

} // namespace sbppa
