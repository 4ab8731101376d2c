/**
 * @file export.hpp
 * @brief CSV and JSON persistence of experiment results.
 *
 * Runs CSV:   run_index,seed,best_objective,violation,evals_used
 * Trace CSV:  run_index,generation,best_objective
 * JSON:       {"problem", "config", "stats", "pop_best_stats", "runs": [...]}
 *
 * Reals are written in shortest round-trip form, so re-reading a file
 * reproduces every value bit for bit.
 */
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbppa/experiment.hpp"

namespace sbppa {

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class ExportFormat { Csv, Json };

/// "sampled-k" / "agent-index"
std::string to_string(ModePolicy policy);
/// Throws std::invalid_argument on an unknown name.
ModePolicy parse_mode_policy(std::string_view name);

std::string runs_csv(const std::vector<RunRecord>& runs);
std::string trace_csv(const std::vector<RunRecord>& runs);
std::string results_json(const ProblemSpec& problem, const SbppaConfig& config,
                         const ExperimentResult& result);

/// Writes runs_csv or results_json to path. Throws IoError naming the path.
void export_results(const ProblemSpec& problem, const SbppaConfig& config,
                    const ExperimentResult& result, ExportFormat format,
                    const std::filesystem::path& path);

void export_trace(const std::vector<RunRecord>& runs, const std::filesystem::path& path);

/// Contents of a results JSON document read back.
struct LoadedResults
{
  std::string problem;
  SbppaConfig config;
  ExperimentStats stats;
  ExperimentStats pop_best_stats;
  std::vector<RunRecord> runs; ///< traces are not stored in JSON
};

LoadedResults parse_results_json(const std::string& text);
LoadedResults load_results_json(const std::filesystem::path& path);

} // namespace sbppa
