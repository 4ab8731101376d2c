/**
 * @file statistics.hpp
 * @brief Summary statistics over the best values of a set of runs.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "sbppa/optimizer.hpp"

namespace sbppa {

struct ExperimentStats
{
  std::string problem;
  double best = 0.0;
  double worst = 0.0;
  double mean = 0.0;
  /// Population standard deviation (divides by the number of values).
  double sd = 0.0;
  std::size_t feasible_runs = 0;
  std::size_t total_runs = 0;

  /// False when no run ended feasible; best/worst/mean/sd are NaN then.
  bool defined() const noexcept { return feasible_runs > 0; }
};

/// Statistics over feasible seeds only. Throws std::invalid_argument if empty.
ExperimentStats compute_stats(std::span<const Seed> seeds, std::string problem = {});

/// Statistics over the best seed of each run.
ExperimentStats compute_stats(std::span<const RunRecord> records, std::string problem = {});

} // namespace sbppa
