/**
 * @file experiment.hpp
 * @brief Multi-run experiments with the pop_best warm-start protocol.
 *
 * Runs 1..NP start from fresh random populations and the best seed of each
 * is archived in pop_best. The archive is then frozen and runs
 * NP+1..trial_runs all start from it. Run r uses derive_seed(rng_seed, r).
 */
#pragma once

#include <vector>

#include "sbppa/optimizer.hpp"
#include "sbppa/statistics.hpp"

namespace sbppa {

struct ExperimentResult
{
  std::vector<RunRecord> runs; ///< ordered by run_index, 0-based
  Population pop_best;
  ExperimentStats stats;          ///< over every run's best
  ExperimentStats pop_best_stats; ///< over the archive members only
};

/// Seed used for zero-based run `run_index`.
std::uint64_t run_seed(const SbppaConfig& config, std::size_t run_index) noexcept;

/**
 * Runs config.trial_runs independent trials. jobs == 0 uses the hardware
 * concurrency. Results do not depend on jobs. Throws ConfigError when
 * trial_runs < population_size.
 */
ExperimentResult run_experiment(const ProblemSpec& problem, const SbppaConfig& config,
                                unsigned jobs = 0);

} // namespace sbppa
