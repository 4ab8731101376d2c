/**
 * @file optimizer.hpp
 * @brief The seed-based plant propagation search loop.
 *
 * Each generation every seed picks a dispersion mode from the Poisson
 * arrival gate: global dispersion takes a Levy-flight step relative to a
 * random point of the box, local dispersion moves along the difference to
 * another seed. A candidate replaces its parent when it is strictly better
 * under the feasibility rules of constraints.hpp.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sbppa/constraints.hpp"
#include "sbppa/problems.hpp"
#include "sbppa/stochastic.hpp"

namespace sbppa {

class ConfigError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

enum class DispersionMode { Global, Local };

/// How the arrival count k behind the Poisson gate is chosen for a seed.
enum class ModePolicy {
  SampledK,   ///< k drawn from Poisson(lambda) for every decision
  AgentIndex, ///< k is the seed's 1-based position in the population (default)
};

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

struct SbppaConfig
{
  std::size_t population_size = 10;
  double perturbation_rate = 0.8;
  double lambda = 1.1;
  double poisson_threshold = 0.05;
  double beta = 1.5;
  std::uint64_t max_generations = 2400;
  std::uint64_t max_evaluations = kUnlimited;
  std::size_t trial_runs = 30;
  ModePolicy mode_policy = ModePolicy::AgentIndex;
  std::uint64_t rng_seed = 0;

  /// Throws ConfigError on an out-of-range field.
  void validate() const;

  /**
   * Budgets used for the published experiments: (n * 20000) / NP generations
   * for unconstrained problems and 2400 for constrained ones, with an
   * evaluation cap that lets the generation count bind.
   */
  static SbppaConfig defaults_for(const ProblemSpec& problem);

  /// Evaluation cap that allows exactly max_generations generations.
  std::uint64_t evaluations_for_generations() const noexcept;
};

struct Seed
{
  Vector position;
  double objective = 0.0;
  Violation violation;

  Scored scored() const noexcept { return {objective, violation}; }
};

struct Population
{
  std::vector<Seed> members;

  std::size_t size() const noexcept { return members.size(); }
  /// Index of the preferred member; ties keep the lowest index.
  std::size_t best_index() const;
  const Seed& best() const { return members[best_index()]; }
};

struct TracePoint
{
  std::uint64_t generation;
  double best_objective;
  double best_violation;
};

struct RunRecord
{
  std::size_t run_index = 0;
  Seed best;
  std::uint64_t evals_used = 0;
  std::vector<TracePoint> trace;
  std::uint64_t rng_seed = 0;
};

struct GenerationSummary
{
  std::size_t global_moves = 0;
  std::size_t local_moves = 0;
  std::size_t replacements = 0;
};

/// Evaluates x (which must already lie in the box) into a Seed.
Seed make_seed(const ProblemSpec& problem, Vector x, EvalCounter& counter);

/// NP uniformly random seeds in the problem box, each evaluated once.
Population init_population(const ProblemSpec& problem, const SbppaConfig& config, RngStream& rng,
                           EvalCounter& counter);

/// Mode for the seed at zero-based position agent_index.
DispersionMode dispersion_mode(std::size_t agent_index, const SbppaConfig& config, RngStream& rng);

/// Local dispersion candidate for member i, clamped to bounds.
Vector local_perturb(const Population& pop, std::size_t i, RngStream& rng,
                     const SbppaConfig& config, std::span<const Bound> bounds);

/// Global dispersion candidate for member i with one fresh Levy step.
Vector global_perturb(const Population& pop, std::size_t i, RngStream& rng,
                      const SbppaConfig& config, std::span<const Bound> bounds);

/// Global dispersion candidate using the given Levy step for every dimension.
Vector global_perturb_with_step(const Population& pop, std::size_t i, double levy, RngStream& rng,
                                const SbppaConfig& config, std::span<const Bound> bounds);

/// One pass over the population with greedy replacement. Uses NP evaluations.
GenerationSummary step_generation(Population& pop, const ProblemSpec& problem,
                                  const SbppaConfig& config, RngStream& rng, EvalCounter& counter);

/**
 * A complete run. Starts from `initial` (clamped and re-evaluated) when
 * given, else from init_population, and stops as soon as either
 * max_generations or max_evaluations is reached.
 */
RunRecord run_sbppa(const ProblemSpec& problem, const SbppaConfig& config, RngStream& rng,
                    const std::optional<Population>& initial = std::nullopt);

} // namespace sbppa
