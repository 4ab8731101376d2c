#include "sbppa/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace sbppa {
namespace {

// Runs body(i) for i in [first, last) on up to `jobs` threads. The first
// exception thrown by any worker is rethrown after all workers finish.
template <typename Body>
void parallel_for(std::size_t first, std::size_t last, unsigned jobs, Body body)
{
  if (first >= last) {
    return;
  }
  const std::size_t count = last - first;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  if (workers <= 1) {
    for (std::size_t i = first; i < last; ++i) {
      body(i);
    }
    return;
  }

  std::atomic<std::size_t> next{first};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < last; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
    });
  }
  pool.clear();
  if (error) {
    std::rethrow_exception(error);
  }
}

} // namespace

std::uint64_t run_seed(const SbppaConfig& config, std::size_t run_index) noexcept
{
  return derive_seed(config.rng_seed, run_index);
}

ExperimentResult run_experiment(const ProblemSpec& problem, const SbppaConfig& config,
                                unsigned jobs)
{
  config.validate();
  const std::size_t np = config.population_size;
  if (config.trial_runs < np) {
    throw ConfigError("trial_runs (" + std::to_string(config.trial_runs) +
                      ") must be at least the population size (" + std::to_string(np) + ")");
  }
  if (jobs == 0) {
    jobs = std::max(1u, std::thread::hardware_concurrency());
  }

  ExperimentResult result;
  result.runs.resize(config.trial_runs);

  auto execute = [&](std::size_t r, const std::optional<Population>& initial) {
    RngStream rng(run_seed(config, r));
    RunRecord record = run_sbppa(problem, config, rng, initial);
    record.run_index = r;
    result.runs[r] = std::move(record);
  };

  parallel_for(0, np, jobs, [&](std::size_t r) { execute(r, std::nullopt); });

  result.pop_best.members.reserve(np);
  for (std::size_t r = 0; r < np; ++r) {
    result.pop_best.members.push_back(result.runs[r].best);
  }

  const std::optional<Population> archive = result.pop_best;
  parallel_for(np, config.trial_runs, jobs, [&](std::size_t r) { execute(r, archive); });

  result.stats = compute_stats(std::span<const RunRecord>(result.runs), problem.name);
  result.pop_best_stats =
      compute_stats(std::span<const Seed>(result.pop_best.members), problem.name);
  return result;
}

} // namespace sbppa
