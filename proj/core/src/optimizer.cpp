#include "sbppa/optimizer.hpp"

#include <cmath>
#include <string>

namespace sbppa {

void SbppaConfig::validate() const
{
  if (population_size < 2) {
    throw ConfigError("population size must be at least 2");
  }
  if (!(perturbation_rate > 0.0 && perturbation_rate <= 1.0)) {
    throw ConfigError("perturbation rate must lie in (0, 1]");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("lambda must be positive");
  }
  if (!(poisson_threshold > 0.0 && poisson_threshold < 1.0)) {
    throw ConfigError("poisson threshold must lie in (0, 1)");
  }
  if (!(beta > 0.0 && beta < 2.0)) {
    throw ConfigError("beta must lie in (0, 2)");
  }
  if (trial_runs == 0) {
    throw ConfigError("trial_runs must be positive");
  }
}

SbppaConfig SbppaConfig::defaults_for(const ProblemSpec& problem)
{
  SbppaConfig c;
  c.max_generations = problem.constrained()
                          ? 2400
                          : problem.dimension * 20000 / c.population_size;
  c.max_evaluations = c.evaluations_for_generations();
  return c;
}

std::uint64_t SbppaConfig::evaluations_for_generations() const noexcept
{
  if (max_generations >= kUnlimited / population_size - 1) {
    return kUnlimited;
  }
  return population_size * (max_generations + 1);
}

std::size_t Population::best_index() const
{
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (better(members[i].scored(), members[best].scored())) {
      best = i;
    }
  }
  return best;
}

Seed make_seed(const ProblemSpec& problem, Vector x, EvalCounter& counter)
{
  const Evaluation e = evaluate(problem, x, counter);
  return Seed{std::move(x), e.objective, violation(e)};
}

Population init_population(const ProblemSpec& problem, const SbppaConfig& config, RngStream& rng,
                           EvalCounter& counter)
{
  Population pop;
  pop.members.reserve(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i) {
    Vector x(problem.dimension);
    for (std::size_t j = 0; j < problem.dimension; ++j) {
      const Bound& b = problem.bounds[j];
      x[j] = b.lower + b.width() * rng.unit_uniform();
    }
    pop.members.push_back(make_seed(problem, std::move(x), counter));
  }
  return pop;
}

DispersionMode dispersion_mode(std::size_t agent_index, const SbppaConfig& config, RngStream& rng)
{
  const std::uint64_t k = config.mode_policy == ModePolicy::SampledK
                              ? rng.poisson(config.lambda)
                              : static_cast<std::uint64_t>(agent_index) + 1;
  return poisson_pmf(k, config.lambda, 1.0) >= config.poisson_threshold ? DispersionMode::Global
                                                                         : DispersionMode::Local;
}

Vector local_perturb(const Population& pop, std::size_t i, RngStream& rng,
                     const SbppaConfig& config, std::span<const Bound> bounds)
{
  const std::size_t np = pop.size();
  std::size_t partner = i;
  while (partner == i) {
    partner = static_cast<std::size_t>(rng.below(np));
  }
  const Vector& self = pop.members[i].position;
  const Vector& other = pop.members[partner].position;

  Vector candidate = self;
  for (std::size_t j = 0; j < candidate.size(); ++j) {
    if (rng.unit_uniform() <= config.perturbation_rate) {
      const double xi = rng.uniform(-1.0, 1.0);
      candidate[j] = bounds[j].clamp(self[j] + xi * (self[j] - other[j]));
    }
  }
  return candidate;
}

Vector global_perturb_with_step(const Population& pop, std::size_t i, double levy, RngStream& rng,
                                const SbppaConfig& config, std::span<const Bound> bounds)
{
  const Vector& self = pop.members[i].position;
  Vector candidate = self;
  for (std::size_t j = 0; j < candidate.size(); ++j) {
    if (rng.unit_uniform() <= config.perturbation_rate) {
      const double theta = rng.uniform(bounds[j].lower, bounds[j].upper);
      candidate[j] = bounds[j].clamp(self[j] + levy * (self[j] - theta));
    }
  }
  return candidate;
}

Vector global_perturb(const Population& pop, std::size_t i, RngStream& rng,
                      const SbppaConfig& config, std::span<const Bound> bounds)
{
  const double levy = levy_step(rng, LevyParams::from_beta(config.beta));
  return global_perturb_with_step(pop, i, levy, rng, config, bounds);
}

GenerationSummary step_generation(Population& pop, const ProblemSpec& problem,
                                  const SbppaConfig& config, RngStream& rng, EvalCounter& counter)
{
  GenerationSummary summary;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    Vector candidate;
    if (dispersion_mode(i, config, rng) == DispersionMode::Global) {
      ++summary.global_moves;
      candidate = global_perturb(pop, i, rng, config, problem.bounds);
    } else {
      ++summary.local_moves;
      candidate = local_perturb(pop, i, rng, config, problem.bounds);
    }
    Seed trial = make_seed(problem, std::move(candidate), counter);
    if (better(trial.scored(), pop.members[i].scored())) {
      pop.members[i] = std::move(trial);
      ++summary.replacements;
    }
  }
  return summary;
}

RunRecord run_sbppa(const ProblemSpec& problem, const SbppaConfig& config, RngStream& rng,
                    const std::optional<Population>& initial)
{
  config.validate();
  EvalCounter counter;

  Population pop;
  if (initial) {
    if (initial->size() != config.population_size) {
      throw ConfigError("initial population has " + std::to_string(initial->size()) +
                        " members, expected " + std::to_string(config.population_size));
    }
    pop.members.reserve(initial->size());
    for (const Seed& s : initial->members) {
      Vector x = s.position;
      if (x.size() != problem.dimension) {
        throw ConfigError("initial population dimension does not match the problem");
      }
      for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = problem.bounds[j].clamp(x[j]);
      }
      pop.members.push_back(make_seed(problem, std::move(x), counter));
    }
  } else {
    pop = init_population(problem, config, rng, counter);
  }

  RunRecord record;
  record.rng_seed = rng.seed();
  record.trace.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(config.max_generations, 1u << 20)));

  for (std::uint64_t gen = 1;
       gen <= config.max_generations && counter.count() < config.max_evaluations; ++gen) {
    step_generation(pop, problem, config, rng, counter);
    const Seed& best = pop.best();
    record.trace.push_back(TracePoint{gen, best.objective, best.violation.total});
  }

  record.best = pop.best();
  record.evals_used = counter.count();
  return record;
}

} // namespace sbppa
