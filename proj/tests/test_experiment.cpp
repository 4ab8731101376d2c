#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "sbppa/experiment.hpp"

using namespace sbppa;

namespace {

SbppaConfig small_experiment(std::size_t runs, std::uint64_t generations, std::uint64_t seed)
{
  SbppaConfig c;
  c.trial_runs = runs;
  c.max_generations = generations;
  c.max_evaluations = c.evaluations_for_generations();
  c.rng_seed = seed;
  return c;
}

bool same_seed(const Seed& a, const Seed& b)
{
  return a.position == b.position && a.objective == b.objective &&
         a.violation.total == b.violation.total;
}

bool same_runs(const std::vector<RunRecord>& a, const std::vector<RunRecord>& b)
{
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].run_index != b[i].run_index || a[i].rng_seed != b[i].rng_seed ||
        a[i].evals_used != b[i].evals_used || !same_seed(a[i].best, b[i].best) ||
        a[i].trace.size() != b[i].trace.size()) {
      return false;
    }
    for (std::size_t g = 0; g < a[i].trace.size(); ++g) {
      if (a[i].trace[g].best_objective != b[i].trace[g].best_objective ||
          a[i].trace[g].best_violation != b[i].trace[g].best_violation) {
        return false;
      }
    }
  }
  return true;
}

} // namespace

TEST_CASE("run seeds are derived per run")
{
  SbppaConfig c;
  c.rng_seed = 77;
  CHECK(run_seed(c, 0) == derive_seed(77, 0));
  CHECK(run_seed(c, 29) == derive_seed(77, 29));
  CHECK(run_seed(c, 0) != run_seed(c, 1));
}

TEST_CASE("fewer trials than the population size is rejected")
{
  const SbppaConfig c = small_experiment(9, 10, 1);
  CHECK_THROWS_AS(run_experiment(get_problem("matyas"), c, 1), ConfigError);
}

TEST_CASE("the first NP runs fill pop_best")
{
  const ProblemSpec& p = get_problem("sixhump");
  const SbppaConfig c = small_experiment(10, 50, 5);
  const ExperimentResult r = run_experiment(p, c, 2);

  REQUIRE(r.runs.size() == 10);
  REQUIRE(r.pop_best.size() == 10);
  for (std::size_t i = 0; i < r.runs.size(); ++i) {
    CHECK(r.runs[i].run_index == i);
    CHECK(r.runs[i].rng_seed == run_seed(c, i));
    CHECK(same_seed(r.pop_best.members[i], r.runs[i].best));
  }
  CHECK(r.stats.total_runs == 10);
  CHECK(r.pop_best_stats.total_runs == 10);
  CHECK(r.stats.mean == r.pop_best_stats.mean);
}

TEST_CASE("later runs start from the frozen archive")
{
  const ProblemSpec& p = get_problem("cp1");
  const SbppaConfig c = small_experiment(16, 40, 9);
  const ExperimentResult r = run_experiment(p, c, 3);

  // The archive holds the fresh runs only, in order.
  for (std::size_t i = 0; i < c.population_size; ++i) {
    CHECK(same_seed(r.pop_best.members[i], r.runs[i].best));
  }

  // A warm-started run keeps its elite, so it can never end worse than the
  // best archive member it started with.
  const Seed& archive_best = r.pop_best.best();
  for (std::size_t i = c.population_size; i < r.runs.size(); ++i) {
    CAPTURE(i);
    CHECK_FALSE(better(archive_best.scored(), r.runs[i].best.scored()));
  }

  // Replaying run 12 from the archive gives the same record.
  RngStream rng(run_seed(c, 12));
  const RunRecord replay = run_sbppa(p, c, rng, r.pop_best);
  CHECK(same_seed(replay.best, r.runs[12].best));
  CHECK(replay.evals_used == r.runs[12].evals_used);
}

TEST_CASE("results do not depend on the number of worker threads")
{
  const ProblemSpec& p = get_problem("welded_beam");
  const SbppaConfig c = small_experiment(14, 60, 31);
  const ExperimentResult one = run_experiment(p, c, 1);
  const ExperimentResult four = run_experiment(p, c, 4);
  const ExperimentResult all = run_experiment(p, c, 0);
  CHECK(same_runs(one.runs, four.runs));
  CHECK(same_runs(one.runs, all.runs));
  CHECK(one.stats.mean == four.stats.mean);
  CHECK(one.stats.sd == all.stats.sd);
}

TEST_CASE("a worker exception reaches the caller")
{
  ProblemSpec p = get_problem("sphere");
  p.objective = [](std::span<const double>) -> double { throw std::runtime_error("boom"); };
  const SbppaConfig c = small_experiment(10, 5, 1);
  CHECK_THROWS_WITH_AS(run_experiment(p, c, 4), "boom", std::runtime_error);
}

TEST_CASE("budget accounting over random configurations")
{
  const auto names = problem_names();
  RngStream pick(404);
  for (int trial = 0; trial < 20; ++trial) {
    const ProblemSpec& p = get_problem(names[pick.below(names.size())]);
    SbppaConfig c;
    c.population_size = 2 + pick.below(19);
    c.trial_runs = c.population_size;
    c.max_generations = pick.below(200);
    c.max_evaluations = c.population_size + pick.below(1500);
    c.rng_seed = pick.next_u64();
    c.mode_policy = pick.below(2) == 0 ? ModePolicy::AgentIndex : ModePolicy::SampledK;

    CAPTURE(p.name);
    CAPTURE(c.population_size);
    CAPTURE(c.max_generations);
    CAPTURE(c.max_evaluations);

    RngStream rng(c.rng_seed);
    const RunRecord r = run_sbppa(p, c, rng);
    CHECK(r.evals_used <= c.max_evaluations + c.population_size);
    // Initialization costs NP and each generation costs NP.
    CHECK(r.evals_used == c.population_size * (r.trace.size() + 1));

    SbppaConfig init_only = c;
    init_only.max_generations = 0;
    RngStream again(c.rng_seed);
    CHECK(run_sbppa(p, init_only, again).evals_used == c.population_size);
  }
}

TEST_CASE("convergence traces never get worse")
{
  const auto names = problem_names();
  RngStream pick(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const ProblemSpec& p = get_problem(names[pick.below(names.size())]);
    SbppaConfig c;
    c.max_generations = 100 + pick.below(300);
    c.max_evaluations = c.evaluations_for_generations();
    c.mode_policy = pick.below(2) == 0 ? ModePolicy::AgentIndex : ModePolicy::SampledK;
    RngStream rng(pick.next_u64());
    const RunRecord r = run_sbppa(p, c, rng);

    CAPTURE(p.name);
    REQUIRE(r.trace.size() == c.max_generations);
    for (std::size_t g = 1; g < r.trace.size(); ++g) {
      const Scored before{r.trace[g - 1].best_objective, Violation{r.trace[g - 1].best_violation}};
      const Scored after{r.trace[g].best_objective, Violation{r.trace[g].best_violation}};
      CHECK_FALSE(better(before, after));
    }
    CHECK(r.trace.back().best_objective == r.best.objective);
  }
}
