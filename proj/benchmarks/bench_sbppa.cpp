#include <benchmark/benchmark.h>

#include "sbppa/sbppa.hpp"

namespace {

using namespace sbppa;

const std::vector<std::string_view> kProblems{"sphere", "ackley", "welded_beam", "cp4",
                                              "speed_reducer"};

void BM_Evaluate(benchmark::State& state)
{
  const ProblemSpec& p = get_problem(kProblems[static_cast<std::size_t>(state.range(0))]);
  RngStream rng(1);
  Vector x(p.dimension);
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = rng.uniform(p.bounds[j].lower, p.bounds[j].upper);
  }
  EvalCounter counter;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(p, x, counter));
  }
  state.SetLabel(p.name);
}
BENCHMARK(BM_Evaluate)->DenseRange(0, static_cast<int>(kProblems.size()) - 1);

void BM_LevyStep(benchmark::State& state)
{
  RngStream rng(2);
  const LevyParams params = LevyParams::from_beta(1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(levy_step(rng, params));
  }
}
BENCHMARK(BM_LevyStep);

void BM_PoissonDraw(benchmark::State& state)
{
  RngStream rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rng.poisson(1.1));
  }
}
BENCHMARK(BM_PoissonDraw);

// One generation is NP candidate moves plus NP evaluations.
void BM_StepGeneration(benchmark::State& state)
{
  const ProblemSpec& p = get_problem(kProblems[static_cast<std::size_t>(state.range(0))]);
  SbppaConfig c;
  RngStream rng(4);
  EvalCounter counter;
  Population pop = init_population(p, c, rng, counter);
  for (auto _ : state) {
    benchmark::DoNotOptimize(step_generation(pop, p, c, rng, counter));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(counter.count()));
  state.SetLabel(p.name);
}
BENCHMARK(BM_StepGeneration)->DenseRange(0, static_cast<int>(kProblems.size()) - 1);

void BM_Experiment(benchmark::State& state)
{
  const ProblemSpec& p = get_problem("spring");
  SbppaConfig c = SbppaConfig::defaults_for(p);
  c.rng_seed = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_experiment(p, c, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_Experiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
