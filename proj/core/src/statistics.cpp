#include "sbppa/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sbppa {

ExperimentStats compute_stats(std::span<const Seed> seeds, std::string problem)
{
  if (seeds.empty()) {
    throw std::invalid_argument("compute_stats: no runs");
  }
  ExperimentStats s;
  s.problem = std::move(problem);
  s.total_runs = seeds.size();

  std::vector<double> values;
  values.reserve(seeds.size());
  for (const Seed& seed : seeds) {
    if (seed.violation.feasible()) {
      values.push_back(seed.objective);
    }
  }
  s.feasible_runs = values.size();
  if (values.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    s.best = s.worst = s.mean = s.sd = nan;
    return s;
  }

  // Sorting makes the sums independent of run order.
  std::sort(values.begin(), values.end());
  s.best = values.front();
  s.worst = values.back();
  if (s.best == s.worst) {
    s.mean = s.best;
    s.sd = 0.0;
    return s;
  }

  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  s.mean = std::clamp(sum / n, s.best, s.worst);
  double ss = 0.0;
  for (double v : values) {
    ss += (v - s.mean) * (v - s.mean);
  }
  s.sd = std::sqrt(ss / n);
  return s;
}

ExperimentStats compute_stats(std::span<const RunRecord> records, std::string problem)
{
  std::vector<Seed> bests;
  bests.reserve(records.size());
  for (const RunRecord& r : records) {
    bests.push_back(r.best);
  }
  return compute_stats(std::span<const Seed>(bests), std::move(problem));
}

} // namespace sbppa
