#include "sbppa/constraints.hpp"

#include <cmath>

namespace sbppa {

Violation violation(const Evaluation& eval, double eps_eq) noexcept
{
  double total = 0.0;
  for (double g : eval.g_values) {
    if (std::isnan(g)) {
      return Violation{HUGE_VAL};
    }
    if (g > 0.0) {
      total += g;
    }
  }
  for (double h : eval.h_values) {
    if (std::isnan(h)) {
      return Violation{HUGE_VAL};
    }
    const double excess = std::abs(h) - eps_eq;
    if (excess > 0.0) {
      total += excess;
    }
  }
  return Violation{total};
}

bool better(const Scored& a, const Scored& b) noexcept
{
  const bool fa = a.violation.feasible();
  const bool fb = b.violation.feasible();
  if (fa != fb) {
    return fa;
  }
  if (fa) {
    return a.objective < b.objective;
  }
  return a.violation.total < b.violation.total;
}

} // namespace sbppa
