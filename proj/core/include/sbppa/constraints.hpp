/**
 * @file constraints.hpp
 * @brief Constraint-violation aggregation and Deb's feasibility rules.
 */
#pragma once

#include "sbppa/problems.hpp"

namespace sbppa {

struct Violation
{
  /// Sum of max(0, g) over inequalities plus max(0, |h| - eps_eq) over equalities.
  double total = 0.0;

  bool feasible() const noexcept { return total == 0.0; }
};

Violation violation(const Evaluation& eval, double eps_eq = kEqualityTolerance) noexcept;

/// An objective value paired with its constraint violation.
struct Scored
{
  double objective;
  Violation violation;
};

/**
 * Strict preference under Deb's rules: feasible beats infeasible, two
 * feasible points compare by objective, two infeasible points by total
 * violation.
 */
bool better(const Scored& a, const Scored& b) noexcept;

} // namespace sbppa
