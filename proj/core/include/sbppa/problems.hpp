/**
 * @file problems.hpp
 * @brief The benchmark problem catalog and its evaluator.
 *
 * Ten unconstrained functions (colville ... ackley) and eight constrained
 * problems (cp1 ... cp5, spring, welded_beam, speed_reducer). Inequality
 * constraints are feasible when g(x) <= 0, equalities when h(x) = 0.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sbppa {

using Vector = std::vector<double>;
using ScalarFunction = std::function<double(std::span<const double>)>;

struct Bound
{
  double lower;
  double upper;

  double width() const noexcept { return upper - lower; }
  double clamp(double v) const noexcept { return v < lower ? lower : (v > upper ? upper : v); }
};

inline constexpr double kInequalityTolerance = 1e-6;
inline constexpr double kEqualityTolerance = 1e-4;

struct ProblemSpec
{
  std::string name;
  std::string label; ///< f1..f10, CP1..CP5, or the engineering problem's title
  std::size_t dimension = 0;
  std::vector<Bound> bounds;
  ScalarFunction objective;
  std::vector<ScalarFunction> inequality_constraints;
  std::vector<ScalarFunction> equality_constraints;
  /// Global optimum where one is established.
  std::optional<double> known_optimum;
  /// Best published value for problems whose optimum is not known.
  std::optional<double> reference_value;
  std::optional<Vector> known_optimizer;
  /// Zero-based indices rounded to the nearest integer before evaluation.
  std::vector<std::size_t> integer_dims;

  bool constrained() const noexcept
  {
    return !inequality_constraints.empty() || !equality_constraints.empty();
  }

  /// known_optimum if present, else reference_value.
  std::optional<double> target_value() const noexcept
  {
    return known_optimum ? known_optimum : reference_value;
  }
};

struct Evaluation
{
  double objective = 0.0;
  std::vector<double> g_values;
  std::vector<double> h_values;
  /// Set when the objective overflowed or was NaN and was replaced by +inf.
  bool non_finite = false;
};

/// Counts objective evaluations. Only evaluate() increments it.
class EvalCounter
{
public:
  std::uint64_t count() const noexcept { return count_; }

private:
  friend Evaluation evaluate(const ProblemSpec&, std::span<const double>, EvalCounter&);
  std::uint64_t count_ = 0;
};

class UnknownProblemError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Catalog order: the ten unconstrained functions, then the constrained set.
std::span<const std::string_view> problem_names();

/// Throws UnknownProblemError listing the valid names.
const ProblemSpec& get_problem(std::string_view name);

/**
 * Evaluates objective and all constraints at x. Coordinates listed in
 * integer_dims are rounded first. Out-of-bounds points are evaluated as-is.
 * Throws std::invalid_argument on a dimension mismatch.
 */
Evaluation evaluate(const ProblemSpec& problem, std::span<const double> x, EvalCounter& counter);

/// All g <= ineq_tol and all |h| <= eq_tol.
bool within_tolerance(const Evaluation& eval,
                      double ineq_tol = kInequalityTolerance,
                      double eq_tol = kEqualityTolerance) noexcept;

/// Problem catalog as a JSON array (name, label, dimension, bounds,
/// constraint counts, known optimum, reference value).
std::string catalog_json();

} // namespace sbppa
