/**
 * @file reference.hpp
 * @brief Published results for the benchmark suite and the +/-/~ comparison.
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "sbppa/statistics.hpp"

namespace sbppa {

struct ReferenceEntry
{
  std::string_view problem;
  std::string_view algorithm; ///< SbPPA, ABC, PSO, HPA, FF or SSO-C
  double best;
  double worst;
  double mean;
  double sd;
};

/// Rows of results table 3 (unconstrained) or 4 (constrained), as printed.
/// Throws std::invalid_argument for any other table number.
std::span<const ReferenceEntry> reference_table(int table);

/// Problem names covered by a results table, in table order.
std::span<const std::string_view> reference_problems(int table);

/**
 * The entry with values adjusted for comparison. CP5 rows printed with a
 * negative objective are flipped to the positive sign of the analytic
 * optimum (0.5 + 0.25 less the equality tolerance).
 */
ReferenceEntry normalized(const ReferenceEntry& entry) noexcept;

enum class Verdict { Plus, Minus, Approx };

char verdict_symbol(Verdict v) noexcept; ///< '+', '-' or '~'

/// max(1e-6, 1e-3 * |ref.mean|)
double default_tolerance(const ReferenceEntry& ref) noexcept;

/**
 * Approx when |stats.mean - ref.mean| <= tolerance, Plus when stats.mean is
 * lower, Minus otherwise. Throws std::invalid_argument when the problem
 * names differ or the stats are undefined.
 */
Verdict compare_to_reference(const ExperimentStats& stats, const ReferenceEntry& ref,
                             std::optional<double> tolerance = std::nullopt);

} // namespace sbppa
