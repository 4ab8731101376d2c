/**
 * @file stochastic.hpp
 * @brief Seedable random streams and the distributions the search draws from.
 *
 * Every draw is derived from the raw 64-bit output of std::mt19937_64, whose
 * output sequence is fixed by the C++ standard. The uniform, normal and
 * Poisson transforms are implemented here instead of relying on the
 * implementation-defined <random> distributions, so a given seed produces
 * the same numbers with every standard library.
 *
 * Seed mapping:
 *   engine           = std::mt19937_64(seed)
 *   unit_uniform()   = (engine() >> 11) * 2^-53                 in [0, 1)
 *   uniform(lo, hi)  = lo + (hi - lo) * unit_uniform()          (clamped below hi)
 *   unit_normal()    = sqrt(-2 ln(1 - u1)) * cos(2 pi u2)       (Box-Muller, one value per call)
 *   poisson(lambda)  = inversion of the cumulative pmf with one unit_uniform()
 */
#pragma once

#include <cstdint>
#include <random>

namespace sbppa {

class RngStream
{
public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  /// Raw engine output.
  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 bits of resolution.
  double unit_uniform();

  /// Uniform on [lo, hi). Throws std::domain_error unless lo < hi.
  double uniform(double lo, double hi);

  double unit_normal();

  /// Poisson-distributed count with mean lambda > 0.
  std::uint32_t poisson(double lambda);

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Mixes a base seed and a stream index into an independent-looking seed
/// (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

/**
 * Probability of k arrivals in an interval of length t for a Poisson process
 * with rate lambda: (lambda t)^k e^{-lambda t} / k!, evaluated in log space.
 */
double poisson_pmf(std::uint64_t k, double lambda, double t = 1.0);

/// Exponential service-time density mu e^{-mu t}. Not used by the search loop.
double exponential_service_density(double t, double mu);

/// Mantegna scale sigma_u for stability index beta in (0, 2).
double mantegna_sigma(double beta);

struct LevyParams
{
  double beta;
  double sigma_u;

  /// Validates beta and fills sigma_u from mantegna_sigma.
  static LevyParams from_beta(double beta);
};

inline constexpr int kLevyMaxRedraws = 100;

/**
 * One Levy-flight step by Mantegna's construction: u / |v|^{1/beta} with
 * u ~ N(0, sigma_u^2) and v ~ N(0, 1). A zero v is redrawn; after
 * kLevyMaxRedraws consecutive zeros std::runtime_error is thrown.
 */
double levy_step(RngStream& rng, const LevyParams& params);

} // namespace sbppa
