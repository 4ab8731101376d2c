#include "sbppa/stochastic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sbppa {

RngStream::RngStream(std::uint64_t seed) : seed_{seed}, engine_{seed} {}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::unit_uniform()
{
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi)
{
  if (!(lo < hi)) {
    throw std::domain_error("uniform: requires lo < hi, got lo=" + std::to_string(lo) +
                            " hi=" + std::to_string(hi));
  }
  const double value = lo + (hi - lo) * unit_uniform();
  // Rounding can land exactly on hi for wide intervals.
  return value < hi ? value : std::nextafter(hi, lo);
}

double RngStream::unit_normal()
{
  const double u1 = 1.0 - unit_uniform(); // (0, 1]
  const double u2 = unit_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint32_t RngStream::poisson(double lambda)
{
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("poisson: lambda must be positive and finite");
  }
  const double u = unit_uniform();
  std::uint32_t k = 0;
  double term = std::exp(-lambda);
  double cdf = term;
  while (u >= cdf) {
    ++k;
    term *= lambda / k;
    if (term == 0.0 && static_cast<double>(k) > lambda) {
      break; // remaining mass is below double resolution
    }
    cdf += term;
  }
  return k;
}

std::uint64_t RngStream::below(std::uint64_t n)
{
  if (n == 0) {
    throw std::domain_error("below: n must be positive");
  }
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) {
      return r % n;
    }
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept
{
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double poisson_pmf(std::uint64_t k, double lambda, double t)
{
  if (!(lambda > 0.0)) {
    throw std::domain_error("poisson_pmf: lambda must be positive");
  }
  if (!(t > 0.0)) {
    throw std::domain_error("poisson_pmf: t must be positive");
  }
  const double rate = lambda * t;
  const double kd = static_cast<double>(k);
  const double log_power = k == 0 ? 0.0 : kd * std::log(rate);
  return std::exp(log_power - rate - std::lgamma(kd + 1.0));
}

double exponential_service_density(double t, double mu)
{
  if (!(mu > 0.0)) {
    throw std::domain_error("exponential_service_density: mu must be positive");
  }
  if (t < 0.0) {
    throw std::domain_error("exponential_service_density: t must be nonnegative");
  }
  return mu * std::exp(-mu * t);
}

double mantegna_sigma(double beta)
{
  if (!(beta > 0.0 && beta < 2.0)) {
    throw std::domain_error("mantegna_sigma: beta must lie in (0, 2)");
  }
  const double numerator = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double denominator =
      std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
  return std::pow(numerator / denominator, 1.0 / beta);
}

LevyParams LevyParams::from_beta(double beta)
{
  return LevyParams{beta, mantegna_sigma(beta)};
}

double levy_step(RngStream& rng, const LevyParams& params)
{
  const double u = params.sigma_u * rng.unit_normal();
  for (int attempt = 0; attempt < kLevyMaxRedraws; ++attempt) {
    const double v = rng.unit_normal();
    const double denom = std::pow(std::abs(v), 1.0 / params.beta);
    if (denom > 0.0) {
      return u / denom;
    }
  }
  throw std::runtime_error("levy_step: normal denominator underflowed " +
                           std::to_string(kLevyMaxRedraws) + " times");
}

} // namespace sbppa
