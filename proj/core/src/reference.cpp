#include "sbppa/reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sbppa {
namespace {

// Results table 3, columns in best, worst, mean, sd order.
constexpr std::array<ReferenceEntry, 40> kTable3 = {{
    {"colville", "ABC", 0.0129, 0.6106, 0.1157, 0.111},
    {"colville", "PSO", 6.8991E-08, 0.0045, 0.001, 0.0013},
    {"colville", "HPA", 2.0323E-06, 0.0456, 0.009, 0.0122},
    {"colville", "SbPPA", 1.08E-07, 7.05E-06, 3.05E-06, 3.14E-06},
    {"matyas", "ABC", 1.2452E-08, 8.4415E-06, 1.8978E-06, 1.8537E-06},
    {"matyas", "PSO", 0, 0, 0, 0},
    {"matyas", "HPA", 0, 0, 0, 0},
    {"matyas", "SbPPA", 0, 0, 0, 0},
    {"schaffer", "ABC", 0, 4.8555E-06, 4.1307E-07, 1.2260E-06},
    {"schaffer", "PSO", 0, 3.5733E-07, 1.1911E-08, 6.4142E-08},
    {"schaffer", "HPA", 0, 0, 0, 0},
    {"schaffer", "SbPPA", 0, 0, 0, 0},
    {"sixhump", "ABC", -1.03163, -1.03163, -1.03163, 0},
    {"sixhump", "PSO", -1.03163, -1.03163, -1.03163, 0},
    {"sixhump", "HPA", -1.03163, -1.03163, -1.03163, 0},
    {"sixhump", "SbPPA", -1.031628, -1.031628, -1.031628, 0},
    {"trid6", "ABC", -50.0000, -50.0000, -50.0000, 0},
    {"trid6", "PSO", -50.0000, -50.0000, -50.0000, 0},
    {"trid6", "HPA", -50.0000, -50.0000, -50.0000, 0},
    {"trid6", "SbPPA", -50.0000, -50.0000, -50.0000, 5.88E-09},
    {"trid10", "ABC", -209.9929, -209.8437, -209.9471, 0.044},
    {"trid10", "PSO", -210.0000, -210.0000, -210.0000, 0},
    {"trid10", "HPA", -210.0000, -210.0000, -210.0000, 1},
    {"trid10", "SbPPA", -210.0000, -210.0000, -210.0000, 4.86E-06},
    {"sphere", "ABC", 2.6055E-16, 5.5392E-16, 4.7403E-16, 9.2969E-17},
    {"sphere", "PSO", 0, 0, 0, 0},
    {"sphere", "HPA", 0, 0, 0, 0},
    {"sphere", "SbPPA", 0, 0, 0, 0},
    {"sumsquares", "ABC", 2.9407E-16, 5.5463E-16, 4.8909E-16, 9.0442E-17},
    {"sumsquares", "PSO", 0, 0, 0, 0},
    {"sumsquares", "HPA", 0, 0, 0, 0},
    {"sumsquares", "SbPPA", 0, 0, 0, 0},
    {"griewank", "ABC", 0, 1.1102E-16, 9.2519E-17, 4.1376E-17},
    {"griewank", "PSO", 0, 1.1765E-01, 2.0633E-02, 2.3206E-02},
    {"griewank", "HPA", 0, 0, 0, 0},
    {"griewank", "SbPPA", 0, 0, 0, 0},
    {"ackley", "ABC", 2.9310E-14, 3.9968E-14, 3.2744E-14, 2.5094E-15},
    {"ackley", "PSO", 7.9936E-15, 1.5099E-14, 8.5857E-15, 1.8536E-15},
    {"ackley", "HPA", 7.9936E-15, 1.5099E-14, 1.1309E-14, 3.54E-15},
    {"ackley", "SbPPA", 7.994E-15, 7.99361E-15, 7.994E-15, 7.99361E-15},
}};

// Results table 4 lists mean before worst; the rows below are reordered to best, worst, mean, sd.
constexpr std::array<ReferenceEntry, 40> kTable4 = {{
    {"cp1", "PSO", -15, -15, -15, 0},
    {"cp1", "ABC", -15, -15, -15, 0},
    {"cp1", "FF", 14.999, 14.798, 14.988, 6.40E-07},
    {"cp1", "SSO-C", -15, -15, -15, 0},
    {"cp1", "SbPPA", -15, -15, -15, 1.95E-15},
    {"cp2", "PSO", -30665.5, -30650.4, -30662.8, 5.20E-02},
    {"cp2", "ABC", -30665.5, -30659.1, -30664.9, 8.20E-02},
    {"cp2", "FF", -3.07E+04, -30649, -30662, 5.20E-02},
    {"cp2", "SSO-C", -3.07E+04, -30665.1, -30665.5, 1.10E-04},
    {"cp2", "SbPPA", -30665.5, -30665.5, -30665.5, 2.21E-06},
    {"cp3", "PSO", -6.96E+03, -6942.09, -6958.37, 6.70E-02},
    {"cp3", "ABC", -6961.81, -6955.34, -6958.02, 2.10E-02},
    {"cp3", "FF", -6959.99, -6947.63, -6.95E+03, 3.80E-02},
    {"cp3", "SSO-C", -6961.81, -6960.92, -6961.01, 1.10E-03},
    {"cp3", "SbPPA", -6961.5, -6961.45, -6961.38, 0.043637},
    {"cp4", "PSO", 24.327, 24.843, 2.45E+01, 1.32E-01},
    {"cp4", "ABC", 24.48, 28.4, 2.66E+01, 1.14},
    {"cp4", "FF", 23.97, 30.14, 28.54, 2.25},
    {"cp4", "SSO-C", 24.306, 24.306, 24.306, 4.95E-05},
    {"cp4", "SbPPA", 24.34442, 24.37021, 24.37536, 0.012632},
    {"cp5", "PSO", -0.7499, -0.7486, -0.749, 1.20E-03},
    {"cp5", "ABC", -0.7499, -0.749, -0.7495, 1.67E-03},
    {"cp5", "FF", -0.7497, -0.7479, -0.7491, 1.50E-03},
    {"cp5", "SSO-C", -0.7499, -0.7499, -0.7499, 4.10E-09},
    {"cp5", "SbPPA", 0.7499, 0.7499, 0.749901, 1.66E-07},
    {"spring", "PSO", 0.012858, 0.019145, 0.014863, 0.001262},
    {"spring", "ABC", 0.012665, 0.01321, 0.012851, 0.000118},
    {"spring", "FF", 0.012665, 0.01342, 0.012931, 0.001454},
    {"spring", "SSO-C", 0.012665, 0.012868, 0.012765, 9.29E-05},
    {"spring", "SbPPA", 0.012665, 0.012666, 0.012666, 3.39E-10},
    {"welded_beam", "PSO", 1.846408, 2.237389, 2.011146, 0.108513},
    {"welded_beam", "ABC", 1.798173, 2.887044, 2.167358, 0.254266},
    {"welded_beam", "FF", 1.724854, 2.931001, 2.197401, 0.195264},
    {"welded_beam", "SSO-C", 1.724852, 1.799332, 1.746462, 0.02573},
    {"welded_beam", "SbPPA", 1.724852, 1.724852, 1.724852, 4.06E-08},
    {"speed_reducer", "PSO", 3044.453, 3177.515, 3079.262, 26.21731},
    {"speed_reducer", "ABC", 2996.116, 3002.756, 2998.063, 6.354562},
    {"speed_reducer", "FF", 2996.947, 3005.836, 3000.005, 8.356535},
    {"speed_reducer", "SSO-C", 2996.113, 2996.113, 2996.113, 1.34E-12},
    {"speed_reducer", "SbPPA", 2996.114, 2996.114, 2996.114, 0},
}};

constexpr std::array<std::string_view, 10> kTable3Problems = {
    "colville", "matyas", "schaffer", "sixhump", "trid6",
    "trid10", "sphere", "sumsquares", "griewank", "ackley"};

constexpr std::array<std::string_view, 8> kTable4Problems = {
    "cp1", "cp2", "cp3", "cp4", "cp5", "spring", "welded_beam", "speed_reducer"};

} // namespace

std::span<const ReferenceEntry> reference_table(int table)
{
  switch (table) {
  case 3:
    return kTable3;
  case 4:
    return kTable4;
  default:
    throw std::invalid_argument("no reference table " + std::to_string(table) +
                                " (expected 3 or 4)");
  }
}

std::span<const std::string_view> reference_problems(int table)
{
  switch (table) {
  case 3:
    return kTable3Problems;
  case 4:
    return kTable4Problems;
  default:
    throw std::invalid_argument("no reference table " + std::to_string(table) +
                                " (expected 3 or 4)");
  }
}

ReferenceEntry normalized(const ReferenceEntry& entry) noexcept
{
  ReferenceEntry e = entry;
  if (e.problem == "cp5") {
    e.best = std::abs(e.best);
    e.worst = std::abs(e.worst);
    e.mean = std::abs(e.mean);
  }
  return e;
}

char verdict_symbol(Verdict v) noexcept
{
  switch (v) {
  case Verdict::Plus:
    return '+';
  case Verdict::Minus:
    return '-';
  case Verdict::Approx:
    break;
  }
  return '~';
}

double default_tolerance(const ReferenceEntry& ref) noexcept
{
  return std::max(1e-6, 1e-3 * std::abs(ref.mean));
}

Verdict compare_to_reference(const ExperimentStats& stats, const ReferenceEntry& ref,
                             std::optional<double> tolerance)
{
  if (stats.problem != ref.problem) {
    throw std::invalid_argument("compare_to_reference: stats for '" + stats.problem +
                                "' against reference for '" + std::string(ref.problem) + "'");
  }
  if (!stats.defined()) {
    throw std::invalid_argument("compare_to_reference: no feasible runs for " + stats.problem);
  }
  const double tol = tolerance.value_or(default_tolerance(ref));
  if (std::abs(stats.mean - ref.mean) <= tol) {
    return Verdict::Approx;
  }
  return stats.mean < ref.mean ? Verdict::Plus : Verdict::Minus;
}

} // namespace sbppa
