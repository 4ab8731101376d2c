#include "sbppa/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include <json.hpp>

namespace sbppa {
namespace {

double sq(double v) { return v * v; }
double cube(double v) { return v * v * v; }

std::vector<Bound> uniform_bounds(std::size_t n, double lo, double hi)
{
  return std::vector<Bound>(n, Bound{lo, hi});
}

// ---------------------------------------------------------------------------
// Unconstrained functions

ProblemSpec colville()
{
  ProblemSpec p;
  p.name = "colville";
  p.label = "f1";
  p.dimension = 4;
  p.bounds = uniform_bounds(4, -10.0, 10.0);
  p.objective = [](std::span<const double> x) {
    return 100.0 * sq(sq(x[0]) - x[1]) + sq(x[0] - 1.0) + sq(x[2] - 1.0) +
           90.0 * sq(sq(x[2]) - x[3]) + 10.1 * (sq(x[1] - 1.0) + sq(x[3] - 1.0)) +
           19.8 * (x[1] - 1.0) * (x[3] - 1.0);
  };
  p.known_optimum = 0.0;
  p.known_optimizer = Vector{1.0, 1.0, 1.0, 1.0};
  return p;
}

ProblemSpec matyas()
{
  ProblemSpec p;
  p.name = "matyas";
  p.label = "f2";
  p.dimension = 2;
  p.bounds = uniform_bounds(2, -10.0, 10.0);
  p.objective = [](std::span<const double> x) {
    return 0.26 * (sq(x[0]) + sq(x[1])) - 0.48 * x[0] * x[1];
  };
  p.known_optimum = 0.0;
  p.known_optimizer = Vector{0.0, 0.0};
  return p;
}

ProblemSpec schaffer()
{
  ProblemSpec p;
  p.name = "schaffer";
  p.label = "f3";
  p.dimension = 2;
  p.bounds = uniform_bounds(2, -100.0, 100.0);
  p.objective = [](std::span<const double> x) {
    double r2 = 0.0;
    for (double v : x) {
      r2 += sq(v);
    }
    return 0.5 + (sq(std::sin(std::sqrt(r2))) - 0.5) / sq(1.0 + 0.001 * r2);
  };
  p.known_optimum = 0.0;
  p.known_optimizer = Vector{0.0, 0.0};
  return p;
}

ProblemSpec sixhump()
{
  ProblemSpec p;
  p.name = "sixhump";
  p.label = "f4";
  p.dimension = 2;
  p.bounds = uniform_bounds(2, -5.0, 5.0);
  p.objective = [](std::span<const double> x) {
    const double a = x[0];
    const double b = x[1];
    const double a2 = a * a;
    const double b2 = b * b;
    return 4.0 * a2 - 2.1 * a2 * a2 + a2 * a2 * a2 / 3.0 + a * b - 4.0 * b2 + 4.0 * b2 * b2;
  };
  p.known_optimum = -1.03163;
  p.known_optimizer = Vector{0.08984201, -0.7126564};
  return p;
}

ProblemSpec trid(std::size_t n, double range, double minimum)
{
  ProblemSpec p;
  p.name = "trid" + std::to_string(n);
  p.label = n == 6 ? "f5" : "f6";
  p.dimension = n;
  p.bounds = uniform_bounds(n, -range, range);
  p.objective = [](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      s += sq(x[i] - 1.0);
    }
    for (std::size_t i = 1; i < x.size(); ++i) {
      s -= x[i] * x[i - 1];
    }
    return s;
  };
  p.known_optimum = minimum;
  Vector xstar(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = static_cast<double>(i + 1);
    xstar[i] = k * (static_cast<double>(n) + 1.0 - k);
  }
  p.known_optimizer = std::move(xstar);
  return p;
}

ProblemSpec sphere()
{
  ProblemSpec p;
  p.name = "sphere";
  p.label = "f7";
  p.dimension = 30;
  p.bounds = uniform_bounds(30, -100.0, 100.0);
  p.objective = [](std::span<const double> x) {
    return std::transform_reduce(x.begin(), x.end(), 0.0, std::plus<>{},
                                 [](double v) { return v * v; });
  };
  p.known_optimum = 0.0;
  p.known_optimizer = Vector(30, 0.0);
  return p;
}

ProblemSpec sumsquares()
{
  ProblemSpec p;
  p.name = "sumsquares";
  p.label = "f8";
  p.dimension = 30;
  p.bounds = uniform_bounds(30, -10.0, 10.0);
  p.objective = [](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      s += static_cast<double>(i + 1) * sq(x[i]);
    }
    return s;
  };
  p.known_optimum = 0.0;
  p.known_optimizer = Vector(30, 0.0);
  return p;
}

ProblemSpec griewank()
{
  ProblemSpec p;
  p.name = "griewank";
  p.label = "f9";
  p.dimension = 30;
  p.bounds = uniform_bounds(30, -600.0, 600.0);
  p.objective = [](std::span<const double> x) {
    double s = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      s += sq(x[i]);
      prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - prod + 1.0;
  };
  p.known_optimum = 0.0;
  p.known_optimizer = Vector(30, 0.0);
  return p;
}

ProblemSpec ackley()
{
  ProblemSpec p;
  p.name = "ackley";
  p.label = "f10";
  p.dimension = 30;
  p.bounds = uniform_bounds(30, -32.0, 32.0);
  p.objective = [](std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double s2 = 0.0;
    double sc = 0.0;
    for (double v : x) {
      s2 += v * v;
      sc += std::cos(2.0 * std::numbers::pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(s2 / n)) - std::exp(sc / n) + 20.0 +
           std::numbers::e;
  };
  p.known_optimum = 0.0;
  p.known_optimizer = Vector(30, 0.0);
  return p;
}

// ---------------------------------------------------------------------------
// Constrained problems

ProblemSpec cp1()
{
  ProblemSpec p;
  p.name = "cp1";
  p.label = "CP1";
  p.dimension = 13;
  p.bounds = uniform_bounds(13, 0.0, 1.0);
  p.bounds[9] = p.bounds[10] = p.bounds[11] = Bound{0.0, 100.0};
  p.objective = [](std::span<const double> x) {
    double f = 0.0;
    for (std::size_t d = 0; d < 4; ++d) {
      f += 5.0 * x[d] - 5.0 * sq(x[d]);
    }
    for (std::size_t d = 4; d < 13; ++d) {
      f -= x[d];
    }
    return f;
  };
  p.inequality_constraints = {
      [](std::span<const double> x) { return 2 * x[0] + 2 * x[1] + x[9] + x[10] - 10; },
      [](std::span<const double> x) { return 2 * x[0] + 2 * x[2] + x[9] + x[11] - 10; },
      [](std::span<const double> x) { return 2 * x[1] + 2 * x[2] + x[10] + x[11] - 10; },
      [](std::span<const double> x) { return -8 * x[0] + x[9]; },
      [](std::span<const double> x) { return -8 * x[1] + x[10]; },
      [](std::span<const double> x) { return -8 * x[2] + x[11]; },
      [](std::span<const double> x) { return -2 * x[3] - x[4] + x[9]; },
      [](std::span<const double> x) { return -2 * x[5] - x[6] + x[10]; },
      [](std::span<const double> x) { return -2 * x[7] - x[8] + x[11]; },
  };
  p.known_optimum = -15.0;
  p.known_optimizer = Vector{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1};
  return p;
}

// Himmelblau's nonlinear problem in its standard form.
ProblemSpec cp2()
{
  ProblemSpec p;
  p.name = "cp2";
  p.label = "CP2";
  p.dimension = 5;
  p.bounds = {{78, 102}, {33, 45}, {27, 45}, {27, 45}, {27, 45}};
  p.objective = [](std::span<const double> x) {
    return 5.3578547 * sq(x[2]) + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141;
  };
  auto u = [](std::span<const double> x) {
    return 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] -
           0.0022053 * x[2] * x[4];
  };
  auto v = [](std::span<const double> x) {
    return 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] +
           0.0021813 * sq(x[2]);
  };
  auto w = [](std::span<const double> x) {
    return 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] +
           0.0019085 * x[2] * x[3];
  };
  p.inequality_constraints = {
      [u](std::span<const double> x) { return u(x) - 92.0; },
      [u](std::span<const double> x) { return -u(x); },
      [v](std::span<const double> x) { return v(x) - 110.0; },
      [v](std::span<const double> x) { return -v(x) + 90.0; },
      [w](std::span<const double> x) { return w(x) - 25.0; },
      [w](std::span<const double> x) { return -w(x) + 20.0; },
  };
  p.known_optimum = -30665.539;
  p.known_optimizer = Vector{78, 33, 29.995256025682, 45, 36.775812905788};
  return p;
}

ProblemSpec cp3()
{
  ProblemSpec p;
  p.name = "cp3";
  p.label = "CP3";
  p.dimension = 2;
  p.bounds = {{13, 100}, {0, 100}};
  p.objective = [](std::span<const double> x) { return cube(x[0] - 10) + cube(x[1] - 20); };
  p.inequality_constraints = {
      [](std::span<const double> x) { return -sq(x[0] - 5) - sq(x[1] - 5) + 100; },
      [](std::span<const double> x) { return sq(x[0] - 6) + sq(x[1] - 5) - 82.81; },
  };
  p.known_optimum = -6961.81388;
  // The five printed digits of x2 leave g2 at +6.6e-6; the full-precision
  // intersection of the two active circles is used instead.
  p.known_optimizer = Vector{14.095, 0.8429607892154795668};
  return p;
}

ProblemSpec cp4()
{
  ProblemSpec p;
  p.name = "cp4";
  p.label = "CP4";
  p.dimension = 10;
  p.bounds = uniform_bounds(10, -10.0, 10.0);
  p.objective = [](std::span<const double> x) {
    return sq(x[0]) + sq(x[1]) + x[0] * x[1] - 14 * x[0] - 16 * x[1] + sq(x[2] - 10) +
           4 * sq(x[3] - 5) + sq(x[4] - 3) + 2 * sq(x[5] - 1) + 5 * sq(x[6]) +
           7 * sq(x[7] - 11) + 2 * sq(x[8] - 10) + sq(x[9] - 7) + 45;
  };
  p.inequality_constraints = {
      [](std::span<const double> x) { return -105 + 4 * x[0] + 5 * x[1] - 3 * x[6] + 9 * x[7]; },
      [](std::span<const double> x) { return 10 * x[0] - 8 * x[1] - 17 * x[6] + 2 * x[7]; },
      [](std::span<const double> x) { return -8 * x[0] + 2 * x[1] + 5 * x[8] - 2 * x[9] - 12; },
      [](std::span<const double> x) {
        return 3 * sq(x[0] - 2) + 4 * sq(x[1] - 3) + 2 * sq(x[2]) - 7 * x[3] - 120;
      },
      [](std::span<const double> x) {
        return 5 * sq(x[0]) + 8 * x[1] + sq(x[2] - 6) - 2 * x[3] - 40;
      },
      [](std::span<const double> x) {
        return sq(x[0]) + 2 * sq(x[1] - 2) - 2 * x[0] * x[1] + 14 * x[4] - 6 * x[5];
      },
      [](std::span<const double> x) {
        return 0.5 * sq(x[0] - 8) + 2 * sq(x[1] - 4) + 3 * sq(x[4]) - x[5] - 30;
      },
      [](std::span<const double> x) {
        return -3 * x[0] + 6 * x[1] + 12 * sq(x[8] - 8) - 7 * x[9];
      },
  };
  p.known_optimum = 24.3062091;
  // Printed to seven digits the optimizer violates g3 and g4 by up to 1.2e-5;
  // these are the same point to fourteen digits.
  p.known_optimizer = Vector{2.17199634142692, 2.3636830416034,  8.77392573913157,
                             5.09598443745173, 0.990654756560493, 1.43057392853463,
                             1.32164415364306, 9.82872576524495, 8.2800915887356,
                             8.3759266477347};
  return p;
}

ProblemSpec cp5()
{
  ProblemSpec p;
  p.name = "cp5";
  p.label = "CP5";
  p.dimension = 2;
  p.bounds = uniform_bounds(2, -1.0, 1.0);
  p.objective = [](std::span<const double> x) { return sq(x[0]) + sq(x[1] - 1); };
  p.equality_constraints = {
      [](std::span<const double> x) { return x[1] - sq(x[0]); },
  };
  p.known_optimum = 0.7499;
  p.known_optimizer = Vector{1.0 / std::numbers::sqrt2, 0.5};
  return p;
}

ProblemSpec spring()
{
  ProblemSpec p;
  p.name = "spring";
  p.label = "Spring Design";
  p.dimension = 3;
  p.bounds = {{0.05, 2.0}, {0.25, 1.3}, {2.0, 15.0}};
  p.objective = [](std::span<const double> x) { return (x[2] + 2) * x[1] * sq(x[0]); };
  p.inequality_constraints = {
      [](std::span<const double> x) {
        return 1 - cube(x[1]) * x[2] / (71785 * sq(sq(x[0])));
      },
      [](std::span<const double> x) {
        const double x1 = x[0];
        const double x2 = x[1];
        return (4 * sq(x2) - x1 * x2) / (12566 * (x2 * cube(x1) - sq(sq(x1)))) +
               1 / (5108 * sq(x1)) - 1;
      },
      [](std::span<const double> x) { return 1 - 140.45 * x[0] / (sq(x[1]) * x[2]); },
      [](std::span<const double> x) { return (x[1] + x[0]) / 1.5 - 1; },
  };
  p.reference_value = 0.012665;
  p.known_optimizer = Vector{0.051689062, 0.356717678, 11.288974875};
  return p;
}

ProblemSpec welded_beam()
{
  // x = (w, L, d, h): weld width and length, beam depth and thickness.
  constexpr double kE = 30e6;
  constexpr double kG = 12e6;
  constexpr double kBeamLength = 14.0;

  ProblemSpec p;
  p.name = "welded_beam";
  p.label = "Welded Beam Design";
  p.dimension = 4;
  p.bounds = {{0.1, 2.0}, {0.1, 10.0}, {0.1, 10.0}, {0.1, 2.0}};
  auto cost = [](std::span<const double> x) {
    return 1.10471 * sq(x[0]) * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]);
  };
  p.objective = cost;
  auto tau = [](std::span<const double> x) {
    const double w = x[0];
    const double L = x[1];
    const double d = x[2];
    const double alpha = 6000.0 / (std::numbers::sqrt2 * w * L);
    const double Q = 6000.0 * (14.0 + L / 2.0);
    const double D = 0.5 * std::sqrt(sq(L) + sq(w + d));
    const double J = std::numbers::sqrt2 * w * L * (sq(L) / 6.0 + sq(w + d) / 2.0);
    const double beta = Q * D / J;
    return std::sqrt(sq(alpha) + alpha * beta * L / D + sq(beta));
  };
  auto buckling = [](std::span<const double> x) {
    const double d = x[2];
    const double h = x[3];
    return 4.013 * kE * std::sqrt(sq(d) * std::pow(h, 6) / 36.0) / sq(kBeamLength) *
           (1.0 - d / (2.0 * kBeamLength) * std::sqrt(kE / (4.0 * kG)));
  };
  p.inequality_constraints = {
      [](std::span<const double> x) { return x[0] - x[3]; },
      [](std::span<const double> x) { return 65856.0 / (30000.0 * x[3] * cube(x[2])) - 0.25; },
      [tau](std::span<const double> x) { return tau(x) - 13600.0; },
      [](std::span<const double> x) { return 504000.0 / (x[3] * sq(x[2])) - 30000.0; },
      [](std::span<const double> x) {
        return 1.10471 * sq(x[0]) + 0.04811 * x[2] * x[3] * (14.0 + x[1]) - 5.0;
      },
      [](std::span<const double> x) { return 0.125 - x[0]; },
      [buckling](std::span<const double> x) { return 6000.0 - buckling(x); },
  };
  p.reference_value = 1.724852;
  p.known_optimizer = Vector{0.205730, 3.470489, 9.036624, 0.205730};
  return p;
}

ProblemSpec speed_reducer()
{
  ProblemSpec p;
  p.name = "speed_reducer";
  p.label = "Speed Reducer Design";
  p.dimension = 7;
  p.bounds = {{2.6, 3.6}, {0.7, 0.8}, {17, 28}, {7.3, 8.3}, {7.8, 8.3}, {2.9, 3.9}, {5.0, 5.5}};
  p.objective = [](std::span<const double> x) {
    return 0.7854 * x[0] * sq(x[1]) * (3.3333 * sq(x[2]) + 14.9334 * x[2] - 43.0934) -
           1.508 * x[0] * (sq(x[5]) + sq(x[6])) + 7.4777 * (cube(x[5]) + cube(x[6])) +
           0.7854 * (x[3] * sq(x[5]) + x[4] * sq(x[6]));
  };
  p.inequality_constraints = {
      [](std::span<const double> x) { return 27.0 / (x[0] * sq(x[1]) * x[2]) - 1; },
      [](std::span<const double> x) { return 397.5 / (x[0] * sq(x[1]) * sq(x[2])) - 1; },
      [](std::span<const double> x) {
        return 1.93 * cube(x[3]) / (x[1] * x[2] * sq(sq(x[5]))) - 1;
      },
      [](std::span<const double> x) {
        return 1.93 * cube(x[4]) / (x[1] * x[2] * sq(sq(x[6]))) - 1;
      },
      [](std::span<const double> x) {
        return std::sqrt(sq(745.0 * x[3] / (x[1] * x[2])) + 16.9e6) / (110.0 * cube(x[5])) - 1;
      },
      [](std::span<const double> x) {
        return std::sqrt(sq(745.0 * x[4] / (x[1] * x[2])) + 157.5e6) / (85.0 * cube(x[6])) - 1;
      },
      [](std::span<const double> x) { return x[1] * x[2] / 40.0 - 1; },
      [](std::span<const double> x) { return 5.0 * x[1] / x[0] - 1; },
      [](std::span<const double> x) { return x[0] / (12.0 * x[1]) - 1; },
      [](std::span<const double> x) { return (1.5 * x[5] + 1.9) / x[3] - 1; },
      [](std::span<const double> x) { return (1.1 * x[6] + 1.9) / x[4] - 1; },
  };
  p.reference_value = 2996.114;
  p.integer_dims = {2};
  return p;
}

constexpr std::array<std::string_view, 18> kNames = {
    "colville", "matyas", "schaffer", "sixhump", "trid6",  "trid10",
    "sphere",   "sumsquares", "griewank", "ackley", "cp1", "cp2",
    "cp3",      "cp4",    "cp5",      "spring",  "welded_beam", "speed_reducer"};

std::vector<ProblemSpec> build_catalog()
{
  std::vector<ProblemSpec> c;
  c.reserve(kNames.size());
  c.push_back(colville());
  c.push_back(matyas());
  c.push_back(schaffer());
  c.push_back(sixhump());
  c.push_back(trid(6, 36.0, -50.0));
  c.push_back(trid(10, 100.0, -210.0));
  c.push_back(sphere());
  c.push_back(sumsquares());
  c.push_back(griewank());
  c.push_back(ackley());
  c.push_back(cp1());
  c.push_back(cp2());
  c.push_back(cp3());
  c.push_back(cp4());
  c.push_back(cp5());
  c.push_back(spring());
  c.push_back(welded_beam());
  c.push_back(speed_reducer());
  return c;
}

const std::vector<ProblemSpec>& catalog()
{
  static const std::vector<ProblemSpec> instance = build_catalog();
  return instance;
}

double finite_or_inf(double v) { return std::isfinite(v) || v == -HUGE_VAL ? v : HUGE_VAL; }

} // namespace

std::span<const std::string_view> problem_names() { return kNames; }

const ProblemSpec& get_problem(std::string_view name)
{
  for (const auto& p : catalog()) {
    if (p.name == name) {
      return p;
    }
  }
  std::string message = "unknown problem '" + std::string(name) + "'; valid names:";
  for (auto n : kNames) {
    message += ' ';
    message += n;
  }
  throw UnknownProblemError(message);
}

Evaluation evaluate(const ProblemSpec& problem, std::span<const double> x, EvalCounter& counter)
{
  if (x.size() != problem.dimension) {
    throw std::invalid_argument("evaluate: " + problem.name + " expects dimension " +
                                std::to_string(problem.dimension) + ", got " +
                                std::to_string(x.size()));
  }
  ++counter.count_;

  Vector rounded;
  std::span<const double> point = x;
  if (!problem.integer_dims.empty()) {
    rounded.assign(x.begin(), x.end());
    for (auto j : problem.integer_dims) {
      rounded[j] = std::round(rounded[j]);
    }
    point = rounded;
  }

  Evaluation out;
  const double f = problem.objective(point);
  out.non_finite = !std::isfinite(f);
  out.objective = out.non_finite ? HUGE_VAL : f;

  out.g_values.reserve(problem.inequality_constraints.size());
  for (const auto& g : problem.inequality_constraints) {
    out.g_values.push_back(finite_or_inf(g(point)));
  }
  out.h_values.reserve(problem.equality_constraints.size());
  for (const auto& h : problem.equality_constraints) {
    const double v = h(point);
    out.h_values.push_back(std::isfinite(v) ? v : HUGE_VAL);
  }
  return out;
}

bool within_tolerance(const Evaluation& eval, double ineq_tol, double eq_tol) noexcept
{
  return std::all_of(eval.g_values.begin(), eval.g_values.end(),
                     [&](double g) { return g <= ineq_tol; }) &&
         std::all_of(eval.h_values.begin(), eval.h_values.end(),
                     [&](double h) { return std::abs(h) <= eq_tol; });
}

std::string catalog_json()
{
  auto doc = nlohmann::json::array();
  for (const auto& p : catalog()) {
    nlohmann::json entry;
    entry["name"] = p.name;
    entry["label"] = p.label;
    entry["dimension"] = p.dimension;
    auto bounds = nlohmann::json::array();
    for (const auto& b : p.bounds) {
      bounds.push_back({b.lower, b.upper});
    }
    entry["bounds"] = std::move(bounds);
    entry["inequality_constraints"] = p.inequality_constraints.size();
    entry["equality_constraints"] = p.equality_constraints.size();
    entry["known_optimum"] = p.known_optimum ? nlohmann::json(*p.known_optimum) : nlohmann::json();
    entry["reference_value"] =
        p.reference_value ? nlohmann::json(*p.reference_value) : nlohmann::json();
    entry["integer_dims"] = p.integer_dims;
    doc.push_back(std::move(entry));
  }
  return doc.dump(2);
}

} // namespace sbppa
