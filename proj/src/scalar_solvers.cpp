#include "opnorm/scalar_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opnorm/error.hpp"

namespace opnorm {
namespace {

double checked(const RootProblem& problem, double x) {
  const double fx = problem.evaluate(x);
  if (!std::isfinite(fx)) {
    fail(ErrorKind::kNumerical,
         "non-finite function value at x = " + std::to_string(x));
  }
  return fx;
}

bool opposite(double a, double b) {
  return (a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0);
}

double require_open_q(const Exponent& q, const char* what) {
  if (q.is_inf() || !(q.value() > 1.0)) {
    fail(ErrorKind::kUnsupportedExponent,
         std::string(what) + " requires 1 < q < inf, got q = " + q.to_string());
  }
  return q.value();
}

}  // namespace

double solve_monotone(const RootProblem& problem) {
  if (!(problem.lower > 0.0) || !(problem.lower < problem.upper)) {
    fail(ErrorKind::kNoRoot, "bracket must satisfy 0 < lower < upper");
  }
  double lo = problem.lower;
  double hi = problem.upper;
  double f_lo = checked(problem, lo);
  double f_hi = checked(problem, hi);
  for (int k = 0; k < kMaxBracketDoublings && !opposite(f_lo, f_hi); ++k) {
    lo *= 0.5;
    hi *= 2.0;
    f_lo = checked(problem, lo);
    f_hi = checked(problem, hi);
  }
  if (!opposite(f_lo, f_hi)) {
    fail(ErrorKind::kNoRoot, "no sign change after bracket expansion");
  }
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;

  for (int it = 0; it < kMaxBisectionIterations; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // adjacent doubles
    const double f_mid = checked(problem, mid);
    if (f_mid == 0.0) return mid;
    if (opposite(f_lo, f_mid)) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
}

double shear_residual(double lambda, double gamma, double q) {
  const double p = q / (q - 1.0);
  const double ratio = std::abs(gamma) / lambda;
  // Far left of the root the ratio term overflows; its sign is all we need.
  if (ratio > 1.0 && q * std::log(ratio) > 700.0) return -1e300;
  const double lift = std::pow(1.0 + std::pow(lambda, p), q / p);
  return lift * (1.0 - std::pow(ratio, q)) - 1.0;
}

ShearParams solve_shear_lambda0(double gamma, const Exponent& q) {
  if (gamma == 0.0) {
    fail(ErrorKind::kDegenerateShear,
         "gamma = 0: the shear is the identity, norm 1");
  }
  const double qv = require_open_q(q, "shear root");
  RootProblem problem{
      [gamma, qv](double l) { return shear_residual(l, gamma, qv); }, 1e-8,
      std::max(1.0, 2.0 * std::abs(gamma)), 1e-12};
  const double lambda0 = solve_monotone(problem);
  return ShearParams{gamma, q, q.conjugate(), lambda0};
}

double composite_xi(double gamma, std::size_t n, double q) {
  const double nn = static_cast<double>(n);
  return std::pow(nn, -1.0 / q) *
         std::pow(std::pow(std::abs(1.0 - gamma), q) + nn - 1.0, 1.0 / q);
}

double composite_gamma_residual(double gamma, std::size_t n, double q) {
  const double p = q / (q - 1.0);
  const double nn = static_cast<double>(n);
  const double s = nn / (std::pow(std::abs(1.0 - gamma), q) + nn - 1.0);
  const double numer = std::pow(std::pow(1.0 + s, p / q) - 1.0, 1.0 / p);
  const double denom = std::pow(1.0 + s, 1.0 / q);
  return std::abs(gamma) - numer / denom;
}

double solve_composite_gamma(std::size_t n, const Exponent& q) {
  if (n < 2) fail(ErrorKind::kPreconditionViolation, "composite shear needs n >= 2");
  const double qv = require_open_q(q, "composite shear root");
  constexpr double kStep = 0.25;
  constexpr int kSteps = 64;
  auto g = [n, qv](double x) { return composite_gamma_residual(x, n, qv); };
  double left = 0.0;
  double g_left = g(left);
  for (int k = 1; k <= kSteps; ++k) {
    const double right = kStep * k;
    const double g_right = g(right);
    if (opposite(g_left, g_right)) {
      if (g_right == 0.0) return right;
      // Bisection needs lower > 0; g(0) < 0 so any tiny positive start works.
      RootProblem problem{g, left > 0.0 ? left : 1e-300, right, 1e-12};
      return solve_monotone(problem);
    }
    left = right;
    g_left = g_right;
  }
  fail(ErrorKind::kNoRoot, "no sign change of the composite-shear equation on [0, 16]");
}

}  // namespace opnorm
