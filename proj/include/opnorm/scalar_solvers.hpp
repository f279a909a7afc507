#pragma once

#include <cstddef>
#include <functional>

#include "opnorm/exponent.hpp"

namespace opnorm {

/// A scalar equation f(x) = 0 on a positive bracket [lower, upper], f
/// strictly monotone there.
struct RootProblem {
  std::function<double(double)> evaluate;
  double lower = 1e-8;
  double upper = 1.0;
  double tol_rel = 1e-12;
};

inline constexpr int kMaxBracketDoublings = 60;
inline constexpr int kMaxBisectionIterations = 200;

/// Bisection on a strictly monotone function. If the initial bracket has no
/// sign change the upper end is doubled (and the lower halved) up to 60
/// times. Bisection runs until the bracket collapses to adjacent doubles or
/// the iteration cap; the endpoint with the smaller |f| is returned.
///
/// Throws kNoRoot when no sign change is found, kNumerical on a non-finite
/// evaluation.
double solve_monotone(const RootProblem& problem);

/// Parameters of the shear I + gamma e1 e2^T at exponent q, with lambda0 the
/// positive root of (1 + l^p)^(q/p) (1 - |gamma|^q / l^q) = 1, p = q*.
struct ShearParams {
  double gamma;
  Exponent q;
  Exponent p;
  double lambda0;
};

/// (1 + l^p)^(q/p) (1 - |gamma|^q / l^q) - 1. Strictly increasing in l > 0.
double shear_residual(double lambda, double gamma, double q);

/// Throws kDegenerateShear for gamma == 0 and kUnsupportedExponent unless
/// 1 < q < inf.
ShearParams solve_shear_lambda0(double gamma, const Exponent& q);

/// |gamma| - [(1+s)^(p/q) - 1]^(1/p) / (1+s)^(1/q), s = n / (|1-gamma|^q + n - 1).
double composite_gamma_residual(double gamma, std::size_t n, double q);

/// xi = n^(-1/q) (|1 - gamma|^q + n - 1)^(1/q) = ||C^{-1} y*||_q.
double composite_xi(double gamma, std::size_t n, double q);

/// Smallest positive root of composite_gamma_residual found by scanning
/// [0, 16] in steps of 0.25, then bisecting the first sign change.
double solve_composite_gamma(std::size_t n, const Exponent& q);

}  // namespace opnorm
