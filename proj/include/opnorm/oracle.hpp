#pragma once

#include <cstdint>

#include "opnorm/dense.hpp"
#include "opnorm/exponent.hpp"

namespace opnorm {

struct OracleConfig {
  std::size_t restarts = 64;
  std::size_t max_iters = 500;
  double conv_tol = 1e-10;
  std::uint64_t seed = 0;
  std::size_t grid_points = 200;  // per angular dimension, cols <= 3 only
};

/// A feasible point x (||x||_q = 1) and its value ||Ax||_r, hence a lower
/// bound on ||A||_{q->r}.
struct OracleEstimate {
  double value = 0.0;
  DenseVector candidate;
  std::size_t iterations_used = 0;
  std::size_t restarts_used = 0;
  bool converged = false;
  std::uint64_t seed = 0;
};

/// Nonlinear power map x <- normalize_q(phi_{q*}(A^T phi_r(Ax))) from x0.
/// Returns the best iterate seen. q = 1 is rejected with kUnsupportedExponent.
OracleEstimate power_iteration(const DenseMatrix& a, const NormQuery& query,
                               std::span<const double> x0, const OracleConfig& config);

/// Power iteration from every e_j, the ones vector, the alternating-sign
/// vector and `restarts` seeded random points; best value wins, ties go to
/// the lexicographically smallest candidate. Dispatches q = 1 to the vertex
/// search.
OracleEstimate multistart(const DenseMatrix& a, const NormQuery& query,
                          const OracleConfig& config);

/// Exhaustive angular grid over the q-sphere for cols <= 3
/// (kUnsupportedDimension otherwise).
OracleEstimate grid_lower_bound(const DenseMatrix& a, const NormQuery& query,
                                const OracleConfig& config);

/// max_j ||A e_j||_r, which is exact for q = 1.
OracleEstimate vertex_search_q1(const DenseMatrix& a, const Exponent& r);

/// Independent random stream for restart `index`, derived from `seed`.
std::uint64_t restart_stream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace opnorm
