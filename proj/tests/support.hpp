#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "opnorm/dense.hpp"
#include "opnorm/exponent.hpp"

namespace opnorm::testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

/// Largest singular value by power iteration on A^T A in long double; kept
/// separate from the library's SVD so spectral checks have a second path.
inline double reference_sigma_max(const DenseMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<long double> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = 1.0L + 0.01L * static_cast<long double>(j);
  long double value = 0.0L;
  for (int it = 0; it < 20000; ++it) {
    std::vector<long double> y(m, 0.0L), z(n, 0.0L);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) z[j] += a(i, j) * y[i];
    long double norm = 0.0L;
    for (auto v : z) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0L) return 0.0;
    for (std::size_t j = 0; j < n; ++j) x[j] = z[j] / norm;
    const long double next = std::sqrt(norm);
    if (std::abs(next - value) <= 1e-19L * next && it > 50) {
      value = next;
      break;
    }
    value = next;
  }
  return static_cast<double>(value);
}

/// ||v||_p summed in long double without the library's scaling.
inline double reference_norm(const std::vector<double>& v, const Exponent& p) {
  if (p.is_inf()) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  long double s = 0.0L;
  for (double x : v) s += std::pow(static_cast<long double>(std::abs(x)), static_cast<long double>(p.value()));
  return static_cast<double>(std::pow(s, 1.0L / static_cast<long double>(p.value())));
}

inline DenseMatrix random_matrix(std::size_t m, std::size_t n, std::mt19937_64& rng,
                                 double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> e(m * n);
  for (double& x : e) x = u(rng);
  return DenseMatrix(m, n, std::move(e));
}

inline std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng, double lo,
                                         double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Exponent ex(double v) { return Exponent(v); }
inline Exponent inf() { return Exponent::infinity(); }
inline NormQuery query(Exponent q, Exponent r) { return NormQuery{q, r}; }

}  // namespace opnorm::testing
