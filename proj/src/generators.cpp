#include "opnorm/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "opnorm/error.hpp"
#include "opnorm/exact_norms.hpp"
#include "opnorm/linalg.hpp"

namespace opnorm {
namespace {

// diag(1, block).
DenseMatrix border_with_one(const DenseMatrix& block) {
  const std::size_t n = block.rows() + 1;
  return DenseMatrix::from_function(n, n, [&](std::size_t i, std::size_t j) {
    if (i == 0 || j == 0) return i == j ? 1.0 : 0.0;
    return block(i - 1, j - 1);
  });
}

DenseMatrix random_bordered(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return DenseMatrix::identity(1);
  return border_with_one(linalg::random_orthogonal(n - 1, rng));
}

}  // namespace

DenseMatrix normalized_hadamard(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) {
    fail(ErrorKind::kConstruction, "Sylvester Hadamard needs n a power of two");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  return DenseMatrix::from_function(n, n, [scale](std::size_t i, std::size_t j) {
    return (std::popcount(i & j) % 2 == 0 ? 1.0 : -1.0) * scale;
  });
}

DenseMatrix shear_matrix(double gamma, std::size_t n) {
  if (n < 2) fail(ErrorKind::kConstruction, "shear needs n >= 2");
  return DenseMatrix::from_function(n, n, [gamma](std::size_t i, std::size_t j) {
    if (i == j) return 1.0;
    return i == 0 && j == 1 ? gamma : 0.0;
  });
}

std::optional<KRegularLayout> k_regular_layout_from_string(std::string_view name) {
  if (name == "bidiagonal") return KRegularLayout::kBidiagonal;
  if (name == "circulant") return KRegularLayout::kCirculant;
  if (name == "random") return KRegularLayout::kRandom;
  if (name == "signed-bidiagonal") return KRegularLayout::kSignedBidiagonal;
  return std::nullopt;
}

KRegularSpec make_k_regular(std::size_t n, std::size_t k, KRegularLayout layout,
                            std::mt19937_64& rng) {
  if (n == 0) fail(ErrorKind::kConstruction, "n must be positive");
  KRegularSpec spec{k, std::vector<std::vector<std::size_t>>(n),
                    std::vector<std::vector<double>>(n), DenseVector(n, 1.0)};
  const bool bidiagonal =
      layout == KRegularLayout::kBidiagonal || layout == KRegularLayout::kSignedBidiagonal;
  if (bidiagonal) {
    if (n < 2) fail(ErrorKind::kConstruction, "bidiagonal layout needs n >= 2");
    if (k != 2) fail(ErrorKind::kConstruction, "bidiagonal layout has k = 2");
  }
  if (k == 0 || k > n) fail(ErrorKind::kConstruction, "need 1 <= k <= n");

  if (layout == KRegularLayout::kSignedBidiagonal) {
    const double wrap = n % 2 == 0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      spec.index_lists[i] = {i, i + 1};
      spec.signs[i] = {1.0, -1.0};
    }
    spec.index_lists[n - 1] = {0, n - 1};
    spec.signs[n - 1] = {wrap, 1.0};
    for (std::size_t j = 0; j < n; ++j) spec.tau[j] = j % 2 == 0 ? -1.0 : 1.0;
  } else {
    std::vector<std::size_t> row_perm(n), col_perm(n);
    std::iota(row_perm.begin(), row_perm.end(), 0);
    std::iota(col_perm.begin(), col_perm.end(), 0);
    if (layout == KRegularLayout::kRandom) {
      std::shuffle(row_perm.begin(), row_perm.end(), rng);
      std::shuffle(col_perm.begin(), col_perm.end(), rng);
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> cols;
      for (std::size_t t = 0; t < k; ++t) cols.push_back(col_perm[(row_perm[i] + t) % n]);
      std::sort(cols.begin(), cols.end());
      spec.index_lists[i] = std::move(cols);
      spec.signs[i].assign(k, 1.0);
    }
  }
  spec.validate();
  return spec;
}

DenseMatrix orthogonal_completion(std::span<const double> unit, std::mt19937_64& rng) {
  const std::size_t n = unit.size();
  // Householder reflection H with H e1 = unit, then H diag(1, Q).
  DenseVector w(unit.begin(), unit.end());
  for (double& x : w) x = -x;
  w[0] += 1.0;
  const double ww = std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
  const DenseMatrix h = DenseMatrix::from_function(n, n, [&](std::size_t i, std::size_t j) {
    const double id = i == j ? 1.0 : 0.0;
    return ww == 0.0 ? id : id - 2.0 * w[i] * w[j] / ww;
  });
  return multiply(h, random_bordered(n, rng));
}

SvdClassSpec make_svd_class(DenseVector sigma, DenseVector tau, std::mt19937_64& rng) {
  const std::size_t n = tau.size();
  if (n == 0 || sigma.size() != n) {
    fail(ErrorKind::kConstruction, "need n singular values and n signs");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  DenseVector u1(n);
  for (std::size_t j = 0; j < n; ++j) u1[j] = tau[j] * scale;
  SvdClassSpec spec{random_bordered(n, rng), std::move(sigma),
                    orthogonal_completion(u1, rng), std::move(tau)};
  spec.validate();
  return spec;
}

OrthogonalSvdSpec make_orthogonal_svd(DenseVector sigma, const Exponent& q,
                                      std::mt19937_64& rng) {
  const std::size_t n = sigma.size();
  if (n == 0) fail(ErrorKind::kConstruction, "empty Sigma");
  const auto lead = std::max_element(sigma.begin(), sigma.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  });
  std::iter_swap(sigma.begin(), lead);
  DenseMatrix v = linalg::random_orthogonal(n, rng);
  while (std::any_of(v.row(0).begin(), v.row(0).end(), [](double x) { return x == 0.0; })) {
    v = linalg::random_orthogonal(n, rng);
  }
  return OrthogonalSvdSpec::make(random_bordered(n, rng), std::move(sigma), std::move(v), q);
}

GeneratedInstance generate_diagonal(DenseVector diag) {
  DenseMatrix a = DenseMatrix::diagonal(diag);
  return {std::move(a), {ClassKind::kDiagonal, DiagonalPayload{std::move(diag)}}};
}

GeneratedInstance generate_rank_one(DenseVector u, DenseVector v) {
  DenseMatrix a = DenseMatrix::from_function(
      u.size(), v.size(), [&](std::size_t i, std::size_t j) { return u[i] * v[j]; });
  return {std::move(a),
          {ClassKind::kRankOne, RankOneFactors{std::move(u), std::move(v)}}};
}

GeneratedInstance generate_vandermonde(DenseVector a1, std::vector<Exponent> q_prime,
                                       const Exponent& q) {
  VandermondeSpec spec = VandermondeSpec::make(std::move(a1), std::move(q_prime), q);
  DenseMatrix a = vandermonde_build(spec, NormQuery{q, q});
  return {std::move(a), {ClassKind::kVandermonde, std::move(spec)}};
}

GeneratedInstance generate_hadamard(std::size_t n) {
  DenseMatrix a = normalized_hadamard(n);
  DenseVector tau(a.row(0).size(), 1.0);
  return {std::move(a), {ClassKind::kSignRowOrthonormal, SignRowPayload{0, std::move(tau)}}};
}

GeneratedInstance generate_svd_class(DenseVector sigma, DenseVector tau,
                                     std::mt19937_64& rng) {
  SvdClassSpec spec = make_svd_class(std::move(sigma), std::move(tau), rng);
  DenseMatrix a = spec.assemble();
  return {std::move(a), {ClassKind::kSvdClass, std::move(spec)}};
}

GeneratedInstance generate_shear(double gamma, std::size_t n) {
  DenseMatrix a = shear_matrix(gamma, n);
  return {std::move(a), {ClassKind::kShear, ShearPayload{gamma, n, Exponent(2.0), 0.0}}};
}

GeneratedInstance generate_composite_shear(DenseVector sigma, const Exponent& q,
                                           std::mt19937_64& rng) {
  DenseVector tau(sigma.size(), 1.0);
  SvdClassSpec b_spec = make_svd_class(std::move(sigma), std::move(tau), rng);
  ExactResult r = composite_shear_norm(b_spec, NormQuery{q, q});
  const auto& payload = std::get<CompositeShearPayload>(r.certificate.payload);
  return {payload.a, std::move(r.certificate)};
}

GeneratedInstance generate_k_regular(std::size_t n, std::size_t k, KRegularLayout layout,
                                     std::mt19937_64& rng) {
  KRegularSpec spec = make_k_regular(n, k, layout, rng);
  DenseMatrix a = spec.assemble();
  return {std::move(a), {ClassKind::kKRegular, std::move(spec)}};
}

GeneratedInstance generate_scaled_orthogonal(DenseMatrix u, std::size_t row,
                                             const Exponent& q) {
  ScaledOrthogonalSpec spec = ScaledOrthogonalSpec::make(std::move(u), row, q);
  DenseMatrix a = spec.assemble();
  return {std::move(a), {ClassKind::kScaledOrthogonal, std::move(spec)}};
}

GeneratedInstance generate_orthogonal_svd(DenseVector sigma, const Exponent& q,
                                          std::mt19937_64& rng) {
  OrthogonalSvdSpec spec = make_orthogonal_svd(std::move(sigma), q, rng);
  DenseMatrix a = spec.assemble();
  return {std::move(a), {ClassKind::kOrthogonalSvd, std::move(spec)}};
}

GeneratedInstance generate_one_to_r(DenseMatrix a, const Exponent& r) {
  ExactResult res = one_to_r_norm(a, r);
  return {std::move(a), std::move(res.certificate)};
}

}  // namespace opnorm
