#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "opnorm/certificate.hpp"
#include "opnorm/dense.hpp"
#include "opnorm/exponent.hpp"

namespace opnorm {

/// A matrix together with the certificate that licenses its exact norm.
struct GeneratedInstance {
  DenseMatrix matrix;
  ClassCertificate certificate;
};

/// Sylvester Hadamard matrix scaled by 1/sqrt(n); n must be a power of two.
DenseMatrix normalized_hadamard(std::size_t n);

/// I + gamma e1 e2^T.
DenseMatrix shear_matrix(double gamma, std::size_t n);

enum class KRegularLayout { kBidiagonal, kCirculant, kRandom, kSignedBidiagonal };

std::optional<KRegularLayout> k_regular_layout_from_string(std::string_view name);

/// Bidiagonal: ones on the diagonal and superdiagonal plus the wrap-around
/// entry (n, 1). Signed bidiagonal: 1 on the diagonal, -1 above it and wrap
/// entry (-1)^(n+1), which admits the alternating maximizer for every n.
/// Circulant: row i covers columns i, ..., i+k-1 mod n. Random: a circulant
/// with independently shuffled rows and columns.
KRegularSpec make_k_regular(std::size_t n, std::size_t k, KRegularLayout layout,
                            std::mt19937_64& rng);

/// V diag(sigma) U^T with U's first column tau/sqrt(n) (a Householder
/// reflection of e1, completed by a random orthogonal block) and V = diag(1, Q).
SvdClassSpec make_svd_class(DenseVector sigma, DenseVector tau, std::mt19937_64& rng);

/// Orthogonal matrix whose first column is `unit` (a unit vector).
DenseMatrix orthogonal_completion(std::span<const double> unit, std::mt19937_64& rng);

/// U = diag(1, Q), V random orthogonal (re-drawn until its first row has no
/// zeros), sigma reordered so its leading entry has the largest magnitude.
OrthogonalSvdSpec make_orthogonal_svd(DenseVector sigma, const Exponent& q,
                                      std::mt19937_64& rng);

GeneratedInstance generate_diagonal(DenseVector diag);
GeneratedInstance generate_rank_one(DenseVector u, DenseVector v);
GeneratedInstance generate_vandermonde(DenseVector a1, std::vector<Exponent> q_prime,
                                       const Exponent& q);
GeneratedInstance generate_hadamard(std::size_t n);
GeneratedInstance generate_svd_class(DenseVector sigma, DenseVector tau,
                                     std::mt19937_64& rng);
GeneratedInstance generate_shear(double gamma, std::size_t n);
/// The shear parameter depends on q, so the instance is tied to q = r.
GeneratedInstance generate_composite_shear(DenseVector sigma, const Exponent& q,
                                           std::mt19937_64& rng);
GeneratedInstance generate_k_regular(std::size_t n, std::size_t k, KRegularLayout layout,
                                     std::mt19937_64& rng);
GeneratedInstance generate_scaled_orthogonal(DenseMatrix u, std::size_t row,
                                             const Exponent& q);
GeneratedInstance generate_orthogonal_svd(DenseVector sigma, const Exponent& q,
                                          std::mt19937_64& rng);
GeneratedInstance generate_one_to_r(DenseMatrix a, const Exponent& r);

}  // namespace opnorm
