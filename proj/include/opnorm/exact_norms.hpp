#pragma once

#include <span>
#include <vector>

#include "opnorm/certificate.hpp"
#include "opnorm/dense.hpp"
#include "opnorm/exponent.hpp"

namespace opnorm {

/// Checks ||x||_q = 1 and ||A x||_r = value, both to kFeasibilityTol
/// (relative; absolute when value is 0). Throws kCertificateMismatch.
void verify_certificate(const DenseMatrix& a, const NormQuery& query,
                        double value, std::span<const double> x);

/// Same check, returning the worst relative defect instead of throwing.
double certificate_defect(const DenseMatrix& a, const NormQuery& query,
                          double value, std::span<const double> x);

// Diagonal matrices. q <= r (equality included): max |a_i| at e_k for the
// smallest argmax k. q > r: (sum |a_i|^{qr/(q-r)})^{1/r - 1/q}.
ExactResult diagonal_norm(std::span<const double> diag, const NormQuery& query);

// ||u v^T|| = ||u||_r ||v||_{q*}.
ExactResult rank_one_norm(const RankOneFactors& factors, const NormQuery& query);

/// Upper bound for a matrix whose first row has no zero entries, with one
/// free conjugate pair (p'_i, q'_i), q'_i <= q, per remaining row.
double nonzero_row_upper_bound(const DenseMatrix& a, const NormQuery& query,
                               std::span<const Exponent> p_prime,
                               std::span<const Exponent> q_prime);

/// Largest deviation between the normalised first-row profile
/// sgn(a_1j)|a_1j|^p / ||a_1||_p^p and the matching profile of each later row.
/// Zero exactly when the upper bound above is attained.
double row_profile_residual(const DenseMatrix& a, const NormQuery& query,
                            std::span<const Exponent> p_prime,
                            std::span<const Exponent> q_prime);

DenseMatrix vandermonde_build(const VandermondeSpec& spec, const NormQuery& query);
ExactResult vandermonde_norm(const VandermondeSpec& spec, const NormQuery& query);

/// Orthonormal square A with a row in {-1, +1}/sqrt(n): n^{(q-2)/(2q)}.
/// Gated to q, r >= 2.
ExactResult sign_row_orthonormal_norm(const DenseMatrix& a, const NormQuery& query);

/// min of the two row-norm / sigma_max bounds; q, r >= 2.
double hadamard_upper_bound(const DenseMatrix& a, const NormQuery& query);

ExactResult svd_class_norm(const SvdClassSpec& spec, const NormQuery& query);

/// ||I + gamma e1 e2^T||_{q->q} = (1 + lambda0^p)^{1/p}; requires q == r,
/// 1 < q < inf, n >= 2.
ExactResult shear_norm(double gamma, std::size_t n, const NormQuery& query);

ExactResult composite_shear_norm(const SvdClassSpec& b_spec, const NormQuery& query);

/// Value k at n^{-1/q} tau; requires q == r.
ExactResult k_regular_norm(const KRegularSpec& spec, const NormQuery& query);

ExactResult scaled_orthogonal_norm(const ScaledOrthogonalSpec& spec,
                                   const NormQuery& query);

ExactResult orthogonal_svd_norm(const OrthogonalSvdSpec& spec, const NormQuery& query);

/// Max column r-norm at e_{j0}; j0 the smallest argmax.
ExactResult one_to_r_norm(const DenseMatrix& a, const Exponent& r);

}  // namespace opnorm
