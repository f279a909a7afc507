#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opnorm/dense.hpp"
#include "opnorm/exponent.hpp"

namespace opnorm {

/// Tolerance policy. The closed forms are exact, so membership tests are
/// near-exact and anything noisier belongs to the oracle.
inline constexpr double kFeasibilityTol = 1e-9;
inline constexpr double kOrthonormalTol = 1e-10;
inline constexpr double kRankOneTol = 1e-10;
inline constexpr double kEntryTol = 1e-12;

enum class ClassKind {
  kDiagonal,
  kRankOne,
  kVandermonde,
  kSignRowOrthonormal,
  kSvdClass,
  kShear,
  kCompositeShear,
  kKRegular,
  kScaledOrthogonal,
  kOrthogonalSvd,
  kOneToR,
};

std::string_view to_string(ClassKind kind);
std::optional<ClassKind> class_kind_from_string(std::string_view name);

struct DiagonalPayload {
  DenseVector diagonal;
};

/// A = u v^T.
struct RankOneFactors {
  DenseVector u;
  DenseVector v;
};

/// Rows a1, then sgn(a1)|a1|^(1/alpha_k) for each (p'_k, q'_k) pair. The
/// alphas depend on the query exponent q, which is recorded alongside.
struct VandermondeSpec {
  DenseVector a1;
  std::vector<Exponent> p_prime;
  std::vector<Exponent> q_prime;
  Exponent q;

  /// Builds p' from q' and validates 1/p' + 1/q' = 1, 1 <= q' <= q.
  static VandermondeSpec make(DenseVector a1, std::vector<Exponent> q_prime,
                              Exponent q);

  std::vector<double> alphas() const;
};

/// Orthonormal matrix whose row `row` equals tau / sqrt(n).
struct SignRowPayload {
  std::size_t row;
  DenseVector tau;
};

/// A = V diag(sigma) U^T with U's first column tau / sqrt(n), V's first
/// column e1 and sigma[0] the largest singular value.
struct SvdClassSpec {
  DenseMatrix v;  // m x m
  DenseVector sigma;  // min(m, n) entries
  DenseMatrix u;  // n x n
  DenseVector tau;

  DenseMatrix assemble() const;
  /// Throws kNotInClass describing the first violated invariant.
  void validate() const;
};

struct ShearPayload {
  double gamma;
  std::size_t n;
  Exponent q;
  double lambda0;  // 0 when gamma == 0
};

/// A = B C with B from an SvdClassSpec (tau all ones) and C = I + gamma e1 e2^T.
struct CompositeShearPayload {
  SvdClassSpec b_spec;
  double gamma;
  double xi;
  DenseMatrix b;
  DenseMatrix c;
  DenseMatrix a;
};

/// Row i of A has entries signs[i][t] at columns index_lists[i][t]; every
/// column appears in exactly k rows. tau is a sign vector for which every
/// row's signed entries a_ij tau_j share one sign (all ones when unsigned).
struct KRegularSpec {
  std::size_t k;
  std::vector<std::vector<std::size_t>> index_lists;
  std::vector<std::vector<double>> signs;
  DenseVector tau;

  std::size_t n() const noexcept { return index_lists.size(); }
  bool is_signed() const;
  DenseMatrix assemble() const;
  void validate() const;
};

/// A = U diag(lambda), lambda_j = |u_{row,j}|^((q-2)/q).
struct ScaledOrthogonalSpec {
  DenseMatrix u;
  std::size_t row_index;
  DenseVector lambda;

  static ScaledOrthogonalSpec make(DenseMatrix u, std::size_t row_index,
                                   const Exponent& q);
  DenseMatrix assemble() const;
};

/// A = U diag(sigma) V diag(sigma_v), sigma_v_j = |v_{1j}|^((q-2)/q).
struct OrthogonalSvdSpec {
  DenseMatrix u;
  DenseVector sigma;
  DenseMatrix v;
  DenseVector sigma_v;

  static OrthogonalSvdSpec make(DenseMatrix u, DenseVector sigma, DenseMatrix v,
                                const Exponent& q);
  DenseMatrix assemble() const;
};

struct OneToRPayload {
  std::size_t column;
};

using CertificatePayload =
    std::variant<DiagonalPayload, RankOneFactors, VandermondeSpec,
                 SignRowPayload, SvdClassSpec, ShearPayload,
                 CompositeShearPayload, KRegularSpec, ScaledOrthogonalSpec,
                 OrthogonalSvdSpec, OneToRPayload>;

struct ClassCertificate {
  ClassKind kind;
  CertificatePayload payload;
};

struct ExactResult {
  double value;
  DenseVector maximizer;
  ClassCertificate certificate;
  std::string citation;
};

}  // namespace opnorm
