#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opnorm/certificate.hpp"
#include "opnorm/dense.hpp"
#include "opnorm/exact_norms.hpp"
#include "opnorm/exponent.hpp"

namespace opnorm {

struct DetectionTolerances {
  double orthonormal = kOrthonormalTol;
  double rank_one = kRankOneTol;
  double entry = kEntryTol;
};

/// A class that the matrix was tested against, and the parameters the
/// exact operation needs when it matched.
struct DetectionCheck {
  ClassKind kind;
  bool matched;
  std::string detail;
  std::optional<ClassCertificate> certificate;
};

struct DetectionReport {
  std::vector<DetectionCheck> checks;  // in priority order
  DetectionTolerances tolerances_used;

  std::vector<ClassCertificate> matches() const;
  bool empty() const;
};

/// Structural classification in fixed priority order: diagonal, rank-one,
/// k-regular (unsigned, then signed), sign-row orthonormal, scaled
/// orthogonal, 1->r. Classes that need a factorization witness are never
/// claimed from raw entries.
DetectionReport detect(const DenseMatrix& a, const NormQuery& query);

/// max |A^T A - I| <= eps.
bool is_orthonormal(const DenseMatrix& a, double eps);

/// u = sigma_1 u_1, v = v_1 (largest-magnitude entry of v positive) when
/// sigma_2 / sigma_1 <= eps; u = 0 for the zero matrix.
std::optional<RankOneFactors> rank_one_factor(const DenseMatrix& a, double eps);

/// Exact value licensed by a certificate. `a` is the matrix the certificate
/// describes; the maximizer is re-verified against it.
ExactResult solve_exact(const ClassCertificate& certificate, const DenseMatrix& a,
                        const NormQuery& query);

/// First detected class whose exact operation succeeds; kNotInClass when none.
ExactResult exact_from_detection(const DenseMatrix& a, const NormQuery& query,
                                 const DetectionReport& report);

enum class DualityLeg { kDirect, kTranspose };

std::string_view to_string(DualityLeg leg);

struct GrothendieckResult {
  double value;
  DualityLeg leg;
  NormQuery query;  // the induced-norm query actually solved
  ExactResult exact;
};

/// G_A(p, q) = ||A||_{q->p*}, tried directly and then as ||A^T||_{p->q*}.
GrothendieckResult grothendieck_value(const DenseMatrix& a, const Exponent& p,
                                      const Exponent& q);

}  // namespace opnorm
