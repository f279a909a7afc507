#include "opnorm/detect.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <optional>
#include <variant>

#include "opnorm/error.hpp"
#include "opnorm/generators.hpp"
#include "opnorm/linalg.hpp"

namespace opnorm {
namespace {

DetectionCheck miss(ClassKind kind, std::string detail) {
  return DetectionCheck{kind, false, std::move(detail), std::nullopt};
}

DetectionCheck hit(ClassKind kind, std::string detail, CertificatePayload payload) {
  return DetectionCheck{kind, true, std::move(detail),
                        ClassCertificate{kind, std::move(payload)}};
}

DetectionCheck check_diagonal(const DenseMatrix& a) {
  if (!a.is_square()) return miss(ClassKind::kDiagonal, "not square");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j && a(i, j) != 0.0) {
        return miss(ClassKind::kDiagonal, "non-zero off-diagonal entry");
      }
    }
  }
  DenseVector diag(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) diag[i] = a(i, i);
  return hit(ClassKind::kDiagonal, "exact zeros off the diagonal",
             DiagonalPayload{std::move(diag)});
}

DetectionCheck check_rank_one(const DenseMatrix& a, double eps) {
  auto factors = rank_one_factor(a, eps);
  if (!factors) return miss(ClassKind::kRankOne, "sigma_2 / sigma_1 above tolerance");
  return hit(ClassKind::kRankOne, "sigma_2 / sigma_1 within tolerance", std::move(*factors));
}

// Entry classification for the k-regular tests: 0, +1 or -1 within eps.
std::optional<double> unit_entry(double v, double eps) {
  if (std::abs(v) <= eps) return 0.0;
  if (std::abs(v - 1.0) <= eps) return 1.0;
  if (std::abs(v + 1.0) <= eps) return -1.0;
  return std::nullopt;
}

// Coherent sign vector: every row's a_ij tau_j share one sign. Columns are
// 2-coloured component by component, each seeded with tau = -1 at its
// smallest column.
std::optional<DenseVector> coherent_signs(const KRegularSpec& spec) {
  const std::size_t n = spec.n();
  std::vector<std::vector<std::pair<std::size_t, double>>> edges(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& idx = spec.index_lists[i];
    for (std::size_t t = 1; t < idx.size(); ++t) {
      // tau_{idx[t]} = s_t s_0 tau_{idx[0]}
      const double rel = spec.signs[i][t] * spec.signs[i][0];
      edges[idx[0]].emplace_back(idx[t], rel);
      edges[idx[t]].emplace_back(idx[0], rel);
    }
  }
  DenseVector tau(n, 0.0);
  for (std::size_t root = 0; root < n; ++root) {
    if (tau[root] != 0.0) continue;
    tau[root] = -1.0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t c = queue.front();
      queue.pop_front();
      for (auto [d, rel] : edges[c]) {
        const double want = rel * tau[c];
        if (tau[d] == 0.0) {
          tau[d] = want;
          queue.push_back(d);
        } else if (tau[d] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return tau;
}

DetectionCheck check_k_regular(const DenseMatrix& a, const NormQuery& query, double eps) {
  if (!(query.q == query.r)) {
    return miss(ClassKind::kKRegular, "certified only for q = r");
  }
  if (!a.is_square()) return miss(ClassKind::kKRegular, "not square");
  const std::size_t n = a.rows();
  KRegularSpec spec{0, std::vector<std::vector<std::size_t>>(n),
                    std::vector<std::vector<double>>(n), DenseVector(n, 1.0)};
  bool has_negative = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = unit_entry(a(i, j), eps);
      if (!e) return miss(ClassKind::kKRegular, "entry outside {0, +-1}");
      if (*e == 0.0) continue;
      has_negative = has_negative || *e < 0.0;
      spec.index_lists[i].push_back(j);
      spec.signs[i].push_back(*e);
    }
  }
  spec.k = spec.index_lists[0].size();
  if (has_negative) {
    auto tau = coherent_signs(spec);
    if (!tau) return miss(ClassKind::kKRegular, "signs admit no coherent sign vector");
    spec.tau = std::move(*tau);
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    return miss(ClassKind::kKRegular, e.what());
  }
  return hit(ClassKind::kKRegular,
             has_negative ? "signed k-regular pattern" : "0/1 k-regular pattern",
             std::move(spec));
}

DetectionCheck check_sign_row(const DenseMatrix& a, const NormQuery& query,
                              const DetectionTolerances& tol) {
  if (!query.q.at_least(2.0) || !query.r.at_least(2.0)) {
    return miss(ClassKind::kSignRowOrthonormal, "certified only for q, r >= 2");
  }
  if (!a.is_square() || !is_orthonormal(a, tol.orthonormal)) {
    return miss(ClassKind::kSignRowOrthonormal, "not square orthonormal");
  }
  const double level = 1.0 / std::sqrt(static_cast<double>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    if (std::all_of(row.begin(), row.end(), [&](double v) {
          return std::abs(std::abs(v) - level) <= tol.entry;
        })) {
      DenseVector tau(row.size());
      std::transform(row.begin(), row.end(), tau.begin(), [](double v) { return sign(v); });
      return hit(ClassKind::kSignRowOrthonormal,
                 "orthonormal with sign row " + std::to_string(i),
                 SignRowPayload{i, std::move(tau)});
    }
  }
  return miss(ClassKind::kSignRowOrthonormal, "no row in {-1,+1}/sqrt(n)");
}

DetectionCheck check_scaled_orthogonal(const DenseMatrix& a, const NormQuery& query,
                                       const DetectionTolerances& tol) {
  if (!query.q.at_least(2.0) || !query.r.at_least(2.0)) {
    return miss(ClassKind::kScaledOrthogonal, "certified only for q, r >= 2");
  }
  if (!a.is_square()) return miss(ClassKind::kScaledOrthogonal, "not square");
  const std::size_t n = a.cols();
  const Exponent two(2.0);
  DenseVector lambda(n);
  for (std::size_t j = 0; j < n; ++j) {
    lambda[j] = vector_norm(a.column(j), two);
    if (!(lambda[j] > 0.0)) {
      return miss(ClassKind::kScaledOrthogonal, "zero column; U is not recoverable");
    }
  }
  DenseMatrix u = DenseMatrix::from_function(
      n, n, [&](std::size_t i, std::size_t j) { return a(i, j) / lambda[j]; });
  if (!is_orthonormal(u, tol.orthonormal)) {
    return miss(ClassKind::kScaledOrthogonal, "A Lambda^{-1} is not orthonormal");
  }
  for (std::size_t i = 0; i < n; ++i) {
    ScaledOrthogonalSpec spec = ScaledOrthogonalSpec::make(u, i, query.q);
    const bool matches = std::equal(
        spec.lambda.begin(), spec.lambda.end(), lambda.begin(), [&](double want, double got) {
          return std::abs(want - got) <= tol.orthonormal * std::max(1.0, want);
        });
    if (matches) {
      return hit(ClassKind::kScaledOrthogonal,
                 "column norms match row " + std::to_string(i) + " of U",
                 std::move(spec));
    }
  }
  return miss(ClassKind::kScaledOrthogonal, "column norms match no row of U for this q");
}

DetectionCheck check_one_to_r(const DenseMatrix& a, const NormQuery& query) {
  if (!(query.q == Exponent(1.0))) return miss(ClassKind::kOneToR, "q is not 1");
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double v = vector_norm(a.column(j), query.r);
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }
  return hit(ClassKind::kOneToR, "q = 1", OneToRPayload{best});
}

}  // namespace

std::vector<ClassCertificate> DetectionReport::matches() const {
  std::vector<ClassCertificate> out;
  for (const auto& c : checks) {
    if (c.matched) out.push_back(*c.certificate);
  }
  return out;
}

bool DetectionReport::empty() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const DetectionCheck& c) { return c.matched; });
}

bool is_orthonormal(const DenseMatrix& a, double eps) {
  return linalg::gram_defect(a) <= eps;
}

std::optional<RankOneFactors> rank_one_factor(const DenseMatrix& a, double eps) {
  const linalg::Svd s = linalg::svd(a);
  const double s1 = s.singular_values.front();
  if (s1 == 0.0) {
    return RankOneFactors{DenseVector(a.rows(), 0.0), unit_vector(a.cols(), 0)};
  }
  if (s.singular_values.size() > 1 && s.singular_values[1] / s1 > eps) {
    return std::nullopt;
  }
  DenseVector u = s.u.column(0);
  DenseVector v = s.v.column(0);
  std::size_t lead = 0;
  for (std::size_t j = 1; j < v.size(); ++j) {
    if (std::abs(v[j]) > std::abs(v[lead])) lead = j;
  }
  const double flip = v[lead] < 0.0 ? -1.0 : 1.0;
  for (double& x : u) x *= flip * s1;
  for (double& x : v) x *= flip;
  return RankOneFactors{std::move(u), std::move(v)};
}

DetectionReport detect(const DenseMatrix& a, const NormQuery& query) {
  DetectionReport report;
  const DetectionTolerances& tol = report.tolerances_used;
  report.checks.push_back(check_diagonal(a));
  report.checks.push_back(check_rank_one(a, tol.rank_one));
  report.checks.push_back(check_k_regular(a, query, tol.entry));
  report.checks.push_back(check_sign_row(a, query, tol));
  report.checks.push_back(check_scaled_orthogonal(a, query, tol));
  report.checks.push_back(check_one_to_r(a, query));
  return report;
}

namespace {

/// The matrix a structural payload fully determines, when it does.
std::optional<DenseMatrix> described_matrix(const ClassCertificate& certificate) {
  return std::visit(
      [](const auto& payload) -> std::optional<DenseMatrix> {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, DiagonalPayload>) {
          return DenseMatrix::diagonal(payload.diagonal);
        } else if constexpr (std::is_same_v<T, RankOneFactors>) {
          return DenseMatrix::from_function(
              payload.u.size(), payload.v.size(),
              [&](std::size_t i, std::size_t j) { return payload.u[i] * payload.v[j]; });
        } else if constexpr (std::is_same_v<T, VandermondeSpec>) {
          return vandermonde_build(payload, NormQuery{payload.q, payload.q});
        } else if constexpr (std::is_same_v<T, SvdClassSpec> ||
                             std::is_same_v<T, KRegularSpec> ||
                             std::is_same_v<T, ScaledOrthogonalSpec> ||
                             std::is_same_v<T, OrthogonalSvdSpec>) {
          return payload.assemble();
        } else if constexpr (std::is_same_v<T, ShearPayload>) {
          return shear_matrix(payload.gamma, payload.n);
        } else if constexpr (std::is_same_v<T, CompositeShearPayload>) {
          return payload.a;
        } else {
          return std::nullopt;
        }
      },
      certificate.payload);
}

void require_describes(const DenseMatrix& a, const ClassCertificate& certificate) {
  const auto described = described_matrix(certificate);
  if (!described) return;
  if (described->rows() != a.rows() || described->cols() != a.cols()) {
    fail(ErrorKind::kCertificateMismatch, "witness describes a matrix of another shape");
  }
  double scale = 1.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) scale = std::max(scale, std::abs(a(i, j)));
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (std::abs((*described)(i, j) - a(i, j)) > kFeasibilityTol * scale) {
        fail(ErrorKind::kCertificateMismatch,
             "witness does not reproduce entry (" + std::to_string(i) + ", " +
                 std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

ExactResult solve_exact(const ClassCertificate& certificate, const DenseMatrix& a,
                        const NormQuery& query) {
  require_describes(a, certificate);
  ExactResult result = std::visit(
      [&](const auto& payload) -> ExactResult {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, DiagonalPayload>) {
          return diagonal_norm(payload.diagonal, query);
        } else if constexpr (std::is_same_v<T, RankOneFactors>) {
          return rank_one_norm(payload, query);
        } else if constexpr (std::is_same_v<T, VandermondeSpec>) {
          return vandermonde_norm(payload, query);
        } else if constexpr (std::is_same_v<T, SignRowPayload>) {
          if (payload.row >= a.rows() || payload.tau.size() != a.cols()) {
            fail(ErrorKind::kCertificateMismatch, "sign-row witness does not fit the matrix");
          }
          const double level = 1.0 / std::sqrt(static_cast<double>(a.cols()));
          for (std::size_t j = 0; j < a.cols(); ++j) {
            if (std::abs(a(payload.row, j) - payload.tau[j] * level) > kEntryTol) {
              fail(ErrorKind::kCertificateMismatch,
                   "row " + std::to_string(payload.row) + " is not tau / sqrt(n)");
            }
          }
          return sign_row_orthonormal_norm(a, query);
        } else if constexpr (std::is_same_v<T, SvdClassSpec>) {
          return svd_class_norm(payload, query);
        } else if constexpr (std::is_same_v<T, ShearPayload>) {
          return shear_norm(payload.gamma, payload.n, query);
        } else if constexpr (std::is_same_v<T, CompositeShearPayload>) {
          ExactResult r = composite_shear_norm(payload.b_spec, query);
          const double solved = std::get<CompositeShearPayload>(r.certificate.payload).gamma;
          if (std::abs(solved - payload.gamma) > kEntryTol * std::max(1.0, solved)) {
            fail(ErrorKind::kCertificateMismatch,
                 "witness gamma differs from the solved shear parameter");
          }
          return r;
        } else if constexpr (std::is_same_v<T, KRegularSpec>) {
          return k_regular_norm(payload, query);
        } else if constexpr (std::is_same_v<T, ScaledOrthogonalSpec>) {
          return scaled_orthogonal_norm(payload, query);
        } else if constexpr (std::is_same_v<T, OrthogonalSvdSpec>) {
          return orthogonal_svd_norm(payload, query);
        } else {
          if (!(query.q == Exponent(1.0))) {
            fail(ErrorKind::kNotInClass, "1 -> r formula needs q = 1");
          }
          ExactResult r = one_to_r_norm(a, query.r);
          if (std::get<OneToRPayload>(r.certificate.payload).column != payload.column) {
            fail(ErrorKind::kCertificateMismatch, "witness column is not the largest column");
          }
          return r;
        }
      },
      certificate.payload);
  verify_certificate(a, query, result.value, result.maximizer);
  return result;
}

ExactResult exact_from_detection(const DenseMatrix& a, const NormQuery& query,
                                 const DetectionReport& report) {
  std::string reasons;
  for (const auto& check : report.checks) {
    if (!check.matched) continue;
    try {
      return solve_exact(*check.certificate, a, query);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNotInClass &&
          e.kind() != ErrorKind::kUnsupportedExponent &&
          e.kind() != ErrorKind::kCertificateMismatch) {
        throw;
      }
      reasons += std::string(to_string(check.kind)) + ": " + e.what() + "; ";
    }
  }
  fail(ErrorKind::kNotInClass,
       reasons.empty() ? "no certified class matches this matrix"
                       : "matched classes failed: " + reasons);
}

std::string_view to_string(DualityLeg leg) {
  return leg == DualityLeg::kDirect ? "direct" : "transpose";
}

GrothendieckResult grothendieck_value(const DenseMatrix& a, const Exponent& p,
                                      const Exponent& q) {
  const NormQuery direct{q, p.conjugate()};
  try {
    ExactResult r = exact_from_detection(a, direct, detect(a, direct));
    return GrothendieckResult{r.value, DualityLeg::kDirect, direct, std::move(r)};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNotInClass) throw;
  }
  const DenseMatrix at = a.transpose();
  const NormQuery dual{p, q.conjugate()};
  ExactResult r = exact_from_detection(at, dual, detect(at, dual));
  return GrothendieckResult{r.value, DualityLeg::kTranspose, dual, std::move(r)};
}

}  // namespace opnorm
