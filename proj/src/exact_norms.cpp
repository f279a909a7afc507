#include "opnorm/exact_norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opnorm/error.hpp"
#include "opnorm/linalg.hpp"
#include "opnorm/scalar_solvers.hpp"

namespace opnorm {
namespace {

std::size_t argmax_abs(std::span<const double> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  return best;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// n^{(q-2)/(2q)} = n^{1/2 - 1/q}, valid for q = inf as well.
double sign_vector_gain(std::size_t n, const Exponent& q) {
  return std::pow(static_cast<double>(n), 0.5 - q.reciprocal());
}

DenseVector scaled_sign_vector(std::span<const double> tau, const Exponent& q) {
  const double scale = std::pow(static_cast<double>(tau.size()), -q.reciprocal());
  DenseVector x(tau.begin(), tau.end());
  for (double& v : x) v *= scale;
  return x;
}

void require_two_or_more(const NormQuery& query, const char* what) {
  if (!query.q.at_least(2.0) || !query.r.at_least(2.0)) {
    fail(ErrorKind::kNotInClass, std::string(what) +
                                     " is certified only for q >= 2 and r >= 2 (got " +
                                     query.to_string() + ")");
  }
}

ExactResult certified(const DenseMatrix& a, const NormQuery& query, double value,
                      DenseVector x, ClassCertificate certificate,
                      std::string citation) {
  verify_certificate(a, query, value, x);
  return ExactResult{value, std::move(x), std::move(certificate),
                     std::move(citation)};
}

// Per-row split exponents for q and a conjugate pair (p', q').
struct RowSplit {
  double kappa;    // exponent of the weights a~_j = |a_ij|^kappa
  double kappa_t;  // the row norm index
};

RowSplit row_split(const Exponent& q, const Exponent& pp, const Exponent& qp) {
  const double qv = q.value();
  if (qp == q) return {0.0, pp.value()};
  if (pp.is_inf()) {
    return {1.0, qp.value() * qv / (qv - qp.value())};
  }
  const double t = qp.value() * qv / (qv - qp.value());
  const double kappa = pp.value() / (pp.value() + t);
  return {kappa, kappa * t};
}

void check_pairs(const DenseMatrix& a, const NormQuery& query,
                 std::span<const Exponent> p_prime,
                 std::span<const Exponent> q_prime) {
  if (query.q.is_inf() || !(query.q.value() > 1.0)) {
    fail(ErrorKind::kUnsupportedExponent,
         "row-split bound requires 1 < q < inf, got " + query.q.to_string());
  }
  if (p_prime.size() + 1 != a.rows() || q_prime.size() + 1 != a.rows()) {
    fail(ErrorKind::kPreconditionViolation,
         "need one (p', q') pair per row after the first");
  }
  for (double v : a.row(0)) {
    if (v == 0.0) {
      fail(ErrorKind::kPreconditionViolation, "first row has a zero entry");
    }
  }
  for (std::size_t i = 0; i < q_prime.size(); ++i) {
    if (q_prime[i] > query.q) {
      fail(ErrorKind::kPreconditionViolation,
           "q'_" + std::to_string(i + 1) + " exceeds q");
    }
    const double sum = p_prime[i].reciprocal() + q_prime[i].reciprocal();
    if (std::abs(sum - 1.0) > 1e-12) {
      fail(ErrorKind::kPreconditionViolation,
           "p'_" + std::to_string(i + 1) + ", q'_" + std::to_string(i + 1) +
               " are not conjugate");
    }
  }
}

// The first-row Hoelder maximizer sgn(a_j)|a_j|^{p-1} / ||a||_p^{p-1}.
DenseVector holder_maximizer(std::span<const double> v, const Exponent& q) {
  const std::size_t n = v.size();
  const Exponent dual = q.conjugate();
  const double m = max_abs(v);
  if (m == 0.0) return unit_vector(n, 0);
  DenseVector x(n, 0.0);
  if (dual.is_inf()) {  // q = 1
    const std::size_t k = argmax_abs(v);
    x[k] = sign(v[k]);
    return x;
  }
  if (q.is_inf()) {  // dual = 1
    for (std::size_t j = 0; j < n; ++j) x[j] = sign(v[j]);
    return x;
  }
  const double d = dual.value();
  double sum = 0.0;
  for (double vj : v) sum += std::pow(std::abs(vj) / m, d);
  const double denom = std::pow(sum, q.reciprocal());
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = sign(v[j]) * std::pow(std::abs(v[j]) / m, d - 1.0) / denom;
  }
  return x;
}

}  // namespace

double certificate_defect(const DenseMatrix& a, const NormQuery& query,
                          double value, std::span<const double> x) {
  const double x_norm = vector_norm(x, query.q);
  const double image = vector_norm(opnorm::apply(a, x), query.r);
  const double feas = std::abs(x_norm - 1.0);
  const double attain =
      value == 0.0 ? std::abs(image) : std::abs(image - value) / value;
  return std::max(feas, attain);
}

void verify_certificate(const DenseMatrix& a, const NormQuery& query, double value,
                        std::span<const double> x) {
  if (x.size() != a.cols()) {
    fail(ErrorKind::kCertificateMismatch, "maximizer has the wrong length");
  }
  const double x_norm = vector_norm(x, query.q);
  if (std::abs(x_norm - 1.0) > kFeasibilityTol) {
    fail(ErrorKind::kCertificateMismatch,
         "maximizer has ||x||_q = " + std::to_string(x_norm));
  }
  const double image = vector_norm(opnorm::apply(a, x), query.r);
  const double defect =
      value == 0.0 ? std::abs(image) : std::abs(image - value) / value;
  if (defect > kFeasibilityTol) {
    fail(ErrorKind::kCertificateMismatch,
         "||A x*||_r = " + std::to_string(image) + " but claimed value is " +
             std::to_string(value));
  }
}

ExactResult diagonal_norm(std::span<const double> diag, const NormQuery& query) {
  if (diag.empty()) fail(ErrorKind::kShape, "empty diagonal");
  const DenseMatrix a = DenseMatrix::diagonal(diag);
  const std::size_t n = diag.size();
  ClassCertificate cert{ClassKind::kDiagonal,
                        DiagonalPayload{DenseVector(diag.begin(), diag.end())}};
  const double m = max_abs(diag);
  if (query.q <= query.r) {
    const std::size_t k = argmax_abs(diag);
    return certified(a, query, m, unit_vector(n, k), std::move(cert),
                     "diagonal, q <= r: max_i |a_i|");
  }
  if (m == 0.0) {
    return certified(a, query, 0.0, unit_vector(n, 0), std::move(cert),
                     "diagonal: zero matrix");
  }
  // q > r, so r is finite. With q = inf the exponent qr/(q-r) tends to r.
  const double r = query.r.value();
  double power, x_exp;
  if (query.q.is_inf()) {
    power = r;
    x_exp = 0.0;
  } else {
    const double q = query.q.value();
    power = q * r / (q - r);
    x_exp = r / (q - r);
  }
  double sum = 0.0;
  for (double v : diag) sum += std::pow(std::abs(v) / m, power);
  const double value = m * std::pow(sum, 1.0 / r - query.q.reciprocal());
  const double denom = std::pow(sum, query.q.reciprocal());
  DenseVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::pow(std::abs(diag[i]) / m, x_exp) / denom;
  }
  return certified(a, query, value, std::move(x), std::move(cert),
                   "diagonal, q > r: (sum |a_i|^{qr/(q-r)})^{1/r-1/q}");
}

ExactResult rank_one_norm(const RankOneFactors& factors, const NormQuery& query) {
  const auto& u = factors.u;
  const auto& v = factors.v;
  if (u.empty() || v.empty()) fail(ErrorKind::kShape, "empty rank-one factor");
  const DenseMatrix a = DenseMatrix::from_function(
      u.size(), v.size(), [&](std::size_t i, std::size_t j) { return u[i] * v[j]; });
  ClassCertificate cert{ClassKind::kRankOne, factors};
  if (max_abs(u) == 0.0 || max_abs(v) == 0.0) {
    return certified(a, query, 0.0, unit_vector(v.size(), 0), std::move(cert),
                     "rank-one: zero factor");
  }
  const double value = vector_norm(u, query.r) * vector_norm(v, query.q_star());
  return certified(a, query, value, holder_maximizer(v, query.q), std::move(cert),
                   "rank-one: ||u||_r ||v||_{q*}");
}

double nonzero_row_upper_bound(const DenseMatrix& a, const NormQuery& query,
                               std::span<const Exponent> p_prime,
                               std::span<const Exponent> q_prime) {
  check_pairs(a, query, p_prime, q_prime);
  const Exponent p = query.q_star();
  DenseVector terms;
  terms.reserve(a.rows());
  terms.push_back(vector_norm(a.row(0), p));
  for (std::size_t i = 1; i < a.rows(); ++i) {
    const RowSplit split = row_split(query.q, p_prime[i - 1], q_prime[i - 1]);
    const auto row = a.row(i);
    // b_ij = a_ij / a~_j with a~_j = |a_ij|^kappa (0 where a_ij = 0).
    DenseVector b(row.size(), 0.0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0.0) {
        b[j] = row[j] / std::pow(std::abs(row[j]), split.kappa);
      }
    }
    const double b_norm = vector_norm(b, p_prime[i - 1]);
    const double y_bound =
        split.kappa == 0.0
            ? 1.0
            : std::pow(vector_norm(row, Exponent(split.kappa_t)), split.kappa);
    terms.push_back(b_norm * y_bound);
  }
  return vector_norm(terms, query.r);
}

double row_profile_residual(const DenseMatrix& a, const NormQuery& query,
                            std::span<const Exponent> p_prime,
                            std::span<const Exponent> q_prime) {
  check_pairs(a, query, p_prime, q_prime);
  const double p = query.q_star().value();
  auto profile = [](std::span<const double> row, double s) {
    double total = 0.0;
    for (double v : row) total += std::pow(std::abs(v), s);
    DenseVector out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      out[j] = sign(row[j]) * std::pow(std::abs(row[j]), s) / total;
    }
    return out;
  };
  const DenseVector first = profile(a.row(0), p);
  double worst = 0.0;
  for (std::size_t i = 1; i < a.rows(); ++i) {
    const RowSplit split = row_split(query.q, p_prime[i - 1], q_prime[i - 1]);
    const DenseVector other = profile(a.row(i), split.kappa_t);
    for (std::size_t j = 0; j < first.size(); ++j) {
      worst = std::max(worst, std::abs(first[j] - other[j]));
    }
  }
  return worst;
}

DenseMatrix vandermonde_build(const VandermondeSpec& spec, const NormQuery& query) {
  if (!(query.q == spec.q)) {
    fail(ErrorKind::kPreconditionViolation,
         "vandermonde spec was built for q = " + spec.q.to_string() +
             ", query has q = " + query.q.to_string());
  }
  const std::vector<double> alphas = spec.alphas();
  const std::size_t n = spec.a1.size();
  std::vector<double> data(spec.a1.begin(), spec.a1.end());
  data.reserve((alphas.size() + 1) * n);
  for (double alpha : alphas) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
      fail(ErrorKind::kConstruction, "non-positive alpha");
    }
    for (double v : spec.a1) {
      const double entry = sign(v) * std::pow(std::abs(v), 1.0 / alpha);
      if (!std::isfinite(entry)) fail(ErrorKind::kConstruction, "non-finite power");
      data.push_back(entry);
    }
  }
  return DenseMatrix(alphas.size() + 1, n, std::move(data));
}

ExactResult vandermonde_norm(const VandermondeSpec& spec, const NormQuery& query) {
  const DenseMatrix a = vandermonde_build(spec, query);
  const Exponent p = query.q_star();
  const double pv = p.value();
  const double qv = query.q.value();
  const double a1_norm = vector_norm(spec.a1, p);
  DenseVector terms{a1_norm};
  for (std::size_t k = 0; k < spec.q_prime.size(); ++k) {
    const RowSplit split = row_split(query.q, spec.p_prime[k], spec.q_prime[k]);
    const auto row = a.row(k + 1);
    DenseVector b(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      b[j] = row[j] / std::pow(std::abs(row[j]), split.kappa);
    }
    const double qp = spec.q_prime[k].value();
    const double tail = std::pow(a1_norm, pv * (qv - qp) / (qp * qv));
    terms.push_back(vector_norm(b, spec.p_prime[k]) * tail);
  }
  const double value = vector_norm(terms, query.r);
  return certified(a, query, value, holder_maximizer(spec.a1, query.q),
                   ClassCertificate{ClassKind::kVandermonde, spec},
                   "powers of a non-vanishing row: row-split Hoelder bound attained");
}

ExactResult sign_row_orthonormal_norm(const DenseMatrix& a, const NormQuery& query) {
  require_two_or_more(query, "sign-row orthonormal class");
  if (!a.is_square()) fail(ErrorKind::kNotInClass, "matrix is not square");
  if (linalg::gram_defect(a) > kOrthonormalTol) {
    fail(ErrorKind::kNotInClass, "matrix is not orthonormal");
  }
  const std::size_t n = a.cols();
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    const bool sign_row = std::all_of(row.begin(), row.end(), [&](double v) {
      return std::abs(std::abs(v) - inv_sqrt_n) <= kEntryTol;
    });
    if (!sign_row) continue;
    DenseVector tau(n);
    for (std::size_t j = 0; j < n; ++j) tau[j] = sign(row[j]);
    const double value = sign_vector_gain(n, query.q);
    DenseVector x = scaled_sign_vector(tau, query.q);
    return certified(a, query, value, std::move(x),
                     ClassCertificate{ClassKind::kSignRowOrthonormal,
                                      SignRowPayload{i, std::move(tau)}},
                     "orthonormal with a sign row: n^{(q-2)/(2q)}");
  }
  fail(ErrorKind::kNotInClass, "no row with all entries in {-1,+1}/sqrt(n)");
}

double hadamard_upper_bound(const DenseMatrix& a, const NormQuery& query) {
  if (!query.q.at_least(2.0) || !query.r.at_least(2.0)) {
    fail(ErrorKind::kUnsupportedExponent,
         "row-norm bound requires q >= 2 and r >= 2, got " + query.to_string());
  }
  const Exponent two(2.0);
  const Exponent p = query.q_star();
  double row2 = 0.0;
  double rowp = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    row2 = std::max(row2, vector_norm(a.row(i), two));
    rowp = std::max(rowp, vector_norm(a.row(i), p));
  }
  const double sigma = linalg::spectral_norm(a);
  const double rr = query.r.reciprocal();
  const double n = static_cast<double>(a.cols());
  const double lift = 0.5 - query.q.reciprocal();  // (q-2)/(2q)
  const double first =
      std::pow(row2, 1.0 - 2.0 * rr) * std::pow(sigma, 2.0 * rr) * std::pow(n, lift);
  const double second = std::pow(rowp, 1.0 - 2.0 * rr) * std::pow(sigma, 2.0 * rr) *
                        std::pow(n, 2.0 * lift * rr);
  return std::min(first, second);
}

ExactResult svd_class_norm(const SvdClassSpec& spec, const NormQuery& query) {
  require_two_or_more(query, "SVD class");
  spec.validate();
  const DenseMatrix a = spec.assemble();
  const double value = spec.sigma.front() * sign_vector_gain(spec.u.rows(), query.q);
  return certified(a, query, value, scaled_sign_vector(spec.tau, query.q),
                   ClassCertificate{ClassKind::kSvdClass, spec},
                   "SVD class: sigma_1 n^{(q-2)/(2q)}");
}

ExactResult shear_norm(double gamma, std::size_t n, const NormQuery& query) {
  if (n < 2) fail(ErrorKind::kPreconditionViolation, "shear needs n >= 2");
  if (!(query.q == query.r)) {
    fail(ErrorKind::kUnsupportedExponent, "shear class is certified only for q = r");
  }
  if (query.q.is_inf() || !(query.q.value() > 1.0)) {
    fail(ErrorKind::kUnsupportedExponent,
         "shear class requires 1 < q < inf, got " + query.q.to_string());
  }
  const DenseMatrix a = DenseMatrix::from_function(
      n, n, [gamma](std::size_t i, std::size_t j) {
        if (i == j) return 1.0;
        return i == 0 && j == 1 ? gamma : 0.0;
      });
  if (gamma == 0.0) {
    return certified(a, query, 1.0, unit_vector(n, 0),
                     ClassCertificate{ClassKind::kShear,
                                      ShearPayload{0.0, n, query.q, 0.0}},
                     "shear with gamma = 0: identity");
  }
  const ShearParams params = solve_shear_lambda0(gamma, query.q);
  const double q = query.q.value();
  const double p = params.p.value();
  const double lam = params.lambda0;
  const double value = std::pow(1.0 + std::pow(lam, p), 1.0 / p);
  // c = lambda^p |lambda/gamma|^q; x1 = (1+c)^{-1/q}, x2 = sgn(gamma) (c/(1+c))^{1/q}.
  const double c = std::pow(lam, p) * std::pow(lam / std::abs(gamma), q);
  DenseVector x(n, 0.0);
  x[0] = std::pow(1.0 + c, -1.0 / q);
  x[1] = sign(gamma) * std::pow(c / (1.0 + c), 1.0 / q);
  return certified(a, query, value, std::move(x),
                   ClassCertificate{ClassKind::kShear,
                                    ShearPayload{gamma, n, query.q, lam}},
                   "shear: (1 + lambda0^p)^{1/p}, lambda0 the monotone root");
}

ExactResult composite_shear_norm(const SvdClassSpec& b_spec, const NormQuery& query) {
  require_two_or_more(query, "composite shear class");
  if (query.q.is_inf()) {
    fail(ErrorKind::kUnsupportedExponent, "composite shear requires finite q");
  }
  b_spec.validate();
  const std::size_t n = b_spec.u.rows();
  if (b_spec.v.rows() != n) fail(ErrorKind::kNotInClass, "B must be square");
  for (double t : b_spec.tau) {
    if (t != 1.0) fail(ErrorKind::kNotInClass, "composite shear needs tau = all ones");
  }
  const double sigma_min = *std::min_element(b_spec.sigma.begin(), b_spec.sigma.end());
  if (!(sigma_min > 0.0)) fail(ErrorKind::kNotInvertible, "B is singular");

  const double q = query.q.value();
  const double gamma = solve_composite_gamma(n, query.q);
  const double xi = composite_xi(gamma, n, q);
  const DenseMatrix b = b_spec.assemble();
  const DenseMatrix c = DenseMatrix::from_function(
      n, n, [gamma](std::size_t i, std::size_t j) {
        if (i == j) return 1.0;
        return i == 0 && j == 1 ? gamma : 0.0;
      });
  const DenseMatrix a = multiply(b, c);
  const double value = b_spec.sigma.front() * sign_vector_gain(n, query.q) / xi;
  // x* = (1/xi) C^{-1} y*, y* = n^{-1/q} 1, C^{-1} = I - gamma e1 e2^T.
  const double y = std::pow(static_cast<double>(n), -1.0 / q);
  DenseVector x(n, y / xi);
  x[0] = (1.0 - gamma) * y / xi;
  return certified(a, query, value, std::move(x),
                   ClassCertificate{ClassKind::kCompositeShear,
                                    CompositeShearPayload{b_spec, gamma, xi, b, c, a}},
                   "SVD class times shear: sigma_1 n^{(q-2)/(2q)} / xi");
}

ExactResult k_regular_norm(const KRegularSpec& spec, const NormQuery& query) {
  if (!(query.q == query.r)) {
    fail(ErrorKind::kUnsupportedExponent, "k-regular class is certified only for q = r");
  }
  spec.validate();
  const DenseMatrix a = spec.assemble();
  const double value = static_cast<double>(spec.k);
  return certified(a, query, value, scaled_sign_vector(spec.tau, query.q),
                   ClassCertificate{ClassKind::kKRegular, spec},
                   spec.is_signed() ? "signed k-regular: k at the coherent sign vector"
                                    : "k-regular 0/1: k");
}

ExactResult scaled_orthogonal_norm(const ScaledOrthogonalSpec& spec,
                                   const NormQuery& query) {
  require_two_or_more(query, "scaled orthogonal class");
  if (!spec.u.is_square() || spec.row_index >= spec.u.rows() ||
      spec.lambda.size() != spec.u.cols()) {
    fail(ErrorKind::kNotInClass, "malformed scaled-orthogonal spec");
  }
  if (linalg::gram_defect(spec.u) > kOrthonormalTol) {
    fail(ErrorKind::kNotInClass, "U is not orthonormal");
  }
  const auto row = spec.u.row(spec.row_index);
  const double e = 1.0 - 2.0 * query.q.reciprocal();
  for (std::size_t j = 0; j < row.size(); ++j) {
    const double expected = std::pow(std::abs(row[j]), e);
    if (std::abs(spec.lambda[j] - expected) > kEntryTol * std::max(1.0, expected)) {
      fail(ErrorKind::kNotInClass, "Lambda does not match |u_ij|^{(q-2)/q} for this q");
    }
  }
  const double x_exp = 2.0 * query.q.reciprocal();
  DenseVector x(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    x[j] = sign(row[j]) * std::pow(std::abs(row[j]), x_exp);
  }
  return certified(spec.assemble(), query, 1.0, std::move(x),
                   ClassCertificate{ClassKind::kScaledOrthogonal, spec},
                   "orthogonal times row-matched diagonal: 1");
}

ExactResult orthogonal_svd_norm(const OrthogonalSvdSpec& spec, const NormQuery& query) {
  require_two_or_more(query, "orthogonal SVD class");
  const std::size_t n = spec.v.rows();
  if (!spec.u.is_square() || !spec.v.is_square() || spec.u.rows() != n ||
      spec.sigma.size() != n || spec.sigma_v.size() != n) {
    fail(ErrorKind::kPreconditionViolation,
         "orthogonal SVD class is implemented for square n x n factors only");
  }
  if (linalg::gram_defect(spec.u) > kOrthonormalTol ||
      linalg::gram_defect(spec.v) > kOrthonormalTol) {
    fail(ErrorKind::kNotInClass, "U or V is not orthogonal");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(spec.u(i, 0) - (i == 0 ? 1.0 : 0.0)) > kEntryTol) {
      fail(ErrorKind::kNotInClass, "first column of U is not e1");
    }
  }
  const auto v1 = spec.v.row(0);
  for (double v : v1) {
    if (v == 0.0) {
      fail(ErrorKind::kSingularScaling,
           "first row of V has a zero entry; Sigma_V is not invertible");
    }
  }
  const double e = 1.0 - 2.0 * query.q.reciprocal();
  for (std::size_t j = 0; j < n; ++j) {
    const double expected = std::pow(std::abs(v1[j]), e);
    if (std::abs(spec.sigma_v[j] - expected) > kEntryTol * std::max(1.0, expected)) {
      fail(ErrorKind::kNotInClass, "Sigma_V does not match |v_1j|^{(q-2)/q} for this q");
    }
  }
  const double lead = std::abs(spec.sigma.front());
  const double largest = max_abs(spec.sigma);
  if (lead < largest) {
    fail(ErrorKind::kNotInClass,
         "the leading diagonal entry of Sigma must carry the largest magnitude");
  }
  const double x_exp = 2.0 * query.q.reciprocal();
  DenseVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = sign(v1[j]) * std::pow(std::abs(v1[j]), x_exp);
  }
  return certified(spec.assemble(), query, largest, std::move(x),
                   ClassCertificate{ClassKind::kOrthogonalSvd, spec},
                   "orthogonal SVD with row-matched scaling: max |Sigma_ii|");
}

ExactResult one_to_r_norm(const DenseMatrix& a, const Exponent& r) {
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double v = vector_norm(a.column(j), r);
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }
  return certified(a, NormQuery{Exponent(1.0), r}, best_value,
                   unit_vector(a.cols(), best),
                   ClassCertificate{ClassKind::kOneToR, OneToRPayload{best}},
                   "1 -> r: max column r-norm");
}

}  // namespace opnorm
