#include "opnorm/certificate.hpp"

#include <array>
#include <cmath>
#include <string>

#include "opnorm/error.hpp"
#include "opnorm/linalg.hpp"

namespace opnorm {
namespace {

constexpr std::array<std::pair<ClassKind, std::string_view>, 11> kNames{{
    {ClassKind::kDiagonal, "diagonal"},
    {ClassKind::kRankOne, "rank-one"},
    {ClassKind::kVandermonde, "vandermonde"},
    {ClassKind::kSignRowOrthonormal, "sign-row-orthonormal"},
    {ClassKind::kSvdClass, "svd-class"},
    {ClassKind::kShear, "shear"},
    {ClassKind::kCompositeShear, "composite-shear"},
    {ClassKind::kKRegular, "k-regular"},
    {ClassKind::kScaledOrthogonal, "scaled-orthogonal"},
    {ClassKind::kOrthogonalSvd, "orthogonal-svd"},
    {ClassKind::kOneToR, "one-to-r"},
}};

[[noreturn]] void not_in_class(const std::string& what) {
  fail(ErrorKind::kNotInClass, what);
}

}  // namespace

std::string_view to_string(ClassKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ClassKind> class_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

VandermondeSpec VandermondeSpec::make(DenseVector a1,
                                      std::vector<Exponent> q_prime,
                                      Exponent q) {
  if (q.is_inf() || !(q.value() > 1.0)) {
    fail(ErrorKind::kUnsupportedExponent,
         "vandermonde class requires 1 < q < inf, got " + q.to_string());
  }
  if (a1.empty()) fail(ErrorKind::kPreconditionViolation, "a1 is empty");
  for (double v : a1) {
    if (v == 0.0 || !std::isfinite(v)) {
      fail(ErrorKind::kPreconditionViolation,
           "a1 entries must be finite and non-zero");
    }
  }
  std::vector<Exponent> p_prime;
  p_prime.reserve(q_prime.size());
  for (const Exponent& qp : q_prime) {
    if (qp > q) {
      fail(ErrorKind::kPreconditionViolation,
           "q' = " + qp.to_string() + " exceeds q = " + q.to_string());
    }
    p_prime.push_back(qp.conjugate());
  }
  return VandermondeSpec{std::move(a1), std::move(p_prime), std::move(q_prime),
                         q};
}

std::vector<double> VandermondeSpec::alphas() const {
  const double qv = q.value();
  const double p = q.conjugate().value();
  std::vector<double> out;
  out.reserve(q_prime.size());
  for (std::size_t k = 0; k < q_prime.size(); ++k) {
    const Exponent& qp = q_prime[k];
    const Exponent& pp = p_prime[k];
    double kappa_t;
    if (qp == q) {
      kappa_t = pp.value();  // t -> inf
    } else if (pp.is_inf()) {
      kappa_t = qp.value() * qv / (qv - qp.value());  // kappa -> 1
    } else {
      const double t = qp.value() * qv / (qv - qp.value());
      const double kappa = pp.value() / (pp.value() + t);
      kappa_t = kappa * t;
    }
    out.push_back(kappa_t / p);
  }
  return out;
}

DenseMatrix SvdClassSpec::assemble() const {
  const std::size_t m = v.rows();
  const std::size_t n = u.rows();
  const DenseMatrix sigma_mat = DenseMatrix::from_function(
      m, n, [&](std::size_t i, std::size_t j) {
        return i == j && i < sigma.size() ? sigma[i] : 0.0;
      });
  return multiply(multiply(v, sigma_mat), u.transpose());
}

void SvdClassSpec::validate() const {
  if (!v.is_square() || !u.is_square()) not_in_class("U and V must be square");
  const std::size_t m = v.rows();
  const std::size_t n = u.rows();
  if (sigma.size() != std::min(m, n)) {
    not_in_class("sigma must have min(m, n) entries");
  }
  if (tau.size() != n) not_in_class("tau must have n entries");
  if (linalg::gram_defect(v) > kOrthonormalTol) not_in_class("V is not orthonormal");
  if (linalg::gram_defect(u) > kOrthonormalTol) not_in_class("U is not orthonormal");
  for (double s : sigma) {
    if (s < 0.0) not_in_class("singular values must be non-negative");
    if (s > sigma.front()) not_in_class("sigma[0] must be the largest singular value");
  }
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (tau[j] != 1.0 && tau[j] != -1.0) not_in_class("tau entries must be +-1");
    if (std::abs(u(j, 0) - tau[j] * inv_sqrt_n) > kEntryTol) {
      not_in_class("first column of U is not tau / sqrt(n)");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(v(i, 0) - (i == 0 ? 1.0 : 0.0)) > kEntryTol) {
      not_in_class("first column of V is not e1");
    }
  }
}

bool KRegularSpec::is_signed() const {
  for (const auto& row : signs) {
    for (double s : row) {
      if (s != 1.0) return true;
    }
  }
  return false;
}

DenseMatrix KRegularSpec::assemble() const {
  const std::size_t size = n();
  std::vector<double> data(size * size, 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t t = 0; t < index_lists[i].size(); ++t) {
      data[i * size + index_lists[i][t]] = signs[i][t];
    }
  }
  return DenseMatrix(size, size, std::move(data));
}

void KRegularSpec::validate() const {
  const std::size_t size = n();
  if (size == 0 || k == 0 || k > size) not_in_class("need 1 <= k <= n");
  if (signs.size() != size || tau.size() != size) {
    not_in_class("signs and tau must cover every row");
  }
  std::vector<std::size_t> column_uses(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    const auto& idx = index_lists[i];
    if (idx.size() != k || signs[i].size() != k) {
      not_in_class("row " + std::to_string(i) + " does not have k entries");
    }
    std::vector<bool> seen(size, false);
    double row_sign = 0.0;
    for (std::size_t t = 0; t < k; ++t) {
      if (idx[t] >= size || seen[idx[t]]) {
        not_in_class("row " + std::to_string(i) + " has a bad column index");
      }
      seen[idx[t]] = true;
      ++column_uses[idx[t]];
      if (signs[i][t] != 1.0 && signs[i][t] != -1.0) {
        not_in_class("entries must be +-1");
      }
      const double s = signs[i][t] * tau[idx[t]];
      if (row_sign == 0.0) row_sign = s;
      if (s != row_sign) {
        not_in_class("tau is not coherent with the signs of row " +
                     std::to_string(i));
      }
    }
  }
  for (std::size_t j = 0; j < size; ++j) {
    if (column_uses[j] != k) {
      not_in_class("column " + std::to_string(j) + " is used " +
                   std::to_string(column_uses[j]) + " times, expected k");
    }
  }
  for (double t : tau) {
    if (t != 1.0 && t != -1.0) not_in_class("tau entries must be +-1");
  }
}

ScaledOrthogonalSpec ScaledOrthogonalSpec::make(DenseMatrix u, std::size_t row_index,
                                                const Exponent& q) {
  if (!u.is_square() || row_index >= u.rows()) {
    fail(ErrorKind::kPreconditionViolation, "U must be square and row in range");
  }
  const double e = 1.0 - 2.0 * q.reciprocal();  // (q - 2) / q
  DenseVector lambda(u.cols());
  for (std::size_t j = 0; j < u.cols(); ++j) {
    lambda[j] = std::pow(std::abs(u(row_index, j)), e);
  }
  return ScaledOrthogonalSpec{std::move(u), row_index, std::move(lambda)};
}

DenseMatrix ScaledOrthogonalSpec::assemble() const {
  return DenseMatrix::from_function(u.rows(), u.cols(),
                                    [this](std::size_t i, std::size_t j) {
                                      return u(i, j) * lambda[j];
                                    });
}

OrthogonalSvdSpec OrthogonalSvdSpec::make(DenseMatrix u, DenseVector sigma,
                                          DenseMatrix v, const Exponent& q) {
  const double e = 1.0 - 2.0 * q.reciprocal();
  DenseVector sigma_v(v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j) {
    sigma_v[j] = std::pow(std::abs(v(0, j)), e);
  }
  return OrthogonalSvdSpec{std::move(u), std::move(sigma), std::move(v),
                           std::move(sigma_v)};
}

DenseMatrix OrthogonalSvdSpec::assemble() const {
  const DenseMatrix s = DenseMatrix::diagonal(sigma);
  const DenseMatrix sv = DenseMatrix::diagonal(sigma_v);
  return multiply(multiply(multiply(u, s), v), sv);
}

}  // namespace opnorm
