#include "opnorm/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opnorm/error.hpp"

namespace opnorm {
namespace {

void require_shape(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::kShape, what);
}

bool is_permutation_of(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t k : perm) {
    if (k >= n || seen[k]) return false;
    seen[k] = true;
  }
  return true;
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_shape(rows_ >= 1 && cols_ >= 1, "matrix must have rows, cols >= 1");
  require_shape(entries_.size() == rows_ * cols_,
                "entry count " + std::to_string(entries_.size()) +
                    " does not match " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  for (double v : entries_) {
    if (!std::isfinite(v)) {
      fail(ErrorKind::kNonFinite, "matrix entries must be finite");
    }
  }
}

DenseMatrix::DenseMatrix(
    std::initializer_list<std::initializer_list<double>> rows)
    : DenseMatrix([&] {
        const std::size_t m = rows.size();
        const std::size_t n = m == 0 ? 0 : rows.begin()->size();
        std::vector<double> data;
        data.reserve(m * n);
        for (const auto& r : rows) {
          require_shape(r.size() == n, "ragged initializer rows");
          data.insert(data.end(), r.begin(), r.end());
        }
        return DenseMatrix(m, n, std::move(data));
      }()) {}

DenseMatrix DenseMatrix::from_function(
    std::size_t rows, std::size_t cols,
    const std::function<double(std::size_t, std::size_t)>& entry) {
  std::vector<double> data(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) data[i * cols + j] = entry(i, j);
  }
  return DenseMatrix(rows, cols, std::move(data));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  return from_function(n, n, [](std::size_t i, std::size_t j) {
    return i == j ? 1.0 : 0.0;
  });
}

DenseMatrix DenseMatrix::zeros(std::size_t rows, std::size_t cols) {
  return DenseMatrix(rows, cols, std::vector<double>(rows * cols, 0.0));
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
  return from_function(diag.size(), diag.size(),
                       [&](std::size_t i, std::size_t j) {
                         return i == j ? diag[i] : 0.0;
                       });
}

DenseMatrix DenseMatrix::from_columns(const std::vector<DenseVector>& columns) {
  require_shape(!columns.empty(), "no columns");
  const std::size_t m = columns.front().size();
  for (const auto& c : columns) require_shape(c.size() == m, "ragged columns");
  return from_function(m, columns.size(), [&](std::size_t i, std::size_t j) {
    return columns[j][i];
  });
}

DenseVector DenseMatrix::column(std::size_t j) const {
  DenseVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  return from_function(cols_, rows_, [this](std::size_t i, std::size_t j) {
    return (*this)(j, i);
  });
}

DenseMatrix DenseMatrix::scaled(double c) const {
  std::vector<double> data(entries_);
  for (double& v : data) v *= c;
  return DenseMatrix(rows_, cols_, std::move(data));
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

double vector_norm(std::span<const double> v, const Exponent& p) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (p.is_inf() || scale == 0.0) return scale;
  const double s = p.value();
  double sum = 0.0;
  for (double x : v) sum += std::pow(std::abs(x) / scale, s);
  return scale * std::pow(sum, 1.0 / s);
}

DenseVector apply(const DenseMatrix& a, std::span<const double> x) {
  require_shape(x.size() == a.cols(),
                "apply: vector length " + std::to_string(x.size()) +
                    " != cols " + std::to_string(a.cols()));
  DenseVector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += row[j] * x[j];
    out[i] = acc;
  }
  return out;
}

DenseVector apply_transpose(const DenseMatrix& a, std::span<const double> y) {
  require_shape(y.size() == a.rows(),
                "apply_transpose: vector length " + std::to_string(y.size()) +
                    " != rows " + std::to_string(a.rows()));
  DenseVector out(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += row[j] * y[i];
  }
  return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  require_shape(a.cols() == b.rows(), "multiply: inner dimensions differ");
  std::vector<double> data(a.rows() * b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        data[i * b.cols() + j] += aik * b(k, j);
      }
    }
  }
  return DenseMatrix(a.rows(), b.cols(), std::move(data));
}

DenseMatrix permute(const DenseMatrix& a, std::span<const std::size_t> row_perm,
                    std::span<const std::size_t> col_perm) {
  require_shape(is_permutation_of(row_perm, a.rows()),
                "row_perm is not a permutation of the row indices");
  require_shape(is_permutation_of(col_perm, a.cols()),
                "col_perm is not a permutation of the column indices");
  return DenseMatrix::from_function(
      a.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
        return a(row_perm[i], col_perm[j]);
      });
}

DenseVector duality_map(std::span<const double> y, const Exponent& s) {
  DenseVector out(y.size(), 0.0);
  if (s.is_inf()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < y.size(); ++i) {
      if (std::abs(y[i]) > std::abs(y[best])) best = i;
    }
    if (!y.empty()) out[best] = sign(y[best]);
    return out;
  }
  const double e = s.value() - 1.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] = e == 0.0 ? sign(y[i]) : sign(y[i]) * std::pow(std::abs(y[i]), e);
  }
  return out;
}

DenseVector unit_vector(std::size_t n, std::size_t k) {
  DenseVector e(n, 0.0);
  e.at(k) = 1.0;
  return e;
}

}  // namespace opnorm
