#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "opnorm/exponent.hpp"

namespace opnorm {

using DenseVector = std::vector<double>;

/// Real m x n matrix, row-major, finite entries, m, n >= 1. Immutable once
/// built; use from_function or the data constructor to assemble one.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix from_function(
      std::size_t rows, std::size_t cols,
      const std::function<double(std::size_t, std::size_t)>& entry);
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix zeros(std::size_t rows, std::size_t cols);
  static DenseMatrix diagonal(std::span<const double> diag);
  static DenseMatrix from_columns(const std::vector<DenseVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }
  DenseVector column(std::size_t j) const;
  std::span<const double> entries() const noexcept { return entries_; }

  DenseMatrix transpose() const;
  DenseMatrix scaled(double c) const;

  /// Largest absolute entry.
  double max_abs() const noexcept;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

/// (sum |v_i|^p)^(1/p), or max |v_i| for p = inf. Evaluated with the largest
/// magnitude factored out so large exponents do not overflow.
double vector_norm(std::span<const double> v, const Exponent& p);

/// Ax. Throws kShape when x.size() != cols.
DenseVector apply(const DenseMatrix& a, std::span<const double> x);

/// A^T y. Throws kShape when y.size() != rows.
DenseVector apply_transpose(const DenseMatrix& a, std::span<const double> y);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Entry (i, j) of the result is A(row_perm[i], col_perm[j]), i.e. EAF for
/// the matching exchange matrices. Throws kShape on a size mismatch or a
/// sequence that is not a permutation.
DenseMatrix permute(const DenseMatrix& a, std::span<const std::size_t> row_perm,
                    std::span<const std::size_t> col_perm);

/// sgn(y) |y|^(s-1) entrywise: the gradient map of (1/s)||y||_s^s. For
/// s = inf this returns the signed indicator of the first max-|y| entry.
DenseVector duality_map(std::span<const double> y, const Exponent& s);

/// Unit vector e_k of length n.
DenseVector unit_vector(std::size_t n, std::size_t k);

inline double sign(double x) noexcept {
  return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
}

}  // namespace opnorm
