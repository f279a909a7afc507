#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "opnorm/dense.hpp"

namespace opnorm::linalg {

/// Thin SVD A = U diag(s) V^T with singular values in descending order.
struct Svd {
  DenseMatrix u;  // m x k
  DenseVector singular_values;  // k = min(m, n)
  DenseMatrix v;  // n x k
};

Svd svd(const DenseMatrix& a);

DenseVector singular_values(const DenseMatrix& a);

double spectral_norm(const DenseMatrix& a);

/// max |(A^T A - I)_{ij}|, the column-side Gram defect.
double gram_defect(const DenseMatrix& a);

/// Inverse of a square matrix via partial-pivot LU; kNotInvertible when
/// the matrix is numerically singular.
DenseMatrix inverse(const DenseMatrix& a);

/// Haar-distributed orthogonal n x n matrix: QR of a Gaussian matrix with the
/// sign of diag(R) folded into Q.
DenseMatrix random_orthogonal(std::size_t n, std::mt19937_64& rng);

DenseMatrix random_gaussian(std::size_t m, std::size_t n, std::mt19937_64& rng);

}  // namespace opnorm::linalg
