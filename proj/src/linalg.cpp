#include "opnorm/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "opnorm/error.hpp"

namespace opnorm::linalg {
namespace {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Mat to_eigen(const DenseMatrix& a) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  return out;
}

DenseMatrix from_eigen(const Eigen::MatrixXd& m) {
  return DenseMatrix::from_function(
      static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()),
      [&](std::size_t i, std::size_t j) {
        return m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      });
}

}  // namespace

Svd svd(const DenseMatrix& a) {
  Eigen::JacobiSVD<Mat> solver(to_eigen(a),
                               Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = solver.singularValues();
  return Svd{from_eigen(solver.matrixU()),
             DenseVector(s.data(), s.data() + s.size()),
             from_eigen(solver.matrixV())};
}

DenseVector singular_values(const DenseMatrix& a) {
  Eigen::JacobiSVD<Mat> solver(to_eigen(a));
  const auto& s = solver.singularValues();
  return DenseVector(s.data(), s.data() + s.size());
}

double spectral_norm(const DenseMatrix& a) { return singular_values(a).front(); }

double gram_defect(const DenseMatrix& a) {
  const Mat m = to_eigen(a);
  const Eigen::MatrixXd gram = m.transpose() * m;
  const Eigen::MatrixXd defect =
      gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
  return defect.cwiseAbs().maxCoeff();
}

DenseMatrix inverse(const DenseMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::kShape, "inverse of a non-square matrix");
  const Mat m = to_eigen(a);
  Eigen::FullPivLU<Mat> lu(m);
  if (!lu.isInvertible()) {
    fail(ErrorKind::kNotInvertible, "matrix is numerically singular");
  }
  return from_eigen(lu.inverse());
}

DenseMatrix random_gaussian(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> data(m * n);
  for (double& v : data) v = normal(rng);
  return DenseMatrix(m, n, std::move(data));
}

DenseMatrix random_orthogonal(std::size_t n, std::mt19937_64& rng) {
  const Mat g = to_eigen(random_gaussian(n, n, rng));
  Eigen::HouseholderQR<Mat> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return from_eigen(q);
}

}  // namespace opnorm::linalg
