#include "rigidity/symdom/domain.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

namespace rigidity::symdom {
namespace {

Eigen::MatrixXcd flattened(const std::vector<Matrix>& basis, int rows, int cols) {
  Eigen::MatrixXcd a(rows * cols, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    a.col(static_cast<Eigen::Index>(k)) = basis[k].reshaped();
  }
  return a;
}

void check_boundary(double norm) {
  if (!(norm < 1.0 - kMembershipMargin)) {
    std::ostringstream msg;
    msg << "operator norm " << norm << " is on or outside the unit ball";
    throw OnOrOutsideBoundary(msg.str());
  }
}

}  // namespace

double operator_norm(const Matrix& v) {
  if (v.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(v);
  return svd.singularValues()(0);
}

MatrixDomain::MatrixDomain(int rows, int cols, std::vector<Matrix> basis)
    : rows_(rows), cols_(cols), basis_(std::move(basis)) {
  if (rows < 1 || cols < 1 || basis_.empty()) {
    throw std::invalid_argument("matrix domain needs a non-empty basis");
  }
  for (const auto& b : basis_) {
    if (b.rows() != rows || b.cols() != cols) {
      throw std::invalid_argument("basis matrix has the wrong shape");
    }
  }
  Eigen::FullPivHouseholderQR<Eigen::MatrixXcd> qr(flattened(basis_, rows, cols));
  if (qr.rank() != static_cast<Eigen::Index>(basis_.size())) {
    throw std::invalid_argument("domain basis is linearly dependent");
  }
}

MatrixDomain MatrixDomain::bidisk() {
  Matrix e1 = Matrix::Zero(2, 2), e2 = Matrix::Zero(2, 2);
  e1(0, 0) = 1.0;
  e2(1, 1) = 1.0;
  return MatrixDomain(2, 2, {e1, e2});
}

MatrixDomain MatrixDomain::complex_ball(int dimension) {
  std::vector<Matrix> basis;
  for (int k = 0; k < dimension; ++k) {
    Matrix e = Matrix::Zero(1, dimension);
    e(0, k) = 1.0;
    basis.push_back(e);
  }
  return MatrixDomain(1, dimension, std::move(basis));
}

MatrixDomain MatrixDomain::full(int rows, int cols) {
  std::vector<Matrix> basis;
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      Matrix e = Matrix::Zero(rows, cols);
      e(i, j) = 1.0;
      basis.push_back(e);
    }
  }
  return MatrixDomain(rows, cols, std::move(basis));
}

Matrix MatrixDomain::combine(const Eigen::VectorXcd& coords) const {
  if (coords.size() != dimension()) throw std::invalid_argument("coordinate count mismatch");
  Matrix v = Matrix::Zero(rows_, cols_);
  for (int k = 0; k < dimension(); ++k) v += coords(k) * basis_[k];
  return v;
}

double MatrixDomain::subspace_residual(const Matrix& v) const {
  if (v.rows() != rows_ || v.cols() != cols_) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXcd a = flattened(basis_, rows_, cols_);
  const Eigen::VectorXcd target = v.reshaped();
  const Eigen::VectorXcd coords = a.colPivHouseholderQr().solve(target);
  return (a * coords - target).norm();
}

MatrixPoint::MatrixPoint(const MatrixDomain& domain, Matrix v) : v_(std::move(v)) {
  const double scale = 1.0 + v_.norm();
  if (!(domain.subspace_residual(v_) <= 1e-12 * scale)) {
    throw NotInSubspace("matrix is not in the span of the domain basis");
  }
  norm_ = operator_norm(v_);
  check_boundary(norm_);
}

double kobayashi_distance_origin(const MatrixPoint& v) { return std::atanh(v.norm()); }

double kobayashi_distance_origin(const Matrix& v) {
  const double norm = operator_norm(v);
  check_boundary(norm);
  return std::atanh(norm);
}

}  // namespace rigidity::symdom
