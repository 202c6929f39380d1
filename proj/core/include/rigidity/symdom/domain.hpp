#pragma once

#include <vector>

#include <Eigen/Dense>

#include "rigidity/error.hpp"

namespace rigidity::symdom {

RIGIDITY_DEFINE_ERROR(OnOrOutsideBoundary);
RIGIDITY_DEFINE_ERROR(NotInSubspace);

using Matrix = Eigen::MatrixXcd;

inline constexpr double kMembershipMargin = 1e-12;

// sup_{|xi|_2 = 1} |V xi|_2, the largest singular value.
double operator_norm(const Matrix& v);

/// Harish-Chandra model of a bounded symmetric domain: the open unit ball
/// of the operator norm on a linear subspace of n x m complex matrices.
class MatrixDomain {
 public:
  // Throws std::invalid_argument when the basis is empty, has mismatched
  // shapes or is linearly dependent.
  MatrixDomain(int rows, int cols, std::vector<Matrix> basis);

  // Diagonal 2x2 matrices: the bidisk CH^1 x CH^1.
  static MatrixDomain bidisk();
  // 1 x 2 row vectors: the ball CH^2.
  static MatrixDomain complex_ball(int dimension);
  // All n x m matrices.
  static MatrixDomain full(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Matrix>& basis() const { return basis_; }

  // V = sum_k coords[k] * basis[k].
  Matrix combine(const Eigen::VectorXcd& coords) const;

  // Least-squares distance from V to the span of the basis.
  double subspace_residual(const Matrix& v) const;

 private:
  int rows_;
  int cols_;
  std::vector<Matrix> basis_;
};

// A point of the domain: lies in the subspace and has operator norm
// below 1 - kMembershipMargin.
class MatrixPoint {
 public:
  // Throws NotInSubspace or OnOrOutsideBoundary.
  MatrixPoint(const MatrixDomain& domain, Matrix v);

  const Matrix& matrix() const { return v_; }
  double norm() const { return norm_; }

 private:
  Matrix v_;
  double norm_;
};

/// d_B(0, V) = (1/2) log((1 + |V|) / (1 - |V|)) = artanh |V|.
double kobayashi_distance_origin(const MatrixPoint& v);

// Same formula straight from a matrix; throws OnOrOutsideBoundary when
// |V| >= 1 - kMembershipMargin.
double kobayashi_distance_origin(const Matrix& v);

}  // namespace rigidity::symdom
