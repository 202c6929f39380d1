#include "doctest.h"

#include <cmath>
#include <random>

#include "rigidity/symdom/domain.hpp"

using namespace rigidity::symdom;

namespace {

Matrix diag(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("operator norm examples") {
  CHECK(operator_norm(diag(0.5, 0.3)) == doctest::Approx(0.5));
  CHECK(operator_norm(Matrix::Zero(2, 3)) == 0.0);
  Matrix j = Matrix::Zero(2, 2);
  j(0, 1) = 0.7;
  CHECK(operator_norm(j) == doctest::Approx(0.7));
}

TEST_CASE("operator norm bounds on random matrices") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g;
  for (int k = 0; k < 100; ++k) {
    Matrix m(3, 2);
    for (int i = 0; i < 3; ++i) {
      for (int c = 0; c < 2; ++c) m(i, c) = {g(rng), g(rng)};
    }
    const double n = operator_norm(m);
    double col = 0.0;
    for (int c = 0; c < 2; ++c) col = std::max(col, m.col(c).norm());
    CHECK(col <= n + 1e-12);
    CHECK(n <= m.norm() + 1e-12);
    // Unitary invariance under a Householder reflection.
    Eigen::VectorXcd v = Eigen::VectorXcd::Random(3).normalized();
    const Matrix h = Matrix::Identity(3, 3) - 2.0 * v * v.adjoint();
    CHECK(operator_norm(h * m) == doctest::Approx(n));
  }
}

TEST_CASE("Kobayashi distance from the origin") {
  const auto bidisk = MatrixDomain::bidisk();
  CHECK(std::abs(kobayashi_distance_origin(MatrixPoint(bidisk, diag(0.5, 0.2))) - 0.5 * std::log(3.0)) <= 1e-12);
  CHECK(kobayashi_distance_origin(MatrixPoint(bidisk, diag(0.0, 0.0))) == 0.0);
  CHECK_THROWS_AS(MatrixPoint(bidisk, diag(1.0, 0.2)), OnOrOutsideBoundary);
  Matrix off = Matrix::Zero(2, 2);
  off(0, 1) = 0.3;
  CHECK_THROWS_AS(MatrixPoint(bidisk, off), NotInSubspace);
}

TEST_CASE("bidisk distance is the sup of the factor distances") {
  const auto bidisk = MatrixDomain::bidisk();
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double a = 0.95 * i / 19.0;
      const double b = 0.95 * j / 19.0;
      const double expected = std::max(0.5 * std::log((1 + a) / (1 - a)), 0.5 * std::log((1 + b) / (1 - b)));
      CHECK(std::abs(kobayashi_distance_origin(MatrixPoint(bidisk, diag(a, b))) - expected) <= 1e-12);
    }
  }
}

TEST_CASE("distance is increasing in the norm") {
  double prev = -1.0;
  for (int k = 0; k < 50; ++k) {
    const double d = kobayashi_distance_origin(diag(0.019 * k, 0.0));
    CHECK(d > prev);
    prev = d;
  }
}

TEST_CASE("domain construction") {
  CHECK(MatrixDomain::complex_ball(2).dimension() == 2);
  CHECK(MatrixDomain::full(2, 3).dimension() == 6);
  CHECK_THROWS_AS(MatrixDomain(2, 2, {diag(1, 0), diag(2, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(MatrixDomain(2, 2, {}), std::invalid_argument);
  const auto ball = MatrixDomain::complex_ball(2);
  Eigen::VectorXcd c(2);
  c << 0.3, std::complex<double>(0.0, 0.4);
  const Matrix v = ball.combine(c);
  CHECK(ball.subspace_residual(v) < 1e-14);
  CHECK(kobayashi_distance_origin(MatrixPoint(ball, v)) == doctest::Approx(std::atanh(0.5)));
}
