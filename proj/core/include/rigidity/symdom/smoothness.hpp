#pragma once

#include <vector>

#include "rigidity/error.hpp"
#include "rigidity/symdom/matrix_path.hpp"
#include "rigidity/symdom/puiseux.hpp"

namespace rigidity::symdom {

RIGIDITY_DEFINE_ERROR(BoundaryHit);

struct SmoothnessOptions {
  int degree = 8;
  int samples = 201;
};

struct SmoothnessReport {
  // d(t) is a real-analytic function of t^{1/K}.
  int K = 1;
  PuiseuxBranchReport branch;
  double epsilon = 0.0;
  int degree = 0;
  int samples = 0;
  // Max-abs residual of the least-squares fit of d in u = t^{1/K}.
  double fit_residual = 0.0;
  // Same fit in t itself.
  double naive_residual = 0.0;
  std::vector<double> t;
  std::vector<double> d;
};

// Index for d = artanh(sqrt(lambda)) given the branch of lambda: when
// lambda(0) = 0 the square root halves the leading exponent.
int distance_branch_index(const PuiseuxBranchReport& branch);

/// d(t) = artanh |V(t)| sampled on [0, epsilon]; K from the characteristic
/// polynomial of V* V. Throws BoundaryHit if some |V(t)| >= 1.
SmoothnessReport smoothness_report(const PolynomialMatrixPath& path, double epsilon,
                                   const SmoothnessOptions& options = {});

/// Same with d(t) = artanh(sqrt(lambda_top(t))), lambda_top the largest real
/// root of P(t, .). Throws BoundaryHit unless 0 <= lambda_top < 1.
SmoothnessReport smoothness_report(const BivariatePolynomial& p, double epsilon,
                                   const SmoothnessOptions& options = {});

// Max-abs residual of the least-squares Chebyshev fit of degree `degree`
// to (x_k, y_k), x mapped affinely onto [-1, 1].
double polynomial_fit_residual(const std::vector<double>& x, const std::vector<double>& y,
                               int degree);

}  // namespace rigidity::symdom
