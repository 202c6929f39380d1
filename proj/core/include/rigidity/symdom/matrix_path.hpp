#pragma once

#include <vector>

#include "rigidity/symdom/bivariate.hpp"
#include "rigidity/symdom/domain.hpp"

namespace rigidity::symdom {

/// Matrix V(t) whose entries are polynomials in a real parameter t with
/// coefficients in Q(i). V(0) must lie in the open unit ball.
class PolynomialMatrixPath {
 public:
  // entries[i][j] is the (i, j) entry. Throws std::invalid_argument on a
  // ragged or empty array and OnOrOutsideBoundary if |V(0)| >= 1.
  explicit PolynomialMatrixPath(std::vector<std::vector<ExactPolynomial>> entries);

  int rows() const { return static_cast<int>(entries_.size()); }
  int cols() const { return static_cast<int>(entries_.front().size()); }
  const ExactPolynomial& entry(int i, int j) const { return entries_[i][j]; }

  Matrix at(double t) const;

  // V(t)* V(t) with exact coefficients, valid for real t.
  std::vector<std::vector<ExactPolynomial>> gram() const;

 private:
  std::vector<std::vector<ExactPolynomial>> entries_;
};

/// P(t, lambda) = det(lambda I - V(t)* V(t)) by the Faddeev-LeVerrier
/// recurrence over Q(i)[t]. Monic in lambda of degree cols().
BivariatePolynomial charpoly_path(const PolynomialMatrixPath& path);

// Characteristic polynomial of a square matrix over Q(i)[t].
BivariatePolynomial characteristic_polynomial(const std::vector<std::vector<ExactPolynomial>>& h);

}  // namespace rigidity::symdom
