#pragma once

#include <complex>
#include <vector>

#include "rigidity/error.hpp"
#include "rigidity/symdom/bivariate.hpp"

namespace rigidity::symdom {

RIGIDITY_DEFINE_ERROR(DegenerateAtZero);
RIGIDITY_DEFINE_ERROR(NoRealBranch);
RIGIDITY_DEFINE_ERROR(NonRationalBranchValue);
RIGIDITY_DEFINE_ERROR(UnresolvedBranch);

struct PuiseuxTerm {
  Rational exponent;
  std::complex<double> coefficient;
};

/// Local data of the branch lambda(t) of P(t, lambda) = 0 that is largest
/// for small t > 0:
///   lambda(t) = base_value + sum_k c_k t^{e_k},  e_k in (1/K) Z.
struct PuiseuxBranchReport {
  int K = 1;
  Rational leading_exponent{0};
  std::complex<double> leading_coefficient{};
  std::complex<double> base_value{};
  // False when lambda(0) is irrational; the leading term then comes from
  // the implicit function theorem in floating point.
  bool exact = true;
  // Terms of lambda(t) - lambda(0) found before the branch separated from
  // its neighbours, in increasing exponent. Empty for lambda constant.
  std::vector<PuiseuxTerm> terms;
};

/// Branching index of the top real branch at t = 0+, by Newton polygons of
/// the square-free part of P over Q(i).
///
/// Throws DegenerateAtZero if P(0, .) vanishes identically, NoRealBranch
/// if P(0, .) has no real root, NonRationalBranchValue if the top root of
/// P(0, .) is both irrational and multiple, UnresolvedBranch if branches
/// sharing a leading term have an irrational coefficient.
PuiseuxBranchReport newton_puiseux_index(const BivariatePolynomial& p);

}  // namespace rigidity::symdom
