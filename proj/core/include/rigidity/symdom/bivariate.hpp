#pragma once

#include <complex>
#include <string>
#include <vector>

#include "rigidity/symdom/polynomial.hpp"

namespace rigidity::symdom {

/// P(t, lambda) = sum_j c_j(t) lambda^j with exact coefficients in Q(i).
/// Never identically zero.
class BivariatePolynomial {
 public:
  struct Term {
    int t_power = 0;
    int lambda_power = 0;
    ComplexRational coefficient;
  };

  // lambda_coefficients[j] multiplies lambda^j. Throws std::invalid_argument
  // if every coefficient is zero.
  explicit BivariatePolynomial(std::vector<ExactPolynomial> lambda_coefficients);
  static BivariatePolynomial from_terms(const std::vector<Term>& terms);

  int lambda_degree() const { return static_cast<int>(by_lambda_.size()) - 1; }
  int t_degree() const;

  const std::vector<ExactPolynomial>& lambda_coefficients() const { return by_lambda_; }
  ComplexRational coefficient(int t_power, int lambda_power) const;
  std::vector<Term> terms() const;

  bool is_monic_in_lambda() const;

  // P(t0, .) as a polynomial in lambda.
  ExactPolynomial at_t(const ComplexRational& t0) const;
  NumericPolynomial at_t(std::complex<double> t0) const;

  // P(t, lambda0 + mu) as a polynomial in (t, mu).
  BivariatePolynomial shifted_lambda(const ComplexRational& lambda0) const;

  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.by_lambda_ == b.by_lambda_;
  }

  std::string to_string() const;

 private:
  std::vector<ExactPolynomial> by_lambda_;
};

// dP/dlambda; throws std::invalid_argument when P does not involve lambda.
BivariatePolynomial lambda_derivative(const BivariatePolynomial& p);

/// Product of the distinct irreducible factors of P that involve lambda,
/// P / gcd(P, dP/dlambda) made primitive over Q(i)[t], via a primitive
/// pseudo-remainder sequence in lambda. Normalised to leading lambda
/// coefficient 1 when that coefficient is constant.
BivariatePolynomial squarefree_part(const BivariatePolynomial& p);

/// (-1)^{d(d-1)/2} Res_lambda(P, dP/dlambda) as an exact polynomial in t,
/// d the lambda-degree: the discriminant when P is monic in lambda, and
/// that times the leading coefficient otherwise. Computed by exact
/// evaluation at integer t and interpolation.
ExactPolynomial lambda_discriminant(const BivariatePolynomial& p);

// Resultant of two univariate polynomials with formal degrees m and n
// (leading zeros allowed), via the Sylvester determinant.
ComplexRational resultant(const std::vector<ComplexRational>& a, const std::vector<ComplexRational>& b);

// Newton interpolation through (x_k, y_k) with distinct x_k.
ExactPolynomial interpolate(const std::vector<ComplexRational>& xs,
                            const std::vector<ComplexRational>& ys);

}  // namespace rigidity::symdom
