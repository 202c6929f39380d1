#include "doctest.h"

#include <algorithm>
#include <Eigen/SVD>

#include "rigidity/symdom/matrix_path.hpp"
#include "rigidity/symdom/roots.hpp"

using namespace rigidity::symdom;

namespace {

ComplexRational q(int a, int b = 1) { return ComplexRational(Rational(a) / Rational(b)); }
ExactPolynomial poly(std::vector<ComplexRational> c) { return ExactPolynomial(std::move(c)); }
const ExactPolynomial kZero;

BivariatePolynomial lam(std::vector<ExactPolynomial> c) { return BivariatePolynomial(std::move(c)); }

}  // namespace

TEST_CASE("diagonal path") {
  const PolynomialMatrixPath v({{poly({q(1, 2), q(1, 4)}), kZero}, {kZero, poly({q(1, 4)})}});
  const auto a = poly({q(1, 2), q(1, 4)});
  const auto expected = lam({-(a * a), poly({q(1)})}) * lam({poly({q(-1, 16)}), poly({q(1)})});
  CHECK(charpoly_path(v) == expected);
}

TEST_CASE("Jordan path and its discriminant") {
  const PolynomialMatrixPath v({{poly({q(1, 2)}), poly({q(0), q(1)})}, {kZero, poly({q(1, 2)})}});
  const auto p = charpoly_path(v);
  CHECK(p == lam({poly({q(1, 16)}), poly({q(-1, 2), q(0), q(-1)}), poly({q(1)})}));
  // (1/2 + t^2)^2 - 1/4 = t^2 (t^2 + 1)
  CHECK(lambda_discriminant(p) == poly({q(0), q(0), q(1), q(0), q(1)}));
}

TEST_CASE("anti-diagonal path") {
  const PolynomialMatrixPath v({{kZero, poly({q(1, 2)})}, {poly({q(0), q(1, 2)}), kZero}});
  const auto expected = lam({poly({q(-1, 4)}), poly({q(1)})}) * lam({poly({q(0), q(0), q(-1, 4)}), poly({q(1)})});
  CHECK(charpoly_path(v) == expected);
}

TEST_CASE("complex coefficients are conjugated in V*") {
  // V = [[i t / 2]] has V* V = t^2 / 4.
  const PolynomialMatrixPath v({{poly({q(0), ComplexRational(0, Rational(1) / 2)})}});
  CHECK(charpoly_path(v) == lam({poly({q(0), q(0), q(-1, 4)}), poly({q(1)})}));
}

TEST_CASE("charpoly roots at t = 0.25 are the squared singular values") {
  // A 2x3 path with complex entries.
  const PolynomialMatrixPath v({
      {poly({q(1, 5), q(1)}), poly({ComplexRational(0, Rational(1) / 7)}), poly({q(0), q(0), q(1, 3)})},
      {poly({q(-1, 6)}), poly({q(1, 4), ComplexRational(Rational(1) / 2, Rational(1))}), poly({q(1, 9)})},
  });
  const auto p = charpoly_path(v);
  CHECK(p.lambda_degree() == 3);
  CHECK(p.is_monic_in_lambda());
  const auto roots = numeric_roots(to_numeric(p.at_t(q(1, 4))));
  Eigen::JacobiSVD<Matrix> svd(v.at(0.25));
  std::vector<double> sv2 = {0.0};
  for (int k = 0; k < svd.singularValues().size(); ++k) sv2.push_back(std::pow(svd.singularValues()(k), 2));
  std::sort(sv2.begin(), sv2.end());
  REQUIRE(roots.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(roots[k].imag()) < 1e-10);
    CHECK(std::abs(roots[k].real() - sv2[k]) < 1e-10);
  }
}

TEST_CASE("paths must start inside the ball") {
  CHECK_THROWS_AS(PolynomialMatrixPath({{poly({q(1)})}}), OnOrOutsideBoundary);
  CHECK_THROWS_AS(PolynomialMatrixPath({{poly({q(1, 2)})}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(PolynomialMatrixPath({}), std::invalid_argument);
}
