#include "doctest.h"

#include <cmath>

#include "rigidity/symdom/monodromy.hpp"
#include "rigidity/symdom/puiseux.hpp"
#include "rigidity/symdom/roots.hpp"

using namespace rigidity::symdom;

namespace {

ComplexRational q(int a, int b = 1) { return ComplexRational(Rational(a) / Rational(b)); }
ExactPolynomial poly(std::vector<ComplexRational> c) { return ExactPolynomial(std::move(c)); }
BivariatePolynomial lam(std::vector<ExactPolynomial> c) { return BivariatePolynomial(std::move(c)); }
const ExactPolynomial kZero;

BivariatePolynomial sqrt_branch() { return lam({poly({q(0), q(-1)}), kZero, poly({q(1)})}); }
BivariatePolynomial double_eigenvalue() {
  return lam({poly({q(1, 16)}), poly({q(-1, 2), q(-1)}), poly({q(1)})});
}
BivariatePolynomial diagonal_analytic() {
  const auto a = poly({q(1, 2), q(1, 4)});
  return lam({-(a * a), poly({q(1)})}) * lam({poly({q(-1, 16)}), poly({q(1)})});
}

// Largest real root of P(t, .) for real t > 0, the numeric oracle.
double top_root(const BivariatePolynomial& p, double t) {
  double best = -1e300;
  for (const auto& z : numeric_roots(p.at_t(std::complex<double>(t, 0.0)))) {
    if (std::abs(z.imag()) < 1e-8) best = std::max(best, z.real());
  }
  return best;
}

// The leading term predicts lambda_top(t) - lambda(0) to first order.
void check_leading_term(const BivariatePolynomial& p, const PuiseuxBranchReport& r) {
  if (r.terms.empty()) return;
  const double e = rigidity::symdom::to_double(r.leading_exponent);
  for (double t : {1e-6, 1e-8}) {
    const double actual = top_root(p, t) - r.base_value.real();
    const double predicted = r.leading_coefficient.real() * std::pow(t, e);
    CHECK(std::abs(actual - predicted) <= 0.05 * std::abs(predicted) + 1e-12);
  }
}

}  // namespace

TEST_CASE("lambda^2 - t has K = 2, exponent 1/2") {
  const auto r = newton_puiseux_index(sqrt_branch());
  CHECK(r.K == 2);
  CHECK(r.leading_exponent == Rational(1) / 2);
  CHECK(r.leading_coefficient.real() == doctest::Approx(1.0));
  check_leading_term(sqrt_branch(), r);
}

TEST_CASE("double eigenvalue: lambda = 1/4 + sqrt(t)/2 + O(t)") {
  const auto r = newton_puiseux_index(double_eigenvalue());
  CHECK(r.K == 2);
  CHECK(r.base_value.real() == doctest::Approx(0.25));
  CHECK(r.leading_exponent == Rational(1) / 2);
  CHECK(r.leading_coefficient.real() == doctest::Approx(0.5));
  CHECK(r.exact);
  check_leading_term(double_eigenvalue(), r);
}

TEST_CASE("diagonal path charpoly is analytic") {
  const auto r = newton_puiseux_index(diagonal_analytic());
  CHECK(r.K == 1);
  CHECK(r.base_value.real() == doctest::Approx(0.25));
  CHECK(r.leading_exponent == Rational(1));
  CHECK(r.leading_coefficient.real() == doctest::Approx(0.25));
  check_leading_term(diagonal_analytic(), r);
}

TEST_CASE("top branch selection among branches sharing lambda(0)") {
  // (l - t)(l + t)(l - 2t): three branches through 0, top one is 2t.
  const auto p = lam({poly({q(0), q(-1)}), poly({q(1)})}) * lam({poly({q(0), q(1)}), poly({q(1)})}) *
                 lam({poly({q(0), q(-2)}), poly({q(1)})});
  const auto r = newton_puiseux_index(p);
  CHECK(r.K == 1);
  CHECK(r.leading_coefficient.real() == doctest::Approx(2.0));
  // (l - t^3)(l^2 - t^3): sqrt branch t^{3/2} dominates t^3.
  const auto s = newton_puiseux_index(lam({poly({q(0), q(0), q(0), q(-1)}), poly({q(1)})}) *
                                      lam({poly({q(0), q(0), q(0), q(-1)}), kZero, poly({q(1)})}));
  CHECK(s.K == 2);
  CHECK(s.leading_exponent == Rational(3) / 2);
  // (l + t)(l^2 - t^3): negative leading terms lose to the slower decay.
  const auto n = newton_puiseux_index(lam({poly({q(0), q(1)}), poly({q(1)})}) *
                                      lam({poly({q(0), q(0), q(-1)}), kZero, poly({q(1)})}));
  CHECK(n.K == 1);
  CHECK(n.leading_coefficient.real() == doctest::Approx(1.0));
}

TEST_CASE("branches separating at second order") {
  // (l - t - t^{3/2})(l - t + t^{3/2}) = (l - t)^2 - t^3.
  const auto p = lam({poly({q(0), q(0), q(1), q(-1)}), poly({q(0), q(-2)}), poly({q(1)})});
  const auto r = newton_puiseux_index(p);
  CHECK(r.K == 2);
  CHECK(r.leading_exponent == Rational(1));
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[1].exponent == Rational(3) / 2);
  CHECK(r.terms[1].coefficient.real() == doctest::Approx(1.0));
}

TEST_CASE("identical branches report the common index") {
  const auto r = newton_puiseux_index(sqrt_branch() * sqrt_branch());
  CHECK(r.K == 2);
  const auto g = lam({poly({q(-1, 4), q(-1)}), poly({q(1)})});
  CHECK(newton_puiseux_index(g * g).K == 1);
}

TEST_CASE("constant branch and degenerate input") {
  const auto r = newton_puiseux_index(lam({poly({q(2)}), poly({q(-3)}), poly({q(1)})}));
  CHECK(r.K == 1);
  CHECK(r.base_value.real() == doctest::Approx(2.0));
  CHECK(r.leading_exponent == Rational(0));
  CHECK(r.terms.empty());
  CHECK_THROWS_AS(newton_puiseux_index(lam({poly({q(0), q(1)}), poly({q(0), q(1)})})), DegenerateAtZero);
  CHECK_THROWS_AS(newton_puiseux_index(lam({poly({q(1)}), kZero, poly({q(1)})})), NoRealBranch);
}

TEST_CASE("irrational simple root falls back to the implicit function theorem") {
  // l^2 - 2 - t: top branch sqrt(2 + t), slope 1 / (2 sqrt 2).
  const auto r = newton_puiseux_index(lam({poly({q(-2), q(-1)}), kZero, poly({q(1)})}));
  CHECK(r.K == 1);
  CHECK_FALSE(r.exact);
  CHECK(r.leading_coefficient.real() == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))));
  CHECK_THROWS_AS(newton_puiseux_index(lam({poly({q(-2), q(-1)}), kZero, poly({q(1)})}) *
                                       lam({poly({q(-2), q(1)}), kZero, poly({q(1)})})),
                  NonRationalBranchValue);
}

TEST_CASE("monodromy examples") {
  CHECK(monodromy_branch_index(sqrt_branch(), 0.01) == 2);
  CHECK(monodromy_branch_index(lam({poly({q(2)}), poly({q(-3)}), poly({q(1)})}), 0.1) == 1);
  CHECK(monodromy_branch_index(double_eigenvalue(), 0.01) == 2);
  CHECK(monodromy_branch_index(diagonal_analytic(), 0.1) == 1);
}

TEST_CASE("monodromy radius checks") {
  // Branch points at t = 0 and t = -1.
  CHECK_THROWS_AS(monodromy_branch_index(double_eigenvalue(), 1.0), BranchPointOnCircle);
  CHECK_THROWS_AS(monodromy_branch_index(double_eigenvalue(), 1.5), BranchPointInside);
  CHECK(isolating_radius(double_eigenvalue(), 10.0) == doctest::Approx(0.5));
  CHECK(isolating_radius(sqrt_branch()) == doctest::Approx(0.1));
}

TEST_CASE("Newton-Puiseux and monodromy agree") {
  std::vector<BivariatePolynomial> cases = {
      sqrt_branch(), double_eigenvalue(), diagonal_analytic(),
      lam({poly({q(0), q(0), q(0), q(-1)}), kZero, poly({q(1)})}),           // l^2 - t^3
      lam({poly({q(0), q(-1)}), kZero, kZero, poly({q(1)})}),                 // l^3 - t
      lam({poly({q(0), q(-1)}), kZero, kZero, kZero, poly({q(1)})}),          // l^4 - t
      lam({poly({q(1, 16), q(1, 3)}), poly({q(-1, 2), q(-1)}), poly({q(1)})}),  // split double root
  };
  for (const auto& p : cases) {
    const auto r = newton_puiseux_index(p);
    CHECK(monodromy_branch_index(p, isolating_radius(p)) == r.K);
  }
}
