#include "rigidity/symdom/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

#include "rigidity/symdom/roots.hpp"

namespace rigidity::symdom {

int distance_branch_index(const PuiseuxBranchReport& branch) {
  if (branch.base_value != std::complex<double>{} || branch.terms.empty()) return branch.K;
  const Rational scaled = branch.leading_exponent * branch.K;
  if (denominator(scaled) != 1) throw std::logic_error("exponent denominator does not divide K");
  return numerator(scaled) % 2 == 0 ? branch.K : 2 * branch.K;
}

double polynomial_fit_residual(const std::vector<double>& x, const std::vector<double>& y,
                               int degree) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("fit needs matching samples");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const double a = *lo;
  const double width = *hi - *lo;
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd basis(n, degree + 1);
  Eigen::VectorXd rhs(n);
  for (int k = 0; k < n; ++k) {
    const double s = width > 0 ? 2.0 * (x[k] - a) / width - 1.0 : 0.0;
    basis(k, 0) = 1.0;
    if (degree >= 1) basis(k, 1) = s;
    for (int j = 2; j <= degree; ++j) basis(k, j) = 2.0 * s * basis(k, j - 1) - basis(k, j - 2);
    rhs(k) = y[k];
  }
  const Eigen::VectorXd coef = basis.colPivHouseholderQr().solve(rhs);
  return (basis * coef - rhs).lpNorm<Eigen::Infinity>();
}

namespace {

SmoothnessReport sample(const PuiseuxBranchReport& branch, double epsilon,
                        const SmoothnessOptions& options,
                        const std::function<double(double)>& distance) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (options.samples < options.degree + 2) throw std::invalid_argument("too few samples for fit");
  SmoothnessReport r;
  r.branch = branch;
  r.K = distance_branch_index(branch);
  r.epsilon = epsilon;
  r.degree = options.degree;
  r.samples = options.samples;
  std::vector<double> u;
  for (int k = 0; k < options.samples; ++k) {
    const double t = epsilon * k / (options.samples - 1);
    r.t.push_back(t);
    r.d.push_back(distance(t));
    u.push_back(std::pow(t, 1.0 / r.K));
  }
  r.fit_residual = polynomial_fit_residual(u, r.d, options.degree);
  r.naive_residual = polynomial_fit_residual(r.t, r.d, options.degree);
  return r;
}

}  // namespace

SmoothnessReport smoothness_report(const PolynomialMatrixPath& path, double epsilon,
                                   const SmoothnessOptions& options) {
  const auto branch = newton_puiseux_index(charpoly_path(path));
  return sample(branch, epsilon, options, [&](double t) {
    const double norm = operator_norm(path.at(t));
    if (norm >= 1.0 - kMembershipMargin) {
      throw BoundaryHit("path leaves the ball at t = " + std::to_string(t));
    }
    return std::atanh(norm);
  });
}

SmoothnessReport smoothness_report(const BivariatePolynomial& p, double epsilon,
                                   const SmoothnessOptions& options) {
  const auto branch = newton_puiseux_index(p);
  return sample(branch, epsilon, options, [&](double t) {
    const auto roots = numeric_roots(p.at_t(std::complex<double>(t, 0.0)));
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& z : roots) {
      if (std::abs(z.imag()) <= 1e-7 * (1.0 + std::abs(z))) top = std::max(top, z.real());
    }
    // Roots of size ~ sqrt(machine epsilon) may be rounding around zero.
    if (top < 0.0 && top > -1e-7) top = 0.0;
    if (!(top >= 0.0) || top >= 1.0 - kMembershipMargin) {
      throw BoundaryHit("top eigenvalue outside [0, 1) at t = " + std::to_string(t));
    }
    return std::atanh(std::sqrt(top));
  });
}

}  // namespace rigidity::symdom
