#include "rigidity/symdom/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rigidity/symdom/roots.hpp"

namespace rigidity::symdom {

namespace {

using Roots = std::vector<std::complex<double>>;

// Moduli of the non-zero points where roots of P(t, .) collide or escape.
std::vector<double> branch_point_moduli(const BivariatePolynomial& reduced) {
  std::vector<double> out;
  auto collect = [&](const ExactPolynomial& poly) {
    for (const auto& r : distinct_roots(poly)) {
      const double m = std::abs(r.value);
      if (m > 1e-12) out.push_back(m);
    }
  };
  if (reduced.lambda_degree() >= 2) collect(lambda_discriminant(reduced));
  collect(reduced.lambda_coefficients().back());
  return out;
}

BivariatePolynomial reduce(const BivariatePolynomial& p) {
  if (p.lambda_degree() < 1) throw std::invalid_argument("polynomial does not involve lambda");
  return squarefree_part(p);
}

void check_separated(const Roots& roots) {
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      if (std::abs(roots[a] - roots[b]) < kCollisionTolerance) {
        throw BranchPointOnCircle("roots collide during continuation");
      }
    }
  }
}

// match[i] = index in `next` closest to predicted[i]; must be a bijection.
std::vector<int> match(const Roots& predicted, const Roots& next) {
  std::vector<int> out(predicted.size());
  std::vector<bool> used(next.size(), false);
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (std::size_t j = 0; j < next.size(); ++j) {
      const double d = std::abs(predicted[i] - next[j]);
      if (d < best) {
        best = d;
        arg = static_cast<int>(j);
      }
    }
    if (used[arg]) throw BranchPointOnCircle("ambiguous root matching; increase steps");
    used[arg] = true;
    out[i] = arg;
  }
  return out;
}

}  // namespace

double isolating_radius(const BivariatePolynomial& p, double cap) {
  double r = cap;
  for (double m : branch_point_moduli(reduce(p))) r = std::min(r, 0.5 * m);
  return r;
}

int monodromy_branch_index(const BivariatePolynomial& p, double radius, int steps) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  if (steps < 8) throw std::invalid_argument("at least 8 continuation steps required");
  const BivariatePolynomial reduced = reduce(p);
  for (double m : branch_point_moduli(reduced)) {
    if (std::abs(m - radius) <= 1e-9 * radius) {
      throw BranchPointOnCircle("branch point on the continuation circle");
    }
    if (m < radius) throw BranchPointInside("another branch point lies inside the circle");
  }

  auto roots_at = [&](double phi) {
    const auto t = std::polar(radius, phi);
    Roots r = numeric_roots(reduced.at_t(t));
    check_separated(r);
    return r;
  };

  const Roots start = roots_at(0.0);
  const int n = static_cast<int>(start.size());
  Roots current = start;
  Roots previous = start;
  for (int k = 1; k <= steps; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / steps;
    Roots next = k == steps ? start : roots_at(phi);
    Roots predicted(n);
    for (int i = 0; i < n; ++i) {
      predicted[i] = k == 1 ? current[i] : 2.0 * current[i] - previous[i];
    }
    const auto m = match(predicted, next);
    Roots moved(n);
    for (int i = 0; i < n; ++i) moved[i] = next[m[i]];
    previous = current;
    current = std::move(moved);
  }

  // current[i] is where start[i] lands; build the permutation.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) {
    perm[i] = static_cast<int>(std::min_element(start.begin(), start.end(),
                                                [&](auto a, auto b) {
                                                  return std::abs(a - current[i]) <
                                                         std::abs(b - current[i]);
                                                }) -
                               start.begin());
  }
  const int top = static_cast<int>(
      std::max_element(start.begin(), start.end(),
                       [](auto a, auto b) { return a.real() < b.real(); }) -
      start.begin());
  int length = 1;
  for (int i = perm[top]; i != top; i = perm[i]) {
    ++length;
    if (length > n) throw std::logic_error("continuation did not return a permutation");
  }
  return length;
}

}  // namespace rigidity::symdom
