#include "rigidity/symdom/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace rigidity::symdom {

NumericPolynomial to_numeric(const ExactPolynomial& p) {
  std::vector<std::complex<double>> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.push_back(x.to_complex());
  return NumericPolynomial(std::move(c));
}

std::vector<std::complex<double>> numeric_roots(const NumericPolynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};
  const auto& c = p.coefficients();
  // Factor out roots at zero exactly.
  int zeros = 0;
  while (zeros < n && c[zeros] == std::complex<double>{}) ++zeros;
  std::vector<std::complex<double>> roots(zeros, std::complex<double>{});
  const int m = n - zeros;
  if (m > 0) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) companion(i, m - 1) = -c[zeros + i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    const auto d = p.derivative();
    for (int i = 0; i < m; ++i) {
      std::complex<double> z = solver.eigenvalues()(i);
      for (int it = 0; it < 3; ++it) {
        const auto f = p.evaluate(z);
        const auto df = d.evaluate(z);
        if (std::abs(df) < 1e-14 * (1.0 + std::abs(f))) break;
        const auto step = f / df;
        const auto next = z - step;
        // Keep Newton only when it reduces the residual (it can wander near
        // clustered roots).
        if (std::abs(p.evaluate(next)) < std::abs(f)) z = next; else break;
      }
      roots.push_back(z);
    }
  }
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

namespace {

std::vector<Rational> candidates(double x, double radius, long long max_denominator) {
  std::vector<Rational> out;
  for (auto& r : convergents(x, max_denominator)) {
    if (std::abs(to_double(r) - x) <= radius) out.push_back(r);
  }
  if (std::abs(x) <= radius) out.emplace_back(0);
  return out;
}

}  // namespace

std::optional<Rational> rational_root_near(const ExactPolynomial& p, double x, double radius,
                                           long long max_denominator) {
  for (const auto& r : candidates(x, radius, max_denominator)) {
    if (p.evaluate(ComplexRational(r)).is_zero()) return r;
  }
  return std::nullopt;
}

std::optional<ComplexRational> gaussian_rational_root_near(const ExactPolynomial& p,
                                                           std::complex<double> z, double radius,
                                                           long long max_denominator) {
  const auto res = candidates(z.real(), radius, max_denominator);
  const auto ims = candidates(z.imag(), radius, max_denominator);
  for (const auto& a : res) {
    for (const auto& b : ims) {
      ComplexRational c(a, b);
      if (p.evaluate(c).is_zero()) return c;
    }
  }
  return std::nullopt;
}

std::vector<RootCluster> distinct_roots(const ExactPolynomial& p) {
  std::vector<std::vector<std::complex<double>>> levels;
  ExactPolynomial g = p;
  while (g.degree() >= 1) {
    const ExactPolynomial next = gcd(g, g.derivative());
    levels.push_back(numeric_roots(to_numeric(divmod(g, next).first)));
    g = next;
  }
  std::vector<RootCluster> out;
  if (levels.empty()) return out;
  for (const auto& z : levels.front()) {
    const double tol = 1e-7 * (1.0 + std::abs(z));
    int m = 0;
    for (const auto& level : levels) {
      if (std::any_of(level.begin(), level.end(),
                      [&](const auto& w) { return std::abs(w - z) <= tol; })) {
        ++m;
      }
    }
    out.push_back({z, std::max(1, m)});
  }
  return out;
}

int root_multiplicity(const ExactPolynomial& p, const ComplexRational& r) {
  if (p.is_zero()) return 0;
  const auto shifted = p.shifted(r);
  return std::max(0, shifted.valuation());
}

}  // namespace rigidity::symdom
