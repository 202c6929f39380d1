#include "rigidity/symdom/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

#include "rigidity/symdom/roots.hpp"

namespace rigidity::symdom {

namespace {

constexpr int kMaxSteps = 32;

struct Edge {
  int j1, i1, j2, i2;
  long long p, q;  // slope (i1 - i2) / (j2 - j1) = p / q in lowest terms
};

// Lowest power of s in the coefficient of mu^j, or -1 if that coefficient
// is zero.
std::vector<int> lowest_powers(const BivariatePolynomial& q) {
  std::vector<int> low;
  for (const auto& c : q.lambda_coefficients()) low.push_back(c.valuation());
  return low;
}

// Lower convex hull of {(j, low[j])} between j = from and j = to.
std::vector<Edge> lower_edges(const std::vector<int>& low, int from, int to) {
  std::vector<Edge> edges;
  int j = from;
  while (j < to) {
    int best = -1;
    for (int k = j + 1; k <= to; ++k) {
      if (low[k] < 0) continue;
      // slope(k) <= slope(best), farthest on ties
      if (best < 0 ||
          static_cast<long long>(low[k] - low[j]) * (best - j) <=
              static_cast<long long>(low[best] - low[j]) * (k - j)) {
        best = k;
      }
    }
    const long long rise = low[j] - low[best];
    const long long run = best - j;
    const long long g = std::gcd(rise, run);
    edges.push_back({j, low[j], best, low[best], rise / g, run / g});
    j = best;
  }
  return edges;
}

// phi(w) = sum_k a(i1 - k p, j1 + k q) w^k along the edge.
ExactPolynomial edge_polynomial(const BivariatePolynomial& q, const Edge& e) {
  std::vector<ComplexRational> c;
  for (long long k = 0; e.j1 + k * e.q <= e.j2; ++k) {
    c.push_back(q.coefficient(static_cast<int>(e.i1 - k * e.p), static_cast<int>(e.j1 + k * e.q)));
  }
  return ExactPolynomial(std::move(c));
}

struct Candidate {
  bool zero_branch = false;
  const Edge* edge = nullptr;
  std::complex<double> w;
  std::complex<double> c;
  int multiplicity = 1;
};

bool is_real(const Candidate& a) {
  return a.zero_branch || std::abs(a.c.imag()) <= 1e-9 * std::max(1.0, std::abs(a.c));
}

int sign(const Candidate& a) {
  if (a.zero_branch) return 0;
  const double re = a.c.real();
  if (std::abs(re) <= 1e-9 * std::max(1.0, std::abs(a.c))) return 0;
  return re > 0 ? 1 : -1;
}

// True when branch a exceeds branch b for small s > 0.
bool above(const Candidate& a, const Candidate& b) {
  const int sa = sign(a);
  const int sb = sign(b);
  if (sa != sb) return sa > sb;
  if (sa == 0) return a.zero_branch && !b.zero_branch;
  // Leading exponents compared by cross-multiplication.
  const long long ea = a.edge->p * b.edge->q;
  const long long eb = b.edge->p * a.edge->q;
  if (ea != eb) return sa > 0 ? ea < eb : ea > eb;
  return a.c.real() > b.c.real();
}

// Q(s^q, s^p (c + mu)) / s^V where V is the value of the edge.
BivariatePolynomial substitute(const BivariatePolynomial& q, const Edge& e,
                               const ComplexRational& c) {
  const long long v = e.q * e.i1 + e.p * e.j1;
  const ExactPolynomial shift(std::vector<ComplexRational>{c, ComplexRational(1)});
  std::vector<BivariatePolynomial::Term> out;
  for (const auto& term : q.terms()) {
    const long long power = e.q * term.t_power + e.p * term.lambda_power - v;
    const ExactPolynomial expansion = pow(shift, term.lambda_power);
    for (int k = 0; k <= expansion.degree(); ++k) {
      out.push_back({static_cast<int>(power), k, term.coefficient * expansion.coefficient(k)});
    }
  }
  return BivariatePolynomial::from_terms(out);
}

}  // namespace

PuiseuxBranchReport newton_puiseux_index(const BivariatePolynomial& p) {
  if (p.at_t(ComplexRational(0)).is_zero()) {
    throw DegenerateAtZero("P(0, lambda) vanishes identically");
  }
  if (p.lambda_degree() < 1) throw NoRealBranch("P does not involve lambda");
  const BivariatePolynomial reduced = squarefree_part(p);
  const ExactPolynomial at_zero = reduced.at_t(ComplexRational(0));

  std::optional<RootCluster> top;
  for (const auto& root : distinct_roots(at_zero)) {
    if (std::abs(root.value.imag()) > 1e-9 * (1.0 + std::abs(root.value))) continue;
    if (!top || root.value.real() > top->value.real()) top = root;
  }
  if (!top) throw NoRealBranch("P(0, lambda) has no real root");

  PuiseuxBranchReport report;
  const auto lambda0 = gaussian_rational_root_near(at_zero, {top->value.real(), 0.0});
  if (!lambda0) {
    if (top->multiplicity > 1) {
      throw NonRationalBranchValue("top root of P(0, lambda) is irrational and multiple");
    }
    // Simple root: lambda'(0) = -P_t / P_lambda.
    const std::complex<double> x = top->value.real();
    std::complex<double> pt{};
    for (int j = 0; j <= reduced.lambda_degree(); ++j) {
      pt += reduced.coefficient(1, j).to_complex() * std::pow(x, j);
    }
    const auto slope = -pt / to_numeric(at_zero.derivative()).evaluate(x);
    report.exact = false;
    report.base_value = x;
    report.K = 1;
    if (slope != std::complex<double>{}) {
      report.terms.push_back({Rational(1), slope});
      report.leading_exponent = 1;
      report.leading_coefficient = slope;
    }
    return report;
  }
  report.base_value = lambda0->to_complex();

  BivariatePolynomial q = reduced.shifted_lambda(*lambda0);
  long long ramification = 1;
  Rational offset(0);
  for (int step = 0; step < kMaxSteps; ++step) {
    const auto low = lowest_powers(q);
    int from = 0;
    while (low[from] < 0) ++from;
    int to = from;
    while (low[to] != 0) ++to;

    const auto edges = lower_edges(low, from, to);
    std::vector<Candidate> candidates;
    if (from > 0) candidates.push_back({true});
    for (const auto& e : edges) {
      for (const auto& root : distinct_roots(edge_polynomial(q, e))) {
        const double r = std::pow(std::abs(root.value), 1.0 / static_cast<double>(e.q));
        for (long long l = 0; l < e.q; ++l) {
          const double arg = (std::arg(root.value) + 2.0 * std::numbers::pi * static_cast<double>(l)) /
                             static_cast<double>(e.q);
          candidates.push_back({false, &e, root.value, std::polar(r, arg), root.multiplicity});
        }
      }
    }
    if (std::any_of(candidates.begin(), candidates.end(), is_real)) {
      std::erase_if(candidates, [](const Candidate& x) { return !is_real(x); });
    }
    const Candidate best = *std::max_element(
        candidates.begin(), candidates.end(),
        [](const Candidate& a, const Candidate& b) { return above(b, a); });

    if (best.zero_branch) {
      report.K = static_cast<int>(ramification);
      break;
    }
    const Edge& e = *best.edge;
    const Rational exponent = offset + Rational(e.p) / Rational(e.q * ramification);
    report.terms.push_back({exponent, best.c});
    if (best.multiplicity == 1) {
      report.K = static_cast<int>(ramification * e.q);
      break;
    }
    const auto w = gaussian_rational_root_near(edge_polynomial(q, e), best.w);
    std::optional<ComplexRational> c;
    if (w) {
      // c^q = w exactly.
      std::vector<ComplexRational> coeffs(e.q + 1);
      coeffs[0] = -*w;
      coeffs[e.q] = ComplexRational(1);
      c = gaussian_rational_root_near(ExactPolynomial(std::move(coeffs)), best.c);
    }
    if (!c) {
      throw UnresolvedBranch("coinciding branches with an irrational Puiseux coefficient");
    }
    report.terms.back().coefficient = c->to_complex();
    q = substitute(q, e, *c);
    ramification *= e.q;
    offset = exponent;
    if (step + 1 == kMaxSteps) {
      throw UnresolvedBranch("branches not separated within the step limit");
    }
  }
  if (!report.terms.empty()) {
    report.leading_exponent = report.terms.front().exponent;
    report.leading_coefficient = report.terms.front().coefficient;
  }
  return report;
}

}  // namespace rigidity::symdom
