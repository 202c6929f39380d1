#include "rigidity/symdom/bivariate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rigidity::symdom {

BivariatePolynomial::BivariatePolynomial(std::vector<ExactPolynomial> lambda_coefficients)
    : by_lambda_(std::move(lambda_coefficients)) {
  while (!by_lambda_.empty() && by_lambda_.back().is_zero()) by_lambda_.pop_back();
  if (by_lambda_.empty()) throw std::invalid_argument("bivariate polynomial is identically zero");
}

BivariatePolynomial BivariatePolynomial::from_terms(const std::vector<Term>& terms) {
  std::map<int, std::map<int, ComplexRational>> grid;
  int max_j = -1;
  for (const auto& term : terms) {
    if (term.t_power < 0 || term.lambda_power < 0) {
      throw std::invalid_argument("negative exponent in bivariate term");
    }
    grid[term.lambda_power][term.t_power] += term.coefficient;
    max_j = std::max(max_j, term.lambda_power);
  }
  std::vector<ExactPolynomial> by_lambda(max_j + 1);
  for (const auto& [j, row] : grid) {
    std::vector<ComplexRational> c(row.rbegin()->first + 1);
    for (const auto& [i, v] : row) c[i] = v;
    by_lambda[j] = ExactPolynomial(std::move(c));
  }
  return BivariatePolynomial(std::move(by_lambda));
}

int BivariatePolynomial::t_degree() const {
  int d = 0;
  for (const auto& c : by_lambda_) d = std::max(d, c.degree());
  return d;
}

ComplexRational BivariatePolynomial::coefficient(int t_power, int lambda_power) const {
  if (lambda_power < 0 || lambda_power > lambda_degree()) return {};
  return by_lambda_[lambda_power].coefficient(t_power);
}

std::vector<BivariatePolynomial::Term> BivariatePolynomial::terms() const {
  std::vector<Term> out;
  for (int j = 0; j <= lambda_degree(); ++j) {
    const auto& c = by_lambda_[j].coefficients();
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
      if (!c[i].is_zero()) out.push_back({i, j, c[i]});
    }
  }
  return out;
}

bool BivariatePolynomial::is_monic_in_lambda() const {
  return by_lambda_.back() == ExactPolynomial::constant(ComplexRational(1));
}

ExactPolynomial BivariatePolynomial::at_t(const ComplexRational& t0) const {
  std::vector<ComplexRational> c;
  c.reserve(by_lambda_.size());
  for (const auto& p : by_lambda_) c.push_back(p.evaluate(t0));
  return ExactPolynomial(std::move(c));
}

NumericPolynomial BivariatePolynomial::at_t(std::complex<double> t0) const {
  std::vector<std::complex<double>> c;
  c.reserve(by_lambda_.size());
  for (const auto& p : by_lambda_) c.push_back(to_numeric(p).evaluate(t0));
  return NumericPolynomial(std::move(c));
}

BivariatePolynomial BivariatePolynomial::shifted_lambda(const ComplexRational& lambda0) const {
  const int dt = t_degree();
  const int dl = lambda_degree();
  std::vector<std::vector<ComplexRational>> out(dl + 1, std::vector<ComplexRational>(dt + 1));
  for (int i = 0; i <= dt; ++i) {
    std::vector<ComplexRational> slice(dl + 1);
    for (int j = 0; j <= dl; ++j) slice[j] = by_lambda_[j].coefficient(i);
    const auto moved = ExactPolynomial(std::move(slice)).shifted(lambda0);
    for (int j = 0; j <= dl; ++j) out[j][i] = moved.coefficient(j);
  }
  std::vector<ExactPolynomial> by_lambda;
  for (auto& row : out) by_lambda.emplace_back(std::move(row));
  return BivariatePolynomial(std::move(by_lambda));
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  std::vector<ExactPolynomial> c(a.by_lambda_.size() + b.by_lambda_.size() - 1);
  for (std::size_t i = 0; i < a.by_lambda_.size(); ++i) {
    for (std::size_t j = 0; j < b.by_lambda_.size(); ++j) {
      c[i + j] += a.by_lambda_[i] * b.by_lambda_[j];
    }
  }
  return BivariatePolynomial(std::move(c));
}

std::string BivariatePolynomial::to_string() const {
  std::string out;
  auto ts = terms();
  std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) {
    return x.lambda_power != y.lambda_power ? x.lambda_power > y.lambda_power
                                            : x.t_power < y.t_power;
  });
  for (const auto& term : ts) {
    if (!out.empty()) out += " + ";
    out += symdom::to_string(term.coefficient);
    if (term.t_power > 0) out += "*t^" + std::to_string(term.t_power);
    if (term.lambda_power > 0) out += "*l^" + std::to_string(term.lambda_power);
  }
  return out;
}

ComplexRational resultant(const std::vector<ComplexRational>& a,
                          const std::vector<ComplexRational>& b) {
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  if (m < 0 || n < 0) return {};
  const int size = m + n;
  if (size == 0) return ComplexRational(1);
  std::vector<std::vector<ComplexRational>> s(size, std::vector<ComplexRational>(size));
  // Rows hold descending coefficients, shifted.
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  }
  ComplexRational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && s[pivot][col].is_zero()) ++pivot;
    if (pivot == size) return {};
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (s[r][col].is_zero()) continue;
      const ComplexRational f = s[r][col] / s[col][col];
      for (int k = col; k < size; ++k) s[r][k] -= f * s[col][k];
    }
  }
  return det;
}

ExactPolynomial interpolate(const std::vector<ComplexRational>& xs,
                            const std::vector<ComplexRational>& ys) {
  const std::size_t n = xs.size();
  std::vector<ComplexRational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    }
  }
  ExactPolynomial result;
  for (std::size_t k = n; k-- > 0;) {
    // result = result * (x - xs[k]) + dd[k]
    result = result * ExactPolynomial(std::vector<ComplexRational>{-xs[k], ComplexRational(1)}) +
             ExactPolynomial::constant(dd[k]);
  }
  return result;
}

namespace {

using Coeffs = std::vector<ExactPolynomial>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

ExactPolynomial content(const Coeffs& a) {
  ExactPolynomial g;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

Coeffs primitive_part(Coeffs a) {
  trim(a);
  if (a.empty()) return a;
  const ExactPolynomial g = content(a);
  for (auto& c : a) {
    auto [q, r] = divmod(c, g);
    if (!r.is_zero()) throw std::logic_error("content does not divide coefficient");
    c = std::move(q);
  }
  return a;
}

// Pseudo-division of a by b in lambda: lc(b)^k a = quo * b + rem.
std::pair<Coeffs, Coeffs> pseudo_divmod(Coeffs a, const Coeffs& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const ExactPolynomial& lead = b.back();
  Coeffs quo;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const ExactPolynomial top = a.back();
    for (auto& c : a) c *= lead;
    for (auto& c : quo) c *= lead;
    if (static_cast<int>(quo.size()) < shift + 1) quo.resize(shift + 1);
    quo[shift] += top;
    for (int j = 0; j <= db; ++j) a[shift + j] -= top * b[j];
    trim(a);
  }
  trim(quo);
  return {quo, a};
}

}  // namespace

BivariatePolynomial lambda_derivative(const BivariatePolynomial& p) {
  Coeffs d;
  const auto& c = p.lambda_coefficients();
  for (std::size_t j = 1; j < c.size(); ++j) {
    d.push_back(c[j] * ComplexRational(static_cast<int>(j)));
  }
  return BivariatePolynomial(std::move(d));
}

BivariatePolynomial squarefree_part(const BivariatePolynomial& p) {
  if (p.lambda_degree() < 1) throw std::invalid_argument("polynomial does not involve lambda");
  Coeffs a = primitive_part(p.lambda_coefficients());
  Coeffs b = primitive_part(lambda_derivative(p).lambda_coefficients());
  while (!b.empty()) {
    Coeffs r = pseudo_divmod(a, b).second;
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  // a = gcd(P, P') up to a factor in Q(i)[t].
  Coeffs quotient = p.lambda_coefficients();
  if (a.size() > 1) {
    auto [q, rem] = pseudo_divmod(quotient, a);
    if (!rem.empty()) throw std::logic_error("gcd does not divide P");
    quotient = std::move(q);
  }
  quotient = primitive_part(std::move(quotient));
  if (quotient.back().degree() == 0) {
    const ComplexRational lead = quotient.back().coefficient(0);
    for (auto& c : quotient) c *= ComplexRational(1) / lead;
  }
  return BivariatePolynomial(std::move(quotient));
}

ExactPolynomial lambda_discriminant(const BivariatePolynomial& p) {
  const int d = p.lambda_degree();
  if (d < 1) return ExactPolynomial::constant(ComplexRational(1));
  const int bound = p.t_degree() * (2 * d - 1);
  std::vector<ComplexRational> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    const ComplexRational t0(k);
    std::vector<ComplexRational> a(d + 1), b(d);
    for (int j = 0; j <= d; ++j) a[j] = p.lambda_coefficients()[j].evaluate(t0);
    for (int j = 1; j <= d; ++j) b[j - 1] = a[j] * ComplexRational(j);
    // Ascending -> formal degrees d and d - 1 are kept even if leading terms vanish.
    xs.push_back(t0);
    ys.push_back(resultant(a, b));
  }
  ExactPolynomial r = interpolate(xs, ys);
  if ((d * (d - 1) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace rigidity::symdom
