#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rigidity/symdom/rational.hpp"

namespace rigidity::symdom {

inline bool is_zero_value(const ComplexRational& z) { return z.is_zero(); }
inline bool is_zero_value(const Rational& r) { return r == 0; }
inline bool is_zero_value(const std::complex<double>& z) { return z == std::complex<double>{}; }
inline bool is_zero_value(double x) { return x == 0.0; }

/// Dense univariate polynomial with coefficients in a ring F, stored in
/// ascending order with no trailing zeros. Division is only offered when
/// F is a field.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<F> ascending) : c_(std::move(ascending)) { trim(); }

  static Polynomial constant(F value) { return Polynomial(std::vector<F>{std::move(value)}); }
  static Polynomial monomial(F value, int power) {
    std::vector<F> c(power + 1, F{});
    c[power] = std::move(value);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coefficients() const { return c_; }

  F coefficient(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : F{}; }
  F leading() const { return c_.empty() ? F{} : c_.back(); }

  // Lowest power with a non-zero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (!is_zero_value(c_[k])) return static_cast<int>(k);
    }
    return -1;
  }

  template <class X>
  X evaluate(const X& x) const {
    X acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<int>(k));
    return Polynomial(std::move(d));
  }

  // p(x + a), by repeated synthetic division.
  Polynomial shifted(const F& a) const {
    std::vector<F> c = c_;
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
      for (int k = n - 2; k >= i; --k) c[k] += a * c[k + 1];
    }
    return Polynomial(std::move(c));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F{});
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F{});
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const F& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(Polynomial a, const F& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_value(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Quotient and remainder; F must be a field.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<F> quo(a.degree() - db + 1, F{});
    const F lead = b.leading();
    for (int k = a.degree(); k >= db; --k) {
      if (is_zero_value(rem[k])) continue;
      const F factor = rem[k] / lead;
      quo[k - db] = factor;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.c_[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    Polynomial out = *this;
    const F lead = leading();
    for (auto& x : out.c_) x /= lead;
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
Polynomial<F> pow(const Polynomial<F>& p, int k) {
  Polynomial<F> out = Polynomial<F>::constant(F(1));
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

using ExactPolynomial = Polynomial<ComplexRational>;
using NumericPolynomial = Polynomial<std::complex<double>>;

NumericPolynomial to_numeric(const ExactPolynomial& p);

}  // namespace rigidity::symdom
