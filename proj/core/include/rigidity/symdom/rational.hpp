#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigidity/error.hpp"

namespace rigidity::symdom {

RIGIDITY_DEFINE_ERROR(ParseError);

using Rational = boost::multiprecision::cpp_rational;

// Exact element of Q(i).
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design of a field
  ComplexRational(int r) : re(r) {}                  // NOLINT
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  ComplexRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  std::complex<double> to_complex() const;

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);
  ComplexRational& operator/=(const ComplexRational& o);  // throws std::domain_error on 0

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
};

std::string to_string(const ComplexRational& z);

// Parses "0.0625", "-3", "1e-3" or "p/q" exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

// Exact rational that the double x represents.
Rational exact_rational(double x);

// Best rational approximations of x with denominator <= max_denominator,
// from its continued fraction, in order of increasing denominator.
std::vector<Rational> convergents(double x, long long max_denominator);

}  // namespace rigidity::symdom
