#include "rigidity/symdom/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rigidity::symdom {

std::complex<double> ComplexRational::to_complex() const { return {to_double(re), to_double(im)}; }

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  if (im == 0 && o.im == 0) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (o.im == 0) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const ComplexRational& z) {
  if (z.im == 0) return z.re.str();
  return "(" + z.re.str() + (z.im < 0 ? "" : "+") + z.im.str() + "i)";
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&] { return ParseError("not an exact rational: \"" + s + "\""); };
  if (s.empty()) throw fail();
  using boost::multiprecision::cpp_int;
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      cpp_int num(s.substr(0, slash));
      cpp_int den(s.substr(slash + 1));
      if (den == 0) throw fail();
      return Rational(num, den);
    }
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    cpp_int digits = 0;
    long exponent = 0;
    bool any = false;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
      const char c = s[pos];
      if (c >= '0' && c <= '9') {
        digits = digits * 10 + (c - '0');
        if (seen_point) --exponent;
        any = true;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
    }
    if (!any) throw fail();
    if (pos < s.size()) {
      if (s[pos] != 'e' && s[pos] != 'E') throw fail();
      std::size_t used = 0;
      exponent += std::stol(s.substr(pos + 1), &used);
      if (pos + 1 + used != s.size()) throw fail();
    }
    Rational value(digits);
    const cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(std::labs(exponent)));
    if (exponent >= 0) {
      value *= scale;
    } else {
      value /= scale;
    }
    return negative ? Rational(-value) : value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw fail();
  }
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational form");
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  exponent -= 53;
  using boost::multiprecision::cpp_int;
  const cpp_int two_pow = cpp_int(1) << std::abs(exponent);
  if (exponent >= 0) {
    r *= two_pow;
  } else {
    r /= two_pow;
  }
  return r;
}

std::vector<Rational> convergents(double x, long long max_denominator) {
  std::vector<Rational> out;
  if (!std::isfinite(x)) return out;
  using boost::multiprecision::cpp_int;
  // Run the expansion on the exact value of x so no rounding creeps in.
  Rational rest = exact_rational(x);
  cpp_int h_prev = 0, h = 1;  // h_{-2}, h_{-1}
  cpp_int k_prev = 1, k = 0;  // k_{-2}, k_{-1}
  for (int iter = 0; iter < 64; ++iter) {
    cpp_int a = boost::multiprecision::numerator(rest) / boost::multiprecision::denominator(rest);
    if (rest < 0 && a * boost::multiprecision::denominator(rest) != boost::multiprecision::numerator(rest)) {
      a -= 1;  // floor for negatives
    }
    const cpp_int h_next = a * h + h_prev;
    const cpp_int k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    out.emplace_back(h_next, k_next);
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    const Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return out;
}

}  // namespace rigidity::symdom
