#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "rigidity/symdom/polynomial.hpp"

namespace rigidity::symdom {

// All complex roots with multiplicity, from the companion matrix followed
// by a few Newton steps on each root. Returns an empty vector for
// constants. Order: by real part, then imaginary part.
std::vector<std::complex<double>> numeric_roots(const NumericPolynomial& p);

struct RootCluster {
  std::complex<double> value;
  int multiplicity = 1;
};

// Distinct roots of an exact polynomial with their multiplicities. The
// multiplicity structure is exact (square-free chain g_{k+1} = gcd(g_k,
// g_k')); only root locations are numeric, taken from square-free factors
// so that each is a simple root.
std::vector<RootCluster> distinct_roots(const ExactPolynomial& p);

// Exact rational root of p within `radius` of x, found among the
// continued-fraction convergents of x and confirmed by exact evaluation.
std::optional<Rational> rational_root_near(const ExactPolynomial& p, double x,
                                           double radius = 1e-5,
                                           long long max_denominator = 1'000'000);

// As above for a root in Q(i), trying convergents of the real and
// imaginary parts independently.
std::optional<ComplexRational> gaussian_rational_root_near(const ExactPolynomial& p,
                                                           std::complex<double> z,
                                                           double radius = 1e-5,
                                                           long long max_denominator = 1'000'000);

// Multiplicity of an exact root (0 when r is not a root).
int root_multiplicity(const ExactPolynomial& p, const ComplexRational& r);

}  // namespace rigidity::symdom
