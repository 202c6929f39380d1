#include "rigidity/symdom/matrix_path.hpp"

#include <stdexcept>

namespace rigidity::symdom {
namespace {

using PolyMatrix = std::vector<std::vector<ExactPolynomial>>;

ExactPolynomial conj(const ExactPolynomial& p) {
  std::vector<ComplexRational> c;
  for (const auto& x : p.coefficients()) c.push_back(x.conj());
  return ExactPolynomial(std::move(c));
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.front().size();
  PolyMatrix c(n, std::vector<ExactPolynomial>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < k; ++l) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

}  // namespace

PolynomialMatrixPath::PolynomialMatrixPath(PolyMatrix entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front().empty()) {
    throw std::invalid_argument("matrix path needs at least one entry");
  }
  for (const auto& row : entries_) {
    if (row.size() != entries_.front().size()) throw std::invalid_argument("ragged matrix path");
  }
  const double norm0 = operator_norm(at(0.0));
  if (!(norm0 < 1.0 - kMembershipMargin)) {
    throw OnOrOutsideBoundary("matrix path starts outside the unit ball");
  }
}

Matrix PolynomialMatrixPath::at(double t) const {
  Matrix v(rows(), cols());
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) {
      v(i, j) = to_numeric(entries_[i][j]).evaluate(std::complex<double>(t, 0.0));
    }
  }
  return v;
}

PolyMatrix PolynomialMatrixPath::gram() const {
  PolyMatrix adjoint(cols(), std::vector<ExactPolynomial>(rows()));
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) adjoint[j][i] = conj(entries_[i][j]);
  }
  return multiply(adjoint, entries_);
}

BivariatePolynomial characteristic_polynomial(const PolyMatrix& h) {
  const int n = static_cast<int>(h.size());
  for (const auto& row : h) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix is not square");
  }
  const ExactPolynomial one = ExactPolynomial::constant(ComplexRational(1));
  // coeffs[k] multiplies lambda^k; coeffs[n] = 1.
  std::vector<ExactPolynomial> coeffs(n + 1);
  coeffs[n] = one;
  PolyMatrix m(n, std::vector<ExactPolynomial>(n));
  for (int k = 1; k <= n; ++k) {
    // M_k = H M_{k-1} + c_{n-k+1} I with M_0 = 0.
    PolyMatrix next = k == 1 ? PolyMatrix(n, std::vector<ExactPolynomial>(n)) : multiply(h, m);
    for (int i = 0; i < n; ++i) next[i][i] += coeffs[n - k + 1];
    m = std::move(next);
    ExactPolynomial trace;
    const PolyMatrix hm = multiply(h, m);
    for (int i = 0; i < n; ++i) trace += hm[i][i];
    coeffs[n - k] = trace * ComplexRational(Rational(-1, k));
  }
  return BivariatePolynomial(std::move(coeffs));
}

BivariatePolynomial charpoly_path(const PolynomialMatrixPath& path) {
  return characteristic_polynomial(path.gram());
}

}  // namespace rigidity::symdom
