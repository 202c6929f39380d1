#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance binary. None of these call into the algorithms they check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rigidity/chplane/ball.hpp"
#include "rigidity/chplane/isometry.hpp"
#include "rigidity/flatsurf/origami.hpp"

namespace oracle {

inline const std::vector<std::string>& bundled_origamis() {
  static const std::vector<std::string> names = {"torus", "two_square", "L",
                                                 "staircase4", "staircase5", "staircase6"};
  return names;
}

inline std::string data_path(const std::string& relative) {
  return std::string(RIGIDITY_DATA_DIR) + "/" + relative;
}

// ---------------------------------------------------------------- origamis

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Corner labels 4*i + c with c = 0 LL, 1 LR, 2 UR, 3 UL, glued along the
// edges of the square complex.
struct CornerLabels {
  UnionFind uf;
  int classes = 0;

  explicit CornerLabels(const rigidity::flatsurf::Origami& o) : uf(4 * o.squares()) {
    for (int i = 0; i < o.squares(); ++i) {
      const int r = o.right(i);
      const int u = o.up(i);
      uf.unite(4 * i + 1, 4 * r + 0);  // right edge
      uf.unite(4 * i + 2, 4 * r + 3);
      uf.unite(4 * i + 3, 4 * u + 0);  // top edge
      uf.unite(4 * i + 2, 4 * u + 1);
    }
    for (int k = 0; k < 4 * o.squares(); ++k) classes += uf.find(k) == k ? 1 : 0;
  }
  int label(int square, int corner) { return uf.find(4 * square + corner); }
};

// Uniformly random permutation pair, rejected until transitive.
inline rigidity::flatsurf::Origami random_origami(std::mt19937_64& rng, int n) {
  std::vector<int> h(n), v(n);
  for (;;) {
    std::iota(h.begin(), h.end(), 1);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(h.begin(), h.end(), rng);
    std::shuffle(v.begin(), v.end(), rng);
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
      uf.unite(i, h[i] - 1);
      uf.unite(i, v[i] - 1);
    }
    bool connected = true;
    for (int i = 0; i < n; ++i) connected = connected && uf.find(i) == uf.find(0);
    if (connected) return rigidity::flatsurf::build_origami(n, h, v);
  }
}

// A saddle connection as (start vertex, end vertex, dx, dy, start square),
// vertices given by CornerLabels roots.
using ConnectionKey = std::tuple<int, int, int, int, int>;

// Develops the segment with primitive holonomy (dx, dy) from the corner of
// `square` that faces the direction, by translating it slightly into the
// square and recording the cells containing the midpoints between
// successive grid-line crossings.
inline ConnectionKey develop_by_midpoints(const rigidity::flatsurf::Origami& o, CornerLabels& labels,
                                          int square, int dx, int dy) {
  int corner;
  double ox, oy;       // corner position in the cell of `square`
  double sx, sy;       // shift into the open square
  constexpr double eps = 1e-7;
  constexpr double phi = 0.6180339887;
  if (dx > 0 && dy >= 0) {
    corner = 0, ox = 0, oy = 0, sx = eps, sy = eps * phi;
  } else if (dx <= 0 && dy > 0) {
    corner = 1, ox = 1, oy = 0, sx = -eps, sy = eps * phi;
  } else if (dx < 0 && dy <= 0) {
    corner = 2, ox = 1, oy = 1, sx = -eps, sy = -eps * phi;
  } else {
    corner = 3, ox = 0, oy = 1, sx = eps, sy = -eps * phi;
  }
  const double x0 = ox + sx;
  const double y0 = oy + sy;
  std::vector<double> cuts = {0.0, 1.0};
  auto add_cuts = [&](double start, int delta) {
    if (delta == 0) return;
    const double lo = std::min(start, start + delta);
    const double hi = std::max(start, start + delta);
    for (double k = std::ceil(lo); k <= hi; k += 1.0) {
      const double t = (k - start) / delta;
      if (t > 0.0 && t < 1.0) cuts.push_back(t);
    }
  };
  add_cuts(x0, dx);
  add_cuts(y0, dy);
  std::sort(cuts.begin(), cuts.end());

  int cx = 0, cy = 0, sq = square;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double m = 0.5 * (cuts[k] + cuts[k + 1]);
    const int nx = static_cast<int>(std::floor(x0 + m * dx));
    const int ny = static_cast<int>(std::floor(y0 + m * dy));
    if (k == 0 && (nx != 0 || ny != 0)) throw std::logic_error("segment does not start in its square");
    while (nx != cx || ny != cy) {
      if (std::abs(nx - cx) + std::abs(ny - cy) != 1) throw std::logic_error("diagonal cell step");
      if (nx > cx) sq = o.right(sq), ++cx;
      else if (nx < cx) sq = o.left(sq), --cx;
      else if (ny > cy) sq = o.up(sq), ++cy;
      else sq = o.down(sq), --cy;
    }
  }
  const int ex = static_cast<int>(std::lround(ox + dx)) - cx;
  const int ey = static_cast<int>(std::lround(oy + dy)) - cy;
  static const std::map<std::pair<int, int>, int> corner_of = {
      {{0, 0}, 0}, {{1, 0}, 1}, {{1, 1}, 2}, {{0, 1}, 3}};
  const int end_corner = corner_of.at({ex, ey});
  return {labels.label(square, corner), labels.label(sq, end_corner), dx, dy, square};
}

// All oracle connections of length <= bound.
inline std::vector<ConnectionKey> brute_force_connections(const rigidity::flatsurf::Origami& o,
                                                          double bound) {
  CornerLabels labels(o);
  std::vector<ConnectionKey> out;
  const int r = static_cast<int>(std::floor(bound));
  for (int dx = -r; dx <= r; ++dx) {
    for (int dy = -r; dy <= r; ++dy) {
      if ((dx == 0 && dy == 0) || std::gcd(dx, dy) != 1) continue;
      if (dx * dx + dy * dy > bound * bound) continue;
      for (int s = 0; s < o.squares(); ++s) out.push_back(develop_by_midpoints(o, labels, s, dx, dy));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ CH^2

using Complex = std::complex<double>;

// Random element of the identity component of U(2,1): exp(J A) with A
// skew-Hermitian, since (J A)* J + J (J A) = 0.
inline Eigen::Matrix3cd random_form_preserving(std::mt19937_64& rng, double scale = 0.8) {
  std::normal_distribution<double> g(0.0, scale);
  Eigen::Matrix3cd a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  a = 0.5 * (a - a.adjoint()).eval();
  const Eigen::Matrix3cd j = Eigen::Vector3cd(1.0, 1.0, -1.0).asDiagonal();
  return (j * a).exp();
}

inline rigidity::chplane::BallPoint random_ball_point(std::mt19937_64& rng, double max_radius = 0.95) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::Vector4d x(g(rng), g(rng), g(rng), g(rng));
  x.normalize();
  const double r = max_radius * std::pow(u(rng), 0.25);
  return {Complex(r * x[0], r * x[1]), Complex(r * x[2], r * x[3])};
}

inline rigidity::chplane::BoundaryPoint random_boundary_point(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return rigidity::chplane::BoundaryPoint::direction(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
}

// d(p, tanh(t) xi) - t in 50 decimal digits, from
// cosh^2 d = |1 - <p,q>|^2 / ((1 - |p|^2)(1 - |q|^2)).
inline double busemann_limit(const rigidity::chplane::BoundaryPoint& xi,
                             const rigidity::chplane::BallPoint& p, double t) {
  using F = boost::multiprecision::cpp_bin_float_50;
  const F th = tanh(F(t));
  const F q1r = th * F(xi.xi1().real()), q1i = th * F(xi.xi1().imag());
  const F q2r = th * F(xi.xi2().real()), q2i = th * F(xi.xi2().imag());
  const F p1r = p.z().real(), p1i = p.z().imag(), p2r = p.w().real(), p2i = p.w().imag();
  // <p, q> = p1 conj(q1) + p2 conj(q2)
  const F ipr = p1r * q1r + p1i * q1i + p2r * q2r + p2i * q2i;
  const F ipi = p1i * q1r - p1r * q1i + p2i * q2r - p2r * q2i;
  const F num = (1 - ipr) * (1 - ipr) + ipi * ipi;
  const F np = p1r * p1r + p1i * p1i + p2r * p2r + p2i * p2i;
  const F one_minus_q = 1 / (cosh(F(t)) * cosh(F(t)));  // 1 - tanh^2
  const F cosh2 = num / ((1 - np) * one_minus_q);
  const F d = acosh(sqrt(cosh2));
  return static_cast<double>(d - F(t));
}

// Poincare distance on the unit disk: artanh |(a - b) / (1 - a conj(b))|.
inline double disk_distance(Complex a, Complex b) {
  return std::atanh(std::abs((a - b) / (1.0 - a * std::conj(b))));
}

}  // namespace oracle
