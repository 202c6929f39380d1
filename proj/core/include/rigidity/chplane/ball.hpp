#pragma once

#include <complex>

#include "rigidity/error.hpp"

namespace rigidity::chplane {

RIGIDITY_DEFINE_ERROR(OutsideBall);
RIGIDITY_DEFINE_ERROR(NotOnBoundary);

using Complex = std::complex<double>;

// Point of CH^2, the open unit ball {|z|^2 + |w|^2 < 1} in C^2.
class BallPoint {
 public:
  BallPoint() = default;
  // Throws OutsideBall unless |z|^2 + |w|^2 < 1.
  BallPoint(Complex z, Complex w);

  Complex z() const { return z_; }
  Complex w() const { return w_; }
  double norm_sq() const { return std::norm(z_) + std::norm(w_); }

 private:
  Complex z_{};
  Complex w_{};
};

// Unit vector of C^2, a point of the sphere at infinity.
class BoundaryPoint {
 public:
  // Accepts vectors within 1e-10 of unit length and renormalises them;
  // anything else throws NotOnBoundary.
  BoundaryPoint(Complex xi1, Complex xi2);

  // Normalises any non-zero vector.
  static BoundaryPoint direction(Complex xi1, Complex xi2);

  Complex xi1() const { return xi1_; }
  Complex xi2() const { return xi2_; }

 private:
  struct Unchecked {};
  BoundaryPoint(Complex xi1, Complex xi2, Unchecked) : xi1_(xi1), xi2_(xi2) {}

  Complex xi1_;
  Complex xi2_;
};

// Standard Hermitian product <a, b> = a1 conj(b1) + a2 conj(b2).
Complex inner(Complex a1, Complex a2, Complex b1, Complex b2);

/// Kobayashi distance on CH^2 (holomorphic curvature -4), from
///   tanh^2 d = (|p - q|^2 - |p1 q2 - p2 q1|^2) / |1 - <p, q>|^2,
/// which is cosh^2 d = |1 - <p,q>|^2 / ((1 - |p|^2)(1 - |q|^2)) rewritten
/// to avoid cancellation near the diagonal.
double distance(const BallPoint& p, const BallPoint& q);

}  // namespace rigidity::chplane
