#include "rigidity/chplane/ball.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rigidity::chplane {

BallPoint::BallPoint(Complex z, Complex w) : z_(z), w_(w) {
  const double r2 = std::norm(z) + std::norm(w);
  if (!(r2 < 1.0)) {
    std::ostringstream msg;
    msg << "point (" << z << ", " << w << ") has |p|^2 = " << r2 << " >= 1";
    throw OutsideBall(msg.str());
  }
}

BoundaryPoint::BoundaryPoint(Complex xi1, Complex xi2) {
  const double r = std::sqrt(std::norm(xi1) + std::norm(xi2));
  if (!(std::abs(r - 1.0) <= 1e-10)) {
    std::ostringstream msg;
    msg << "boundary point (" << xi1 << ", " << xi2 << ") has norm " << r;
    throw NotOnBoundary(msg.str());
  }
  xi1_ = xi1 / r;
  xi2_ = xi2 / r;
}

BoundaryPoint BoundaryPoint::direction(Complex xi1, Complex xi2) {
  const double r = std::sqrt(std::norm(xi1) + std::norm(xi2));
  if (!(r > 0.0) || !std::isfinite(r)) throw NotOnBoundary("zero vector has no direction");
  return BoundaryPoint(xi1 / r, xi2 / r, Unchecked{});
}

Complex inner(Complex a1, Complex a2, Complex b1, Complex b2) {
  return a1 * std::conj(b1) + a2 * std::conj(b2);
}

double distance(const BallPoint& p, const BallPoint& q) {
  const double diff = std::norm(p.z() - q.z()) + std::norm(p.w() - q.w());
  const double wedge = std::norm(p.z() * q.w() - p.w() * q.z());
  const double denom = std::norm(1.0 - inner(p.z(), p.w(), q.z(), q.w()));
  const double tanh_sq = std::clamp((diff - wedge) / denom, 0.0, 1.0);
  return std::atanh(std::sqrt(tanh_sq));
}

}  // namespace rigidity::chplane
