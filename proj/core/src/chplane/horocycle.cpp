#include "rigidity/chplane/horocycle.hpp"

#include <cmath>

namespace rigidity::chplane {

double busemann(const BoundaryPoint& xi, const BallPoint& p) {
  const double gap = std::abs(1.0 - inner(p.z(), p.w(), xi.xi1(), xi.xi2()));
  return std::log(gap) - 0.5 * std::log1p(-p.norm_sq());
}

double horocycle_level(const BoundaryPoint& xi, const BallPoint& p) {
  return std::exp(-busemann(xi, p));
}

}  // namespace rigidity::chplane
