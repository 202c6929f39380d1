#pragma once

#include <string>

#include "rigidity/chplane/ball.hpp"

namespace rigidity::chplane {

RIGIDITY_DEFINE_ERROR(CoincidentEndpoints);
RIGIDITY_DEFINE_ERROR(RootNotBracketed);

/// Complete unit-speed real geodesic between two boundary points, with
/// point(t) -> `positive` as t -> +inf and -> `negative` as t -> -inf.
///
/// With null vectors A = (positive, 1), B = (negative, 1) and c the unit
/// complex number making <A, cB> real and negative, the curve is the
/// projectivisation of e^t A + e^-t c B. For real endpoints this is the
/// Klein-model chord m + tanh(t) (positive - negative)/2 with m the chord
/// midpoint, and point(0) = m.
class RealGeodesic {
 public:
  RealGeodesic(const BoundaryPoint& positive, const BoundaryPoint& negative);

  BallPoint point(double t) const;
  BallPoint operator()(double t) const { return point(t); }

  // Point at chord-like parameter u = tanh(t) in (-1, 1).
  BallPoint at_parameter(double u) const;

  const BoundaryPoint& positive_end() const { return positive_; }
  const BoundaryPoint& negative_end() const { return negative_; }

 private:
  BoundaryPoint positive_;
  BoundaryPoint negative_;
  Complex twist_;
};

RealGeodesic real_geodesic(const BoundaryPoint& positive, const BoundaryPoint& negative);

struct Step2Result {
  BallPoint p1;  // on H(gamma_1, 1)
  BallPoint p2;  // on H(gamma_2, 1)
  double t1 = 0.0;
  double t2 = 0.0;
  double distance = 0.0;
  double intersection = 0.0;  // e^{-distance}
};

inline constexpr double kRootTolerance = 1e-12;

/// Locates where the geodesic delta from (0,1) to (e^{-i twist}, 0) meets
/// the level-1 horocycles of gamma_1 (endpoint (e^{-i twist}, 0)) and
/// gamma_2 (endpoint (0, 1)) by bisection in u = tanh(t) to `tolerance`,
/// then reports their distance and e^{-distance}. twist = 0 is the
/// untwisted configuration; nonzero twist precomposes gamma_1 with
/// (z, w) -> (e^{-i twist} z, w).
Step2Result step2_verify(double twist = 0.0, double tolerance = kRootTolerance);

// { "P1": [re, im, re, im], "P2": [...], "distance": x, "intersection": y }
std::string step2_json(const Step2Result& result);

}  // namespace rigidity::chplane
