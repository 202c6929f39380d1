#pragma once

#include "rigidity/chplane/ball.hpp"

namespace rigidity::chplane {

/// Busemann function of the ray from the origin towards xi, normalised
/// to vanish at the origin:
///   B_xi(p) = log(|1 - <p, xi>| / sqrt(1 - |p|^2)).
/// Along that ray B_xi(tanh(t) xi) = -t.
double busemann(const BoundaryPoint& xi, const BallPoint& p);

/// exp(t_p) with t_p = -B_xi(p); the horocycle H(gamma, s) is the level
/// set {p : horocycle_level(xi, p) = s}. On the ray itself the level at
/// time t is e^t.
double horocycle_level(const BoundaryPoint& xi, const BallPoint& p);

}  // namespace rigidity::chplane
