#pragma once

#include "rigidity/error.hpp"
#include "rigidity/symdom/bivariate.hpp"

namespace rigidity::symdom {

RIGIDITY_DEFINE_ERROR(BranchPointOnCircle);
RIGIDITY_DEFINE_ERROR(BranchPointInside);

inline constexpr int kDefaultMonodromySteps = 512;
inline constexpr double kCollisionTolerance = 1e-8;

/// Cycle length of the top branch under continuation of the roots of
/// P(t, .) once around |t| = radius.
///
/// The top branch is the root of largest real part at t = radius. Roots are
/// tracked on the square-free part of P with a linear predictor and
/// nearest-neighbour matching. Throws BranchPointInside if a non-zero
/// branch point (discriminant root or pole) has modulus below radius,
/// BranchPointOnCircle if one lies on the circle or two tracked roots come
/// within kCollisionTolerance.
int monodromy_branch_index(const BivariatePolynomial& p, double radius,
                           int steps = kDefaultMonodromySteps);

// Half the modulus of the nearest non-zero branch point, capped at `cap`.
double isolating_radius(const BivariatePolynomial& p, double cap = 0.1);

}  // namespace rigidity::symdom
