#pragma once

#include <complex>
#include <vector>

#include "rigidity/flatsurf/origami.hpp"

namespace rigidity::flatsurf {

RIGIDITY_DEFINE_ERROR(NotPrimitive);

struct Direction {
  int p = 1;
  int q = 0;
};

// A maximal flat cylinder in a rational direction (p, q). Its core curve
// closes up after `periods` copies of (p, q), so the circumference is
// periods * |(p, q)| and the height is 1 / |(p, q)|.
struct Cylinder {
  double circumference = 0.0;
  double height = 0.0;
  std::complex<double> core_holonomy;
  int periods = 0;
  std::vector<int> squares;  // squares crossed by the core curve, in order
};

struct CylinderDecomposition {
  Direction direction;
  std::vector<Cylinder> cylinders;

  double area() const;
};

/// Cylinders of the origami in direction (p, q). Since every square corner
/// is marked, each cylinder has height exactly 1/|(p,q)| and the periods
/// of all cylinders sum to the number of squares. For (1, 0) the
/// cylinders are the cycles of h. Throws NotPrimitive unless gcd(p,q) = 1.
CylinderDecomposition cylinder_decomposition(const Origami& o, Direction direction);

/// i(F(q), F(-q)) as the sum of height * circumference over horizontal
/// cylinders, computed exactly as the total number of periods. Throws
/// std::logic_error if it disagrees with the area.
long intersection_q_horizontal(const Origami& o);

}  // namespace rigidity::flatsurf
