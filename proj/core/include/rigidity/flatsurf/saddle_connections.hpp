#pragma once

#include <complex>
#include <vector>

#include "rigidity/flatsurf/origami.hpp"

namespace rigidity::flatsurf {

inline constexpr double kDefaultLengthBound = 10.0;

// Oriented flat segment between two marked points with no marked point in
// its interior. On an undeformed origami the holonomy is a Gaussian
// integer (dx, dy).
struct SaddleConnection {
  int start = 0;
  int end = 0;
  int start_square = 0;  // square whose corner the segment leaves from
  int dx = 0;
  int dy = 0;
  std::complex<double> holonomy;
  double length = 0.0;
};

/// Every oriented saddle connection of holonomy length <= max_length,
/// each exactly once. Output is sorted by length, then by angle of the
/// holonomy in [0, 2pi), then by start square.
std::vector<SaddleConnection> saddle_connections(const Origami& o,
                                                 double max_length = kDefaultLengthBound);

// Develops the straight segment leaving `square` with primitive integer
// holonomy (dx, dy). Directions in the closed-open quadrant
// {dx > 0, dy >= 0} leave from the lower-left corner, {dx <= 0, dy > 0}
// from the lower-right, {dx < 0, dy <= 0} from the upper-right and
// {dx >= 0, dy < 0} from the upper-left.
SaddleConnection develop_saddle_connection(const Origami& o, int square, int dx, int dy);

}  // namespace rigidity::flatsurf
