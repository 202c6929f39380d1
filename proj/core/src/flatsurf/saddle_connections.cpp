#include "rigidity/flatsurf/saddle_connections.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace rigidity::flatsurf {
namespace {

struct Frame {
  Corner start;
  Corner finish;
};

// Start and end corner for each quadrant. Axis directions run along an
// edge of the start square and finish at the adjacent corner.
Frame frame_for(int dx, int dy) {
  const bool axis = dx == 0 || dy == 0;
  if (dx > 0 && dy >= 0) return {Corner::LowerLeft, axis ? Corner::LowerRight : Corner::UpperRight};
  if (dx <= 0 && dy > 0) return {Corner::LowerRight, axis ? Corner::UpperRight : Corner::UpperLeft};
  if (dx < 0 && dy <= 0) return {Corner::UpperRight, axis ? Corner::UpperLeft : Corner::LowerLeft};
  return {Corner::UpperLeft, axis ? Corner::LowerLeft : Corner::LowerRight};
}

double angle_of(int dx, int dy) {
  double a = std::atan2(static_cast<double>(dy), static_cast<double>(dx));
  return a < 0 ? a + 2.0 * std::numbers::pi : a;
}

}  // namespace

SaddleConnection develop_saddle_connection(const Origami& o, int square, int dx, int dy) {
  if (std::gcd(dx, dy) != 1) {
    throw std::invalid_argument("saddle connection holonomy must be primitive");
  }
  const Frame frame = frame_for(dx, dy);
  const long ax = std::abs(dx);
  const long ay = std::abs(dy);

  // The segment crosses ax + ay - 2 edges (none for axis directions); at
  // each step it leaves through the vertical side iff the next vertical
  // grid line comes first, compared exactly as (cx+1)/ax < (cy+1)/ay.
  int current = square;
  long cx = 0;
  long cy = 0;
  if (ax > 0 && ay > 0) {
    for (long step = 0; step < ax + ay - 2; ++step) {
      if ((cx + 1) * ay < (cy + 1) * ax) {
        current = dx > 0 ? o.right(current) : o.left(current);
        ++cx;
      } else {
        current = dy > 0 ? o.up(current) : o.down(current);
        ++cy;
      }
    }
  }

  SaddleConnection sc;
  sc.start = o.vertex_at(square, frame.start);
  sc.end = o.vertex_at(current, frame.finish);
  sc.start_square = square;
  sc.dx = dx;
  sc.dy = dy;
  sc.holonomy = {static_cast<double>(dx), static_cast<double>(dy)};
  sc.length = std::hypot(static_cast<double>(dx), static_cast<double>(dy));
  return sc;
}

std::vector<SaddleConnection> saddle_connections(const Origami& o, double max_length) {
  std::vector<SaddleConnection> out;
  if (!(max_length >= 1.0)) return out;
  const int bound = static_cast<int>(std::floor(max_length));
  const double bound_sq = max_length * max_length;
  for (int dx = -bound; dx <= bound; ++dx) {
    for (int dy = -bound; dy <= bound; ++dy) {
      if (std::gcd(dx, dy) != 1) continue;
      if (static_cast<double>(dx) * dx + static_cast<double>(dy) * dy > bound_sq) continue;
      for (int s = 0; s < o.squares(); ++s) out.push_back(develop_saddle_connection(o, s, dx, dy));
    }
  }
  std::sort(out.begin(), out.end(), [](const SaddleConnection& a, const SaddleConnection& b) {
    const long la = static_cast<long>(a.dx) * a.dx + static_cast<long>(a.dy) * a.dy;
    const long lb = static_cast<long>(b.dx) * b.dx + static_cast<long>(b.dy) * b.dy;
    if (la != lb) return la < lb;
    const double ta = angle_of(a.dx, a.dy);
    const double tb = angle_of(b.dx, b.dy);
    if (ta != tb) return ta < tb;
    return a.start_square < b.start_square;
  });
  return out;
}

}  // namespace rigidity::flatsurf
