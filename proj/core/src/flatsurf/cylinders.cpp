#include "rigidity/flatsurf/cylinders.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rigidity::flatsurf {
namespace {

// Exact test 0 < num/den < 1 for den != 0.
bool strictly_inside_unit(long num, long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return num > 0 && num < den;
}

// Core curves are the leaves q*x - p*y = E/2 with E odd (local square
// coordinates), i.e. the midlines between consecutive lines through
// lattice points. Each square meets |p| + |q| of them. Returns the next
// (square, E) along direction (p, q).
std::pair<int, long> advance(const Origami& o, int square, long twice_level, int p, int q) {
  // Exit through the vertical side x = xs iff the crossing height
  // y = (q*xs - E/2)/p lies strictly between 0 and 1.
  if (p != 0) {
    const long xs = p > 0 ? 1 : 0;
    if (strictly_inside_unit(2L * q * xs - twice_level, 2L * p)) {
      if (p > 0) return {o.right(square), twice_level - 2L * q};
      return {o.left(square), twice_level + 2L * q};
    }
  }
  if (q > 0) return {o.up(square), twice_level + 2L * p};
  return {o.down(square), twice_level - 2L * p};
}

}  // namespace

double CylinderDecomposition::area() const {
  double total = 0.0;
  for (const auto& c : cylinders) total += c.circumference * c.height;
  return total;
}

CylinderDecomposition cylinder_decomposition(const Origami& o, Direction direction) {
  const int p = direction.p;
  const int q = direction.q;
  if (std::gcd(p, q) != 1) {
    throw NotPrimitive("direction (" + std::to_string(p) + ", " + std::to_string(q) +
                       ") is not a primitive integer vector");
  }
  // Range of q*x - p*y over the unit square, doubled.
  const long corners[] = {0, q, -p, q - p};
  long lo = corners[0];
  long hi = corners[0];
  for (long c : corners) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }

  const double norm = std::hypot(static_cast<double>(p), static_cast<double>(q));
  CylinderDecomposition out;
  out.direction = direction;
  std::map<std::pair<int, long>, bool> visited;
  for (int s = 0; s < o.squares(); ++s) {
    for (long level = 2 * lo + 1; level < 2 * hi; level += 2) {
      if (visited.count({s, level})) continue;
      Cylinder cyl;
      long segments = 0;
      std::pair<int, long> state{s, level};
      do {
        visited[state] = true;
        cyl.squares.push_back(state.first);
        state = advance(o, state.first, state.second, p, q);
        ++segments;
      } while (state != std::make_pair(s, level));
      // Each period (p, q) crosses |p| + |q| square segments.
      cyl.periods = static_cast<int>(segments / (std::abs(p) + std::abs(q)));
      cyl.circumference = cyl.periods * norm;
      cyl.height = 1.0 / norm;
      cyl.core_holonomy = {static_cast<double>(cyl.periods) * p,
                           static_cast<double>(cyl.periods) * q};
      out.cylinders.push_back(std::move(cyl));
    }
  }
  return out;
}

long intersection_q_horizontal(const Origami& o) {
  const auto decomposition = cylinder_decomposition(o, {1, 0});
  long total = 0;
  for (const auto& c : decomposition.cylinders) total += c.periods;  // height * circumference
  if (total != o.squares()) {
    throw std::logic_error("i(F(q), F(-q)) = " + std::to_string(total) +
                           " differs from the area " + std::to_string(o.squares()));
  }
  return total;
}

}  // namespace rigidity::flatsurf
