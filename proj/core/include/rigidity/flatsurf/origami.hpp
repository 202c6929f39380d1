#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "rigidity/error.hpp"

namespace rigidity::flatsurf {

RIGIDITY_DEFINE_ERROR(BadPermutation);
RIGIDITY_DEFINE_ERROR(NonTransitive);

// Zero-based permutation: perm[i] is the image of i.
using Permutation = std::vector<int>;

enum class Corner { LowerLeft, LowerRight, UpperRight, UpperLeft };

// A point of the surface sitting at square corners. `squares` lists the
// squares whose lower-left corner is this point, in the order visited by
// the commutator; its size k is the cone order (angle 2*pi*k).
struct ConePoint {
  int id = 0;
  std::vector<int> squares;

  int order() const { return static_cast<int>(squares.size()); }
  double angle() const;
};

/// Square-tiled translation surface. Square i has square right(i) glued to
/// its right edge and square up(i) glued to its top edge. Every square
/// corner is a marked point; the quadratic differential is q = dz^2 on
/// each unit square, so the flat area equals the number of squares.
///
/// Corners are grouped into points by cycles of the commutator
/// c = v^-1 h^-1 v h read left to right as actions (apply v^-1 first),
/// i.e. c(i) = h(v(h^-1(v^-1(i)))): walking clockwise around the
/// lower-left corner of square i through the squares below, left and
/// above returns to the lower-left corner of c(i).
class Origami {
 public:
  int squares() const { return static_cast<int>(right_.size()); }

  int right(int i) const { return right_[i]; }
  int left(int i) const { return left_[i]; }
  int up(int i) const { return up_[i]; }
  int down(int i) const { return down_[i]; }

  const Permutation& right_permutation() const { return right_; }
  const Permutation& up_permutation() const { return up_; }

  Permutation commutator() const;

  const std::vector<ConePoint>& cone_points() const { return points_; }
  int vertex_count() const { return static_cast<int>(points_.size()); }

  // Id of the cone point sitting at the given corner of `square`.
  int vertex_at(int square, Corner corner) const;

  int genus() const { return genus_; }

  // Sum of cone angles, 2*pi*n.
  double total_angle() const;

  friend Origami build_origami(int n, std::span<const int> h, std::span<const int> v);

 private:
  Origami() = default;

  Permutation right_, left_, up_, down_;
  std::vector<ConePoint> points_;
  std::vector<int> lower_left_point_;
  int genus_ = 0;
};

/// Validates and builds an origami from 1-indexed image arrays
/// (h[i-1] is the square right of square i, v[i-1] the square above it).
/// Throws BadPermutation or NonTransitive.
Origami build_origami(int n, std::span<const int> h, std::span<const int> v);

// Parses cycle notation such as "(1 2)(3)" into a 1-indexed image array
// of length n. Points not mentioned are fixed.
std::vector<int> permutation_from_cycles(int n, std::string_view cycles);

// ||q||_1 of the square-tiled differential: the number of unit squares.
double area(const Origami& o);

// Cycles of a zero-based permutation, each starting at its smallest element,
// ordered by that element.
std::vector<std::vector<int>> cycles(const Permutation& perm);

}  // namespace rigidity::flatsurf
