#include "rigidity/flatsurf/origami.hpp"

#include <algorithm>
#include <numbers>
#include <queue>
#include <sstream>
#include <string>

namespace rigidity::flatsurf {
namespace {

Permutation to_zero_based(int n, std::span<const int> images, const char* name) {
  if (static_cast<int>(images.size()) != n) {
    throw BadPermutation(std::string(name) + ": expected " + std::to_string(n) +
                         " images, got " + std::to_string(images.size()));
  }
  Permutation perm(n);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    int image = images[i];
    if (image < 1 || image > n) {
      throw BadPermutation(std::string(name) + ": image " + std::to_string(image) +
                           " out of range 1.." + std::to_string(n));
    }
    if (hit[image - 1]) {
      throw BadPermutation(std::string(name) + ": image " + std::to_string(image) +
                           " repeated");
    }
    hit[image - 1] = true;
    perm[i] = image - 1;
  }
  return perm;
}

Permutation inverse(const Permutation& perm) {
  Permutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

bool transitive(const Permutation& h, const Permutation& v) {
  const int n = static_cast<int>(h.size());
  std::vector<bool> seen(n, false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  int reached = 1;
  auto visit = [&](int j) {
    if (!seen[j]) {
      seen[j] = true;
      ++reached;
      todo.push(j);
    }
  };
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop();
    visit(h[i]);
    visit(v[i]);
  }
  return reached == n;
}

}  // namespace

double ConePoint::angle() const { return 2.0 * std::numbers::pi * order(); }

Permutation Origami::commutator() const {
  const int n = squares();
  Permutation c(n);
  for (int i = 0; i < n; ++i) c[i] = right_[up_[left_[down_[i]]]];
  return c;
}

int Origami::vertex_at(int square, Corner corner) const {
  switch (corner) {
    case Corner::LowerLeft:
      return lower_left_point_[square];
    case Corner::LowerRight:
      return lower_left_point_[right_[square]];
    case Corner::UpperLeft:
      return lower_left_point_[up_[square]];
    case Corner::UpperRight:
      return lower_left_point_[up_[right_[square]]];
  }
  return -1;
}

double Origami::total_angle() const {
  double total = 0.0;
  for (const auto& p : points_) total += p.angle();
  return total;
}

Origami build_origami(int n, std::span<const int> h, std::span<const int> v) {
  if (n < 1) throw BadPermutation("origami needs at least one square");
  Origami o;
  o.right_ = to_zero_based(n, h, "h");
  o.up_ = to_zero_based(n, v, "v");
  if (!transitive(o.right_, o.up_)) {
    throw NonTransitive("<h, v> does not act transitively on the squares");
  }
  o.left_ = inverse(o.right_);
  o.down_ = inverse(o.up_);

  o.lower_left_point_.assign(n, -1);
  for (const auto& cycle : cycles(o.commutator())) {
    ConePoint p;
    p.id = static_cast<int>(o.points_.size());
    p.squares = cycle;
    for (int s : cycle) o.lower_left_point_[s] = p.id;
    o.points_.push_back(std::move(p));
  }

  // V - E + F with E = 2n edges and F = n faces.
  const int euler = o.vertex_count() - n;
  if ((2 - euler) % 2 != 0 || 2 - euler < 0) {
    throw BadPermutation("Euler characteristic " + std::to_string(euler) +
                         " is not that of a closed orientable surface");
  }
  o.genus_ = (2 - euler) / 2;
  return o;
}

std::vector<int> permutation_from_cycles(int n, std::string_view text) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t open = text.find('(', pos);
    if (open == std::string_view::npos) break;
    std::size_t close = text.find(')', open);
    if (close == std::string_view::npos) throw BadPermutation("unbalanced cycle notation");
    std::istringstream in(std::string(text.substr(open + 1, close - open - 1)));
    std::vector<int> cycle;
    for (int x; in >> x;) {
      if (x < 1 || x > n) throw BadPermutation("cycle entry out of range");
      cycle.push_back(x);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
    pos = close + 1;
  }
  return images;
}

double area(const Origami& o) { return static_cast<double>(o.squares()); }

std::vector<std::vector<int>> cycles(const Permutation& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int i = static_cast<int>(start); !seen[i]; i = perm[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace rigidity::flatsurf
