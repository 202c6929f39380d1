#include "rigidity/flatsurf/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rigidity::flatsurf {
namespace {

double reduce_angle(double theta) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(theta, two_pi);
  if (r < 0) r += two_pi;
  return r >= two_pi ? 0.0 : r;
}

}  // namespace

FlatMulticurve::FlatMulticurve(std::vector<CurveComponent> components)
    : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (!(c.weight > 0.0)) throw std::invalid_argument("multicurve weight must be positive");
    if (c.holonomies.empty()) throw std::invalid_argument("multicurve component has no holonomy");
    for (auto v : c.holonomies) {
      if (v == std::complex<double>{}) throw std::invalid_argument("zero holonomy in multicurve");
    }
  }
}

FlatMulticurve FlatMulticurve::scaled(double c) const {
  auto comps = components_;
  for (auto& comp : comps) comp.weight *= c;
  return FlatMulticurve(std::move(comps));
}

FlatMulticurve core_multicurve(const CylinderDecomposition& decomposition) {
  std::vector<CurveComponent> comps;
  for (const auto& cyl : decomposition.cylinders) {
    comps.push_back({cyl.height, {cyl.core_holonomy}});
  }
  return FlatMulticurve(std::move(comps));
}

std::complex<double> rotate_holonomy(std::complex<double> v, double theta) {
  return std::polar(1.0, theta / 2.0) * v;
}

double intersection_profile(const FlatMulticurve& g, double theta) {
  const std::complex<double> half_turn = std::polar(1.0, theta / 2.0);
  double total = 0.0;
  for (const auto& comp : g.components()) {
    double sum = 0.0;
    for (auto v : comp.holonomies) sum += std::abs((half_turn * v).real());
    total += comp.weight * sum;
  }
  return total;
}

std::vector<ProfileSample> sample_profile(const FlatMulticurve& g, int samples) {
  if (samples < 1) throw std::invalid_argument("need at least one profile sample");
  std::vector<ProfileSample> out(samples);
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    out[k] = {theta, intersection_profile(g, theta)};
  }
  return out;
}

ProfileExtent profile_nonconstancy(const FlatMulticurve& g, int samples, double tolerance) {
  if (samples < 8) throw std::invalid_argument("profile_nonconstancy needs samples >= 8");
  const auto grid = sample_profile(g, samples);
  ProfileExtent extent{grid.front().value, grid.front().value, 0.0};
  bool have_witness = false;
  for (const auto& s : grid) {
    extent.max = std::max(extent.max, s.value);
    extent.min = std::min(extent.min, s.value);
    if (!have_witness && std::abs(s.value - grid.front().value) > tolerance) {
      extent.witness_theta = s.theta;
      have_witness = true;
    }
  }
  if (extent.max - extent.min <= tolerance) {
    throw ConstantProfile("intersection profile is constant to within tolerance");
  }
  return extent;
}

FlowedFoliation::FlowedFoliation(Origami base, double theta, double scale)
    : base_(std::move(base)), theta_(reduce_angle(theta)), scale_(scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("foliation scale must be positive and finite");
  }
}

FlowedFoliation FlowedFoliation::rotated(double theta) const {
  return FlowedFoliation(base_, theta_ + theta, scale_);
}

FlowedFoliation FlowedFoliation::scaled(double c) const {
  return FlowedFoliation(base_, theta_, scale_ * c);
}

double FlowedFoliation::intersection(const FlatMulticurve& g) const {
  return scale_ * intersection_profile(g, theta_);
}

FlowedFoliation rotate_differential(const Origami& o, double theta) {
  return FlowedFoliation(o, theta, 1.0);
}

std::pair<FlowedFoliation, FlowedFoliation> geodesic_lift(const Origami& o, double t) {
  // F(-q) is F(e^{i pi} q).
  return {FlowedFoliation(o, 0.0, std::exp(t)), FlowedFoliation(o, std::numbers::pi, std::exp(-t))};
}

double flowed_mass(const Origami& o, double s) {
  const double normalise = 1.0 / std::sqrt(area(o));
  const double stretch = std::exp(s);
  const double squeeze = std::exp(-s);
  double mass = 0.0;
  for (const auto& cyl : cylinder_decomposition(o, {1, 0}).cylinders) {
    mass += (cyl.circumference * normalise * stretch) * (cyl.height * normalise * squeeze);
  }
  return mass;
}

double extremal_length_flowed(const Origami& o, double t, double s) {
  const FlowedFoliation foliation(o, 0.0, std::exp(t - s));
  return foliation.scale() * foliation.scale() * flowed_mass(o, s);
}

double teich_disk_distance(double t1, double t2) { return std::abs(t1 - t2); }

}  // namespace rigidity::flatsurf
