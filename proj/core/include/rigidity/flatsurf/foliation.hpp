#pragma once

#include <complex>
#include <vector>

#include "rigidity/flatsurf/cylinders.hpp"
#include "rigidity/flatsurf/origami.hpp"

namespace rigidity::flatsurf {

RIGIDITY_DEFINE_ERROR(ConstantProfile);

inline constexpr double kDefaultTolerance = 1e-9;

struct CurveComponent {
  double weight = 1.0;
  std::vector<std::complex<double>> holonomies;
};

// A weighted multicurve given by its flat geodesic representative: each
// component is a closed chain of saddle connections (or a cylinder core).
class FlatMulticurve {
 public:
  // Throws std::invalid_argument on non-positive weights, empty components
  // or zero holonomies.
  explicit FlatMulticurve(std::vector<CurveComponent> components);

  const std::vector<CurveComponent>& components() const { return components_; }

  FlatMulticurve scaled(double c) const;

 private:
  std::vector<CurveComponent> components_;
};

// Core curves of a cylinder decomposition, weighted by cylinder height.
FlatMulticurve core_multicurve(const CylinderDecomposition& decomposition);

// e^{i theta/2} v: the holonomy of v measured in e^{i theta} q.
std::complex<double> rotate_holonomy(std::complex<double> v, double theta);

/// i(F(e^{i theta} q), G) = sum_k w_k sum_j |Re(e^{i theta/2} v_kj)|.
double intersection_profile(const FlatMulticurve& g, double theta);

struct ProfileSample {
  double theta = 0.0;
  double value = 0.0;
};

// Profile on the uniform grid theta_k = 2 pi k / samples, k < samples.
std::vector<ProfileSample> sample_profile(const FlatMulticurve& g, int samples);

struct ProfileExtent {
  double max = 0.0;
  double min = 0.0;
  double witness_theta = 0.0;
};

/// Max and min of the profile over the uniform grid, plus the first grid
/// angle whose value differs from the theta = 0 value by more than
/// `tolerance`. Requires samples >= 8; throws ConstantProfile when
/// max - min <= tolerance.
ProfileExtent profile_nonconstancy(const FlatMulticurve& g, int samples,
                                   double tolerance = kDefaultTolerance);

// The vertical foliation F(e^{i theta} q) of an origami, scaled by `scale`.
class FlowedFoliation {
 public:
  FlowedFoliation(Origami base, double theta, double scale);

  const Origami& base() const { return base_; }
  double theta() const { return theta_; }  // reduced to [0, 2 pi)
  double scale() const { return scale_; }

  FlowedFoliation rotated(double theta) const;
  FlowedFoliation scaled(double c) const;

  // i(this, G) = scale * profile(G, theta).
  double intersection(const FlatMulticurve& g) const;

 private:
  Origami base_;
  double theta_;
  double scale_;
};

FlowedFoliation rotate_differential(const Origami& o, double theta);

// The lift (e^t F(q), e^{-t} F(-q)) of the Teichmuller geodesic through o.
std::pair<FlowedFoliation, FlowedFoliation> geodesic_lift(const Origami& o, double t);

// ||q_s||_1 for the unit-area normalisation of o pushed by diag(e^s, e^-s),
// summed over the stretched horizontal cylinders.
double flowed_mass(const Origami& o, double s);

/// lambda(F(q_t), X_s) along the Teichmuller geodesic of the unit-area
/// normalisation of o. Uses F(q_t) = e^{t-s} F(q_s), homogeneity
/// lambda(cF, X) = c^2 lambda(F, X) and lambda(F(q_s), X_s) = ||q_s||_1.
double extremal_length_flowed(const Origami& o, double t, double s);

// Teichmuller distance between two points of one unit-speed geodesic.
double teich_disk_distance(double t1, double t2);

}  // namespace rigidity::flatsurf
