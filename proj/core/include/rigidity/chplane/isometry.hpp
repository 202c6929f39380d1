#pragma once

#include <Eigen/Dense>

#include "rigidity/chplane/ball.hpp"

namespace rigidity::chplane {

RIGIDITY_DEFINE_ERROR(FormViolation);

using Matrix3c = Eigen::Matrix3cd;

// J = diag(1, 1, -1), the Hermitian form whose negative cone is CH^2.
Matrix3c hermitian_form();

/// Holomorphic isometry of CH^2 given by a matrix m with m* J m = J,
/// acting projectively on (z, w, 1). Construction checks the form
/// entrywise to 1e-10 and throws FormViolation otherwise.
class BallIsometry {
 public:
  explicit BallIsometry(const Matrix3c& m);

  static BallIsometry identity();
  // (z, w) -> (e^{-i theta} z, w)
  static BallIsometry rotate_first(double theta);
  // (z, w) -> (w, z)
  static BallIsometry swap();
  // Unitary action on C^2, fixing the origin.
  static BallIsometry unitary(const Eigen::Matrix2cd& u);
  // Hyperbolic translation by distance s along the z-axis, moving 0 to (tanh s, 0).
  static BallIsometry boost(double s);

  const Matrix3c& matrix() const { return m_; }

  BallIsometry operator*(const BallIsometry& other) const;
  BallIsometry inverse() const;

  BallPoint apply(const BallPoint& p) const;
  BoundaryPoint apply(const BoundaryPoint& xi) const;

 private:
  Matrix3c m_;
};

// Max entrywise deviation |m* J m - J|.
double form_defect(const Matrix3c& m);

BallPoint apply_isometry(const BallIsometry& m, const BallPoint& p);

// t -> iso(tanh t, 0): a unit-speed geodesic ray from iso(0).
struct GeodesicRay {
  BallIsometry iso = BallIsometry::identity();
};

BallPoint ray_point(const GeodesicRay& ray, double t);

// Endpoint at infinity of the ray.
BoundaryPoint ray_endpoint(const GeodesicRay& ray);

}  // namespace rigidity::chplane
