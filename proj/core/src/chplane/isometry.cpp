#include "rigidity/chplane/isometry.hpp"

#include <cmath>
#include <sstream>

namespace rigidity::chplane {

Matrix3c hermitian_form() {
  Matrix3c j = Matrix3c::Zero();
  j(0, 0) = 1.0;
  j(1, 1) = 1.0;
  j(2, 2) = -1.0;
  return j;
}

double form_defect(const Matrix3c& m) {
  const Matrix3c j = hermitian_form();
  return (m.adjoint() * j * m - j).cwiseAbs().maxCoeff();
}

BallIsometry::BallIsometry(const Matrix3c& m) : m_(m) {
  const double defect = form_defect(m);
  if (!(defect <= 1e-10)) {
    std::ostringstream msg;
    msg << "matrix does not preserve the form diag(1,1,-1): defect " << defect;
    throw FormViolation(msg.str());
  }
}

BallIsometry BallIsometry::identity() { return BallIsometry(Matrix3c::Identity()); }

BallIsometry BallIsometry::rotate_first(double theta) {
  Matrix3c m = Matrix3c::Identity();
  m(0, 0) = std::polar(1.0, -theta);
  return BallIsometry(m);
}

BallIsometry BallIsometry::swap() {
  Matrix3c m = Matrix3c::Zero();
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  m(2, 2) = 1.0;
  return BallIsometry(m);
}

BallIsometry BallIsometry::unitary(const Eigen::Matrix2cd& u) {
  Matrix3c m = Matrix3c::Identity();
  m.topLeftCorner<2, 2>() = u;
  return BallIsometry(m);
}

BallIsometry BallIsometry::boost(double s) {
  Matrix3c m = Matrix3c::Identity();
  m(0, 0) = std::cosh(s);
  m(0, 2) = std::sinh(s);
  m(2, 0) = std::sinh(s);
  m(2, 2) = std::cosh(s);
  return BallIsometry(m);
}

BallIsometry BallIsometry::operator*(const BallIsometry& other) const {
  return BallIsometry(m_ * other.m_);
}

BallIsometry BallIsometry::inverse() const {
  // m^-1 = J m* J for m preserving J.
  const Matrix3c j = hermitian_form();
  return BallIsometry(j * m_.adjoint() * j);
}

BallPoint BallIsometry::apply(const BallPoint& p) const {
  const Eigen::Vector3cd x = m_ * Eigen::Vector3cd(p.z(), p.w(), 1.0);
  return BallPoint(x(0) / x(2), x(1) / x(2));
}

BoundaryPoint BallIsometry::apply(const BoundaryPoint& xi) const {
  const Eigen::Vector3cd x = m_ * Eigen::Vector3cd(xi.xi1(), xi.xi2(), 1.0);
  return BoundaryPoint::direction(x(0) / x(2), x(1) / x(2));
}

BallPoint apply_isometry(const BallIsometry& m, const BallPoint& p) { return m.apply(p); }

BallPoint ray_point(const GeodesicRay& ray, double t) {
  return ray.iso.apply(BallPoint(std::tanh(t), 0.0));
}

BoundaryPoint ray_endpoint(const GeodesicRay& ray) {
  return ray.iso.apply(BoundaryPoint(1.0, 0.0));
}

}  // namespace rigidity::chplane
