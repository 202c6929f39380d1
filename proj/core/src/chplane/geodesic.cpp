#include "rigidity/chplane/geodesic.hpp"

#include <cmath>
#include <functional>

#include "json.hpp"
#include "rigidity/chplane/horocycle.hpp"
#include "rigidity/format.hpp"

namespace rigidity::chplane {
namespace {

// Bisection for a sign change of f on [lo, hi], stopping when the bracket
// is shorter than `tolerance`.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tolerance) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (!(flo * fhi < 0.0)) {
    throw RootNotBracketed("level function does not change sign on the geodesic");
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RealGeodesic::RealGeodesic(const BoundaryPoint& positive, const BoundaryPoint& negative)
    : positive_(positive), negative_(negative) {
  const double gap = std::norm(positive.xi1() - negative.xi1()) +
                     std::norm(positive.xi2() - negative.xi2());
  if (gap < 1e-20) throw CoincidentEndpoints("geodesic endpoints coincide");
  // <A, B> in the form diag(1, 1, -1).
  const Complex h = inner(positive.xi1(), positive.xi2(), negative.xi1(), negative.xi2()) - 1.0;
  twist_ = -std::abs(h) / std::conj(h);
}

BallPoint RealGeodesic::at_parameter(double u) const {
  // e^t A + e^-t c B scaled by 1/(e^t + e^-t): weights (1+u)/2 and (1-u)/2.
  const double a = 0.5 * (1.0 + u);
  const Complex b = 0.5 * (1.0 - u) * twist_;
  const Complex denom = a + b;
  return BallPoint((a * positive_.xi1() + b * negative_.xi1()) / denom,
                   (a * positive_.xi2() + b * negative_.xi2()) / denom);
}

BallPoint RealGeodesic::point(double t) const { return at_parameter(std::tanh(t)); }

RealGeodesic real_geodesic(const BoundaryPoint& positive, const BoundaryPoint& negative) {
  return RealGeodesic(positive, negative);
}

Step2Result step2_verify(double twist, double tolerance) {
  const BoundaryPoint end1(std::polar(1.0, -twist), 0.0);
  const BoundaryPoint end2(0.0, 1.0);
  const RealGeodesic delta(end1, end2);

  const double edge = 1.0 - 1e-9;
  const double u1 = bisect(
      [&](double u) { return horocycle_level(end1, delta.at_parameter(u)) - 1.0; }, -edge, edge,
      tolerance);
  const double u2 = bisect(
      [&](double u) { return horocycle_level(end2, delta.at_parameter(u)) - 1.0; }, -edge, edge,
      tolerance);

  Step2Result r{delta.at_parameter(u1), delta.at_parameter(u2), std::atanh(u1), std::atanh(u2),
                0.0, 0.0};
  r.distance = distance(r.p1, r.p2);
  r.intersection = std::exp(-r.distance);
  return r;
}

std::string step2_json(const Step2Result& r) {
  auto flat = [](const BallPoint& p) {
    return nlohmann::json::array({round15(p.z().real()), round15(p.z().imag()), round15(p.w().real()),
                                  round15(p.w().imag())});
  };
  nlohmann::json doc;
  doc["P1"] = flat(r.p1);
  doc["P2"] = flat(r.p2);
  doc["distance"] = round15(r.distance);
  doc["intersection"] = round15(r.intersection);
  return doc.dump();
}

}  // namespace rigidity::chplane
