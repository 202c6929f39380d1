#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

#include "rigidity/flatsurf/foliation.hpp"
#include "rigidity/flatsurf/io.hpp"

using namespace rigidity::flatsurf;
using std::numbers::pi;

namespace {

FlatMulticurve horizontal(const std::string& name) {
  const auto o = read_origami(oracle::data_path("origamis/" + name + ".json"));
  return core_multicurve(cylinder_decomposition(o, {1, 0}));
}

}  // namespace

TEST_CASE("L-origami profile is 3|cos(theta/2)|") {
  const auto g = horizontal("L");
  for (const auto& s : sample_profile(g, 360)) {
    CHECK(std::abs(s.value - 3.0 * std::abs(std::cos(s.theta / 2))) <= 1e-12);
  }
}

TEST_CASE("torus profile is |cos(theta/2)|") {
  const auto g = horizontal("torus");
  for (const auto& s : sample_profile(g, 64)) {
    CHECK(std::abs(s.value - std::abs(std::cos(s.theta / 2))) <= 1e-12);
  }
  const auto e = profile_nonconstancy(g, 360);
  CHECK(e.max == doctest::Approx(1.0));
  CHECK(e.min < 1e-9);
}

TEST_CASE("four-sample L profile") {
  const auto s = sample_profile(horizontal("L"), 4);
  REQUIRE(s.size() == 4);
  CHECK(s[0].value == doctest::Approx(3.0));
  CHECK(s[1].value == doctest::Approx(3.0 / std::sqrt(2.0)));
  CHECK(std::abs(s[2].value) < 1e-12);
  CHECK(s[3].value == doctest::Approx(3.0 / std::sqrt(2.0)));
  CHECK(s[1].theta == doctest::Approx(pi / 2));
}

TEST_CASE("nonconstancy witness and errors") {
  const auto g = horizontal("L");
  const auto e = profile_nonconstancy(g, 360);
  CHECK(e.max - e.min >= 2.9);
  CHECK(std::abs(intersection_profile(g, e.witness_theta) - intersection_profile(g, 0.0)) > 1e-9);
  CHECK_THROWS_AS(profile_nonconstancy(g, 360, 10.0), ConstantProfile);
  CHECK_THROWS_AS(profile_nonconstancy(g, 4), std::invalid_argument);
  CHECK_THROWS_AS(sample_profile(g, 0), std::invalid_argument);
}

TEST_CASE("profile is pi-antiperiodic in theta/2, hence 2pi-periodic") {
  const auto g = horizontal("staircase5");
  for (double th : {0.1, 1.3, 2.9, 4.4}) {
    CHECK(intersection_profile(g, th) == doctest::Approx(intersection_profile(g, th + 2 * pi)));
    CHECK(intersection_profile(g, th) == doctest::Approx(intersection_profile(g.scaled(2.0), th) / 2));
  }
}

TEST_CASE("multicurve validation") {
  using Components = std::vector<CurveComponent>;
  CHECK_THROWS_AS(FlatMulticurve(Components{{0.0, {{1.0, 0.0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(FlatMulticurve(Components{{1.0, {}}}), std::invalid_argument);
  CHECK_THROWS_AS(FlatMulticurve(Components{{1.0, {{0.0, 0.0}}}}), std::invalid_argument);
}

TEST_CASE("flowed foliations") {
  const auto o = read_origami(oracle::data_path("origamis/L.json"));
  const auto g = horizontal("L");
  const auto f = rotate_differential(o, pi / 3);
  CHECK(f.intersection(g) == doctest::Approx(intersection_profile(g, pi / 3)));
  CHECK(f.scaled(2.5).intersection(g) == doctest::Approx(2.5 * f.intersection(g)));
  CHECK(f.rotated(2 * pi).theta() == doctest::Approx(f.theta()));

  const auto [plus, minus] = geodesic_lift(o, 0.7);
  CHECK(plus.scale() == doctest::Approx(std::exp(0.7)));
  CHECK(minus.scale() == doctest::Approx(std::exp(-0.7)));
  CHECK(minus.theta() == doctest::Approx(pi));
}

TEST_CASE("extremal length along the flow is e^{2(t-s)}") {
  for (const auto& name : oracle::bundled_origamis()) {
    const auto o = read_origami(oracle::data_path("origamis/" + name + ".json"));
    for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const double expected = std::exp(2 * (t - s));
        CHECK(std::abs(extremal_length_flowed(o, t, s) - expected) <= 1e-12 * expected);
      }
    }
    CHECK(flowed_mass(o, 0.3) == doctest::Approx(1.0));
  }
  CHECK(teich_disk_distance(0.2, -0.5) == doctest::Approx(0.7));
}
