#include <doctest.h>

#include "c0t/errors.hpp"
#include "c0t/linking.hpp"
#include "c0t/probe.hpp"
#include "oracles.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>

using namespace c0t;

namespace {

Rational dec(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return parse_rational(buf);
}

std::vector<Point> circle_xy(int k) {
  std::vector<Point> out;
  for (int i = 0; i < k; ++i) {
    const double t = 2 * std::numbers::pi * i / k;
    out.push_back(Point{dec(std::cos(t)), dec(std::sin(t)), 0});
  }
  return out;
}

/// Circle (x - 1)^2 + z^2 = 1 in the plane y = 0.
std::vector<Point> circle_xz(int k, const Rational& shift = 0) {
  std::vector<Point> out;
  for (int i = 0; i < k; ++i) {
    const double t = 2 * std::numbers::pi * i / k;
    out.push_back(Point{dec(1 + std::cos(t)) + shift, 0, dec(std::sin(t))});
  }
  return out;
}

/// 0-cycle (+a) - (b) on two isolated vertices.
OrientedCycle pair_cycle(const Point& a, const Point& b) {
  auto K = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(2, {Simplex{{0}}, Simplex{{1}}}));
  return OrientedCycle(PLMap(K, {a, b}), {{Simplex{{0}}, 1}, {Simplex{{1}}, -1}}, 0);
}

}  // namespace

TEST_CASE("image_separation examples") {
  const OrientedCycle tri = closed_polygon({Point{0, 0}, Point{1, 0}, Point{0, 1}});
  CHECK(image_separation(tri, tri) == 0);
  CHECK(image_separation(pair_cycle(Point{0, 0}, Point{0, 0}), pair_cycle(Point{3, 0}, Point{3, 0})) == 3);
  const OrientedCycle seg = boundary_cycle(freudenthal_cube(2, 1));
  const OrientedCycle far = pair_cycle(Point{0, 3}, Point{0, 4});
  CHECK(image_separation(seg, far) == 2);
}

TEST_CASE("Hopf 16-gons link once and match the Gauss integral") {
  const auto a = circle_xy(16), b = circle_xz(16);
  const OrientedCycle z1 = closed_polygon(a), z2 = closed_polygon(b);
  const LinkingResult r = linking_number(z1, z2);
  CHECK(std::abs(r.value) == 1);
  CHECK(r.separation > 0);
  CHECK(r.stability_radius == r.separation / 2);
  const double gauss = oracle::gauss_linking(oracle::to_v3(a), oracle::to_v3(b));
  CHECK(std::abs(std::abs(gauss) - 1.0) < 1e-6);
  // With the frame convention of the cone count, the signed value equals
  // the Gauss integral (1/4pi) of (r1 - r2) . (dr1 x dr2) / |r1 - r2|^3.
  CHECK(static_cast<double>(r.value) == doctest::Approx(gauss).epsilon(1e-6));
}

TEST_CASE("hyperplane-separated circles do not link") {
  const OrientedCycle z1 = closed_polygon(circle_xy(16));
  const OrientedCycle z2 = closed_polygon(circle_xz(16, Rational(3)));
  CHECK(linking_number(z1, z2).value == 0);
  const double gauss = oracle::gauss_linking(oracle::to_v3(circle_xy(16)), oracle::to_v3(circle_xz(16, Rational(3))));
  CHECK(std::abs(gauss) < 1e-6);
}

TEST_CASE("orientation antisymmetry and translation invariance") {
  const OrientedCycle z1 = closed_polygon(circle_xy(16)), z2 = closed_polygon(circle_xz(16));
  const long v = linking_number(z1, z2).value;
  CHECK(linking_number(z1.reversed(), z2).value == -v);
  CHECK(linking_number(z1, z2.reversed()).value == -v);
  const Point shift{Rational(7, 3), Rational(-1, 5), 11};
  const OrientedCycle t1 = z1.with_map(z1.map().translated(shift));
  const OrientedCycle t2 = z2.with_map(z2.map().translated(shift));
  CHECK(linking_number(t1, t2).value == v);
}

TEST_CASE("apex independence over five seeds") {
  const OrientedCycle z1 = closed_polygon(circle_xy(16)), z2 = closed_polygon(circle_xz(16));
  const long v = linking_number(z1, z2).value;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    LinkingOptions o;
    o.seed = seed * 7919;
    const LinkingResult r = linking_number(z1, z2, o);
    CHECK(r.value == v);
    CHECK(cone_intersection_number(z1, z2, r.apex) == v);
  }
}

TEST_CASE("linking number is stable below the stability radius") {
  const OrientedCycle z1 = closed_polygon(circle_xy(16)), z2 = closed_polygon(circle_xz(16));
  const LinkingResult r = linking_number(z1, z2);
  for (std::uint64_t t = 0; t < 20; ++t) {
    const PLMap m1 = random_perturbation(z1.map(), r.stability_radius, 100 + t);
    const PLMap m2 = random_perturbation(z2.map(), r.stability_radius, 200 + t);
    CHECK(c0_distance(m1, z1.map()) < r.stability_radius);
    CHECK(linking_number(z1.with_map(m1), z2.with_map(m2)).value == r.value);
  }
}

TEST_CASE("0-cycles in the line: interleaved pairs link") {
  // In R^1, p = q = 0 is complementary: the cone over (+3) - (-3) is the
  // interval [-3, 3], which contains exactly one point of (+0) - (10).
  const OrientedCycle z1 = pair_cycle(Point{3}, Point{-3});
  CHECK(std::abs(linking_number(z1, pair_cycle(Point{0}, Point{10})).value) == 1);
  CHECK(linking_number(z1, pair_cycle(Point{1}, Point{2})).value == 0);
  CHECK(linking_number(z1, pair_cycle(Point{5}, Point{10})).value == 0);
}

TEST_CASE("dimension and disjointness gates") {
  // Two 0-cycles in the plane are not complementary (0 + 0 != 2 - 1).
  const OrientedCycle a = pair_cycle(Point{0, 1}, Point{0, -1});
  const OrientedCycle b = pair_cycle(Point{1, 0}, Point{-1, 0});
  CHECK_THROWS_AS(linking_number(a, b), InvalidInput);
  const OrientedCycle z = closed_polygon(circle_xy(16));
  CHECK_THROWS_AS(linking_number(z, closed_polygon(circle_xz(16, Rational(-1)))), InvalidInput);
}

TEST_CASE("cone_apex_search") {
  const OrientedCycle z1 = closed_polygon(circle_xy(16)), z2 = closed_polygon(circle_xz(16));

  SUBCASE("empty second cycle accepts the first outside point") {
    const OrientedCycle empty(closed_polygon({Point{5, 5, 5}, Point{6, 5, 5}, Point{5, 6, 5}}).map(), {}, 1);
    const ApexSearchResult r = cone_apex_search(z1, empty, 1, 64, {Point{10, 10, 10}});
    CHECK(r.attempts == 1);
    CHECK(r.apex == Point{10, 10, 10});
    CHECK(r.intersection_number == 0);
  }
  SUBCASE("Hopf configuration finds a verified apex") {
    const ApexSearchResult r = cone_apex_search(z1, z2, 1);
    CHECK(cone_intersection_number(z1, z2, r.apex).has_value());
  }
  SUBCASE("a degenerate first candidate is retried") {
    // The apex (-5, 0, 0) puts the cone edges over (1, 0, 0) and (-1, 0, 0)
    // on the x-axis, through the vertex (0, 0, 0) of the second circle.
    const Point bad{-5, 0, 0};
    CHECK_FALSE(cone_intersection_number(z1, z2, bad).has_value());
    const ApexSearchResult r = cone_apex_search(z1, z2, 1, 64, {bad});
    CHECK(r.attempts == 2);
    CHECK(std::abs(r.intersection_number) == 1);
  }
  SUBCASE("exhausted budget is reported") {
    CHECK_THROWS_AS(cone_apex_search(z1, z2, 1, 1, {Point{-5, 0, 0}}), RetryExhausted);
  }
}
