#include <doctest.h>

#include "c0t/errors.hpp"
#include "c0t/sakai2d.hpp"
#include "oracles.hpp"
#include "scenes.hpp"

#include <cmath>

using namespace c0t;

namespace {

const Point origin{0, 0};

}  // namespace

TEST_CASE("component_in_disk examples") {
  const Polyline K = scenes::axis_line(false);
  const DiskArc a = component_in_disk(K, origin, 1);
  CHECK(a.spans);
  CHECK(a.vertices == std::vector<Point>{Point{-1, 0}, Point{0, 0}, Point{1, 0}});
  const DiskArc b = component_in_disk(K, origin, Rational(3, 2));
  CHECK(b.vertices.size() == 5);
  CHECK(b.spans);
  CHECK_FALSE(component_in_disk(K, origin, 5).spans);

  SUBCASE("a U-shape re-entering the disk is a separate component") {
    const Polyline U{{Point{-2, 0}, Point{2, 0}, Point{2, Rational(1, 2)}, Point{-2, Rational(1, 2)}}};
    const DiskArc u = component_in_disk(U, origin, 1);
    CHECK(u.spans);
    CHECK(u.vertices == std::vector<Point>{Point{-2, 0}, Point{2, 0}});
  }
  SUBCASE("an arc ending inside the disk does not span") {
    const Polyline half{{Point{0, 0}, Point{2, 0}}};
    CHECK_FALSE(component_in_disk(half, origin, 1).spans);
    CHECK_THROWS_AS(SideClassifier(component_in_disk(half, origin, 1)), InvalidInput);
  }
  CHECK_THROWS_AS(component_in_disk(K, Point{0, 1}, 1), InvalidInput);
  CHECK_THROWS_AS(component_in_disk(K, origin, 0), InvalidInput);
  CHECK_THROWS_AS(validate(Polyline{{Point{0, 0}}}), InvalidInput);
  CHECK_THROWS_AS(validate(Polyline{{Point{0, 0}, Point{0, 0}}}), InvalidInput);
}

TEST_CASE("side classifier on the x-axis") {
  const SideClassifier cls(component_in_disk(scenes::axis_line(false), origin, 1));
  CHECK(cls.classify(Point{0, Rational(1, 2)}) == Side::plus);
  CHECK(cls.classify(Point{Rational(1, 3), Rational(-1, 7)}) == Side::minus);
  CHECK(cls.classify(Point{Rational(1, 3), 0}) == Side::on);
  CHECK_THROWS_AS(cls.classify(Point{0, 2}), InvalidInput);
}

TEST_CASE("side classifier agrees with point-in-polygon on an S-shaped arc") {
  const std::vector<Point> S{Point{-3, 0},
                             Point{Rational(1, 2), 0},
                             Point{Rational(1, 2), Rational(1, 2)},
                             Point{Rational(-1, 2), Rational(1, 2)},
                             Point{Rational(-1, 2), Rational(3, 4)},
                             Point{3, Rational(3, 4)}};
  const SideClassifier cls(component_in_disk(Polyline{S}, origin, 2), 5);
  // The plus side (left of the arc) is the region above it, closed off far
  // from the disk.
  std::vector<Point> above = S;
  above.push_back(Point{3, 5});
  above.push_back(Point{-3, 5});
  int checked = 0;
  for (int i = -15; i <= 15; ++i) {
    for (int j = -15; j <= 15; ++j) {
      const Point q{ratio(i, 8) + Rational(1, 97), ratio(j, 8) + Rational(1, 89)};
      if (Rational(q[0] * q[0] + q[1] * q[1]) >= 4) continue;
      bool on = false;
      for (std::size_t k = 0; k + 1 < S.size(); ++k) on = on || oracle::on_segment(S[k], S[k + 1], q);
      const Side expected = on ? Side::on : oracle::point_in_polygon(above, q) ? Side::plus : Side::minus;
      CHECK(cls.classify(q) == expected);
      ++checked;
    }
  }
  CHECK(checked > 500);
  // Points on the arc and grid points through its vertices.
  CHECK(cls.classify(Point{Rational(1, 2), Rational(1, 4)}) == Side::on);
  CHECK(cls.classify(Point{0, Rational(1, 4)}) == Side::plus);
  CHECK(cls.classify(Point{0, Rational(5, 8)}) == Side::minus);
  CHECK(cls.classify(Point{1, Rational(1, 2)}) == Side::minus);
}

TEST_CASE("sakai_check on crossing axes") {
  const std::vector<Rational> radii{1, Rational(1, 2), Rational(1, 4)};
  const SakaiReport r = sakai_check(scenes::axis_line(false), scenes::axis_line(true), origin, radii);
  CHECK(r.transverse_all);
  REQUIRE(r.radii.size() == 3);
  for (const auto& v : r.radii) {
    CHECK(v.K_spans);
    CHECK(v.meets_plus);
    CHECK(v.meets_minus);
    CHECK(v.transverse);
    REQUIRE(v.side_changes.size() == 1);
    CHECK(v.nearest_change == origin);
  }
  // Symmetric in the two curves.
  CHECK(sakai_check(scenes::axis_line(true), scenes::axis_line(false), origin, radii).transverse_all);
  CHECK_THROWS_AS(sakai_check(scenes::axis_line(false), scenes::axis_line(true), Point{1, 0}, radii), InvalidInput);
  CHECK_THROWS_AS(sakai_check(scenes::axis_line(false), scenes::axis_line(true), origin, {0}), InvalidInput);
}

TEST_CASE("sakai_check on a tangent parabola") {
  const SakaiReport r = sakai_check(scenes::parabola_K(), scenes::parabola_L(), origin,
                                    {1, Rational(1, 2), Rational(1, 4)});
  CHECK_FALSE(r.transverse_all);
  for (const auto& v : r.radii) {
    CHECK(v.K_spans);
    CHECK(v.meets_plus);
    CHECK_FALSE(v.meets_minus);
    CHECK_FALSE(v.transverse);
    CHECK(v.side_changes.empty());
  }
  // Swapping roles: the x-axis touches the parabola's convex side only.
  const SakaiReport s = sakai_check(scenes::parabola_L(), scenes::parabola_K(), origin, {Rational(1, 2)});
  CHECK_FALSE(s.transverse_all);
}

TEST_CASE("a non-spanning K' is reported per radius") {
  const SakaiReport r = sakai_check(scenes::axis_line(false, 1), scenes::axis_line(true), origin, {Rational(1, 2), 3});
  CHECK(r.radii[0].transverse);
  CHECK_FALSE(r.radii[1].K_spans);
  CHECK_FALSE(r.radii[1].transverse);
  CHECK_FALSE(r.radii[1].note.empty());
  CHECK_FALSE(r.transverse_all);
}

TEST_CASE("squeeze_out examples") {
  SUBCASE("parabola") {
    const DiskArc K = component_in_disk(scenes::parabola_K(), origin, Rational(1, 2));
    const DiskArc L = component_in_disk(scenes::parabola_L(), origin, Rational(1, 2));
    const Rational eps(1, 1000);
    const SqueezeResult r = squeeze_out(K, L, eps);
    CHECK(r.target == Side::plus);
    CHECK(r.eta > 0);
    CHECK(r.eta < eps);
    CHECK(r.norm < eps);
    CHECK(r.norm == c0_distance(r.original, r.pushed));
    CHECK(avoids_in_disk(r.pushed.images(), K));
    CHECK_FALSE(avoids_in_disk(r.original.images(), K));
    // The pushed copy lies strictly above the x-axis inside the disk.
    for (const auto& p : r.pushed.images()) {
      if (Rational(p[0] * p[0] + p[1] * p[1]) < Rational(1, 4)) CHECK(p[1] > 0);
    }
  }
  SUBCASE("an arc already clear of K' needs no push") {
    const DiskArc K = component_in_disk(scenes::axis_line(false), origin, 1);
    const DiskArc L{{Point{-2, Rational(1, 10)}, Point{2, Rational(1, 10)}}, origin, 1, true};
    const SqueezeResult r = squeeze_out(K, L, Rational(1, 10));
    CHECK(r.eta == 0);
    CHECK(r.norm == 0);
  }
  SUBCASE("an arc sharing a segment with K' from below") {
    const Polyline L{{Point{-2, -1}, Point{Rational(-1, 2), 0}, Point{Rational(1, 2), 0}, Point{2, -1}}};
    const DiskArc K = component_in_disk(scenes::axis_line(false), origin, 1);
    const SqueezeResult r = squeeze_out(K, component_in_disk(L, origin, 1), Rational(1, 100));
    CHECK(r.target == Side::minus);
    CHECK(r.eta > 0);
    CHECK(avoids_in_disk(r.pushed.images(), K));
  }
  SUBCASE("a crossing arc cannot be squeezed out") {
    const DiskArc K = component_in_disk(scenes::axis_line(false), origin, 1);
    const DiskArc L = component_in_disk(scenes::axis_line(true), origin, 1);
    CHECK_THROWS_AS(squeeze_out(K, L, Rational(1, 10)), InvalidInput);
    CHECK_THROWS_AS(squeeze_out(K, K, 0), InvalidInput);
  }
}

TEST_CASE("the oscillating curve") {
  CHECK(oscillating_y(1.0) == doctest::Approx(0.30956).epsilon(1e-4));
  CHECK(oscillating_y(1.0) == oracle::oscillating(1.0));
  CHECK(oscillating_y(-0.5) == 0.0);
  const Polyline C = oscillating_curve(Rational(1, 4), Rational(1, 1000));
  CHECK(C.vertices.size() == 501);
  for (const auto& v : C.vertices) {
    if (v[0] <= 0) CHECK(v[1] == 0);
  }
  // The sign flips across every zero 1/(m pi).
  const auto zeros = oracle::oscillating_zeros(0.05, 0.25);
  REQUIRE(zeros.size() >= 3);
  for (std::size_t i = 0; i + 2 < zeros.size(); ++i) {
    const double a = (zeros[i] + zeros[i + 1]) / 2, b = (zeros[i + 1] + zeros[i + 2]) / 2;
    CHECK(oscillating_y(a) * oscillating_y(b) < 0);
  }
  CHECK_THROWS_AS(oscillating_curve(Rational(1, 4), 0), InvalidInput);
}

TEST_CASE("the oscillating curve is transverse to the x-axis") {
  const Polyline K = scenes::axis_line(false, 1);
  const Polyline L = oscillating_curve(Rational(1, 4), Rational(1, 1000));
  const SakaiReport r = sakai_check(K, L, origin, {Rational(1, 5)});
  REQUIRE(r.radii.size() == 1);
  const RadiusVerdict& v = r.radii.front();
  CHECK(v.transverse);
  REQUIRE(v.nearest_change);
  CHECK(cheb_norm(*v.nearest_change) < Rational(1, 5));
  // Every side change sits within one sampling step of an analytic zero.
  const auto zeros = oracle::oscillating_zeros(0.0, 0.2);
  for (const auto& c : v.side_changes) {
    const double x = c.location[0].get_d();
    double best = 1;
    for (double z : zeros) best = std::min(best, std::abs(z - x));
    CHECK(best <= 1e-3);
  }
  // 1/(2 pi) is among the resolved changes.
  bool has_second = false;
  for (const auto& c : v.side_changes) has_second = has_second || std::abs(c.location[0].get_d() - 0.5 / std::numbers::pi) < 1e-3;
  CHECK(has_second);
}
