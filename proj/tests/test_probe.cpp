#include <doctest.h>

#include "c0t/certify.hpp"
#include "c0t/errors.hpp"
#include "c0t/probe.hpp"
#include "scenes.hpp"

#include <memory>

using namespace c0t;

namespace {

PLMap point_map(const Point& p) {
  auto K = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(1, {Simplex{{0}}}));
  return PLMap(K, {p});
}

struct CrossingPair {
  PLMap F;
  PLMap G;
};

CrossingPair crossing_pair() {
  const FlatChartScene s = scenes::crossing_lines();
  return {build_JA(s.k, s.n, s.nu), s.disk_map};
}

}  // namespace

TEST_CASE("strategy names round-trip") {
  for (Strategy s : {Strategy::uniform, Strategy::boundary, Strategy::directional}) {
    CHECK(parse_strategy(to_string(s)) == s);
  }
  CHECK_THROWS_AS(parse_strategy("sideways"), InvalidInput);
}

TEST_CASE("random_perturbation stays strictly within delta") {
  const PLMap F = freudenthal_cube(2, 2);
  CHECK(c0_distance(random_perturbation(F, 0, 1), F) == 0);
  CHECK_THROWS_AS(random_perturbation(F, -1, 1), InvalidInput);
  for (Strategy s : {Strategy::uniform, Strategy::boundary, Strategy::directional}) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const PLMap P = random_perturbation(F, 1, seed, s);
      CHECK(P.same_domain(F));
      CHECK(c0_distance(P, F) < 1);
    }
  }
  const Rational delta(1, 1000);
  for (std::uint64_t seed = 0; seed < 200; ++seed) CHECK(c0_distance(random_perturbation(F, delta, seed), F) < delta);
}

TEST_CASE("directional perturbations are rigid translations") {
  const PLMap F = freudenthal_cube(2, 1);
  const PLMap P = random_perturbation(F, Rational(1, 10), 9, Strategy::directional);
  const Point shift = P.image(0) - F.image(0);
  CHECK(shift != Point{0, 0});
  for (VertexId v = 0; v < F.domain().vertex_count(); ++v) CHECK(P.image(v) - F.image(v) == shift);
}

TEST_CASE("random_perturbation is reproducible") {
  const PLMap F = freudenthal_cube(3, 1);
  CHECK(random_perturbation(F, Rational(1, 3), 42).images() == random_perturbation(F, Rational(1, 3), 42).images());
  CHECK(random_perturbation(F, Rational(1, 3), 42).images() != random_perturbation(F, Rational(1, 3), 43).images());
}

TEST_CASE("crossing lines survive perturbations below the certified delta") {
  const auto [F, G] = crossing_pair();
  for (Strategy s : {Strategy::uniform, Strategy::boundary, Strategy::directional}) {
    const ProbeReport r = probe_essential(F, G, Rational(1, 32), 300, 5, s);
    CHECK(r.trials == 300);
    CHECK(r.intersecting == 300);
    CHECK_FALSE(r.witness);
    CHECK(r.summary().find("no witness") != std::string::npos);
  }
}

TEST_CASE("a point against a point is refuted at any scale") {
  const PLMap F = point_map(Point{0}), G = point_map(Point{0});
  const ProbeReport r = probe_essential(F, G, Rational(1, 10), 50, 3);
  REQUIRE(r.witness);
  CHECK(check_witness(F, G, Rational(1, 10), r.witness->F_tilde, r.witness->G_tilde));
  CHECK(r.witness->dist_F < Rational(1, 10));
  CHECK(r.summary().find("refuted") != std::string::npos);
  CHECK(r.intersecting < r.trials);
}

TEST_CASE("crossing lines separate once delta is large") {
  const auto [F, G] = crossing_pair();
  const ProbeReport r = probe_essential(F, G, 10, 200, 1, Strategy::directional);
  REQUIRE(r.witness);
  CHECK(check_witness(F, G, 10, r.witness->F_tilde, r.witness->G_tilde));
}

TEST_CASE("check_witness rejects invalid pairs") {
  const PLMap F = point_map(Point{0}), G = point_map(Point{0});
  const PLMap far = point_map(Point{5});
  CHECK_FALSE(check_witness(F, G, 1, F, G));              // still intersecting
  CHECK_FALSE(check_witness(F, G, 1, far, G));            // too far
  CHECK_FALSE(check_witness(F, G, 1, freudenthal_cube(1, 1), G));  // wrong domain
  CHECK(check_witness(F, G, 1, point_map(Point{Rational(1, 2)}), G));
}

TEST_CASE("reports do not depend on the thread count") {
  const PLMap F = point_map(Point{0, 0});
  const auto [cF, cG] = crossing_pair();
  const ProbeReport a = probe_essential(cF, cG, Rational(3, 2), 64, 17, Strategy::uniform, 1);
  const ProbeReport b = probe_essential(cF, cG, Rational(3, 2), 64, 17, Strategy::uniform, 4);
  CHECK(a.intersecting == b.intersecting);
  REQUIRE(a.witness.has_value() == b.witness.has_value());
  if (a.witness) {
    CHECK(a.witness->trial == b.witness->trial);
    CHECK(a.witness->F_tilde.images() == b.witness->F_tilde.images());
    CHECK(a.witness->G_tilde.images() == b.witness->G_tilde.images());
  }
  const ProbeReport c = probe_essential(F, F, Rational(1, 4), 10, 2, Strategy::boundary, 3);
  const ProbeReport d = probe_essential(F, F, Rational(1, 4), 10, 2, Strategy::boundary, 1);
  CHECK(c.intersecting == d.intersecting);
  REQUIRE(c.witness);
  REQUIRE(d.witness);
  CHECK(c.witness->trial == d.witness->trial);
}
