#include <doctest.h>

#include "c0t/errors.hpp"
#include "c0t/plcore.hpp"
#include "c0t/random.hpp"
#include "oracles.hpp"

#include <map>
#include <memory>

using namespace c0t;

namespace {

Rational small_rational(Rng& rng, int range = 8, int den = 4) {
  return ratio(rng.uniform_int(-range * den, range * den), rng.uniform_int(1, den));
}

Point random_point(Rng& rng, std::size_t dim) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(small_rational(rng));
  return Point(std::move(c));
}

PLMap segment_map(const Point& a, const Point& b) {
  auto K = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(2, {Simplex{{0, 1}}}));
  return PLMap(K, {a, b});
}

}  // namespace

TEST_CASE("cheb_dist examples") {
  CHECK(cheb_dist(Point{0, 0}, Point{0, 0}) == 0);
  CHECK(cheb_dist(Point{0, 0}, Point{1, -2}) == 2);
  CHECK(cheb_dist(Point{1, 1, 1}, Point{-1, 2, 1}) == 2);
  CHECK_THROWS_AS(cheb_dist(Point{0}, Point{0, 0}), InvalidInput);
}

TEST_CASE("cheb_dist is a metric on random rational points") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const Point u = random_point(rng, 3), v = random_point(rng, 3), w = random_point(rng, 3);
    CHECK(cheb_dist(u, u) == 0);
    CHECK(cheb_dist(u, v) == cheb_dist(v, u));
    CHECK((cheb_dist(u, v) == 0) == (u == v));
    CHECK(cheb_dist(u, w) <= cheb_dist(u, v) + cheb_dist(v, w));
  }
}

TEST_CASE("c0_distance examples") {
  const PLMap F = segment_map(Point{0, 0}, Point{1, 0});
  CHECK(c0_distance(F, F) == 0);
  CHECK(c0_distance(F, F.translated(Point{Rational(3, 10), 0})) == Rational(3, 10));
  const PLMap G = F.with_images({Point{0, Rational(1, 10)}, Point{1, Rational(7, 10)}});
  CHECK(c0_distance(F, G) == Rational(7, 10));
  const PLMap H = segment_map(Point{0, 0}, Point{1, 0});
  CHECK_THROWS_AS(c0_distance(F, freudenthal_cube(1, 2)), InvalidInput);
  CHECK(c0_distance(F, H) == 0);
}

TEST_CASE("c0_distance is attained at vertices (dense sampling never exceeds it)") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const PLMap F = freudenthal_cube(2, 1);
    std::vector<Point> a, b;
    for (std::size_t v = 0; v < F.domain().vertex_count(); ++v) {
      a.push_back(random_point(rng, 2));
      b.push_back(random_point(rng, 2));
    }
    const PLMap A = F.with_images(a), B = F.with_images(b);
    const Rational d = c0_distance(A, B);
    for (const auto& s : F.domain().facets()) {
      for (int i = 0; i <= 6; ++i) {
        for (int j = 0; i + j <= 6; ++j) {
          const std::vector<Rational> w{ratio(i, 6), ratio(j, 6), ratio(6 - i - j, 6)};
          CHECK(cheb_dist(eval_pl(A, s, w), eval_pl(B, s, w)) <= d);
        }
      }
    }
  }
}

TEST_CASE("eval_pl examples") {
  const PLMap F = segment_map(Point{0, 0}, Point{2, 0});
  CHECK(eval_pl(F, Simplex{{0, 1}}, std::vector<Rational>{1, 0}) == Point{0, 0});
  CHECK(eval_pl(F, Simplex{{0, 1}}, std::vector<Rational>{Rational(1, 2), Rational(1, 2)}) == Point{1, 0});
  auto K = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(3, {Simplex{{0, 1, 2}}}));
  const PLMap T(K, {Point{0, 0}, Point{3, 0}, Point{0, 3}});
  const Rational third(1, 3);
  CHECK(eval_pl(T, Simplex{{0, 1, 2}}, std::vector<Rational>{third, third, third}) == Point{1, 1});
  CHECK_THROWS_AS(eval_pl(T, Simplex{{0, 1, 2}}, std::vector<Rational>{1, 1, -1}), InvalidInput);
  CHECK_THROWS_AS(eval_pl(F, Simplex{{0, 2}}, std::vector<Rational>{1, 0}), InvalidInput);
}

TEST_CASE("simplex_pair_intersects examples") {
  const std::vector<Point> a{Point{0, 0}, Point{1, 0}}, b{Point{0, 1}, Point{1, 1}};
  CHECK_FALSE(simplex_pair_intersects(a, b));
  const std::vector<Point> v{Point{0, -1}, Point{0, 1}}, h{Point{-1, 0}, Point{1, 0}};
  CHECK(simplex_pair_intersects(v, h));
  const std::vector<Point> tri{Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}};
  const std::vector<Point> seg{Point{Rational(1, 4), Rational(1, 4), -1}, Point{Rational(1, 4), Rational(1, 4), 1}};
  CHECK(simplex_pair_intersects(tri, seg));
  CHECK(simplex_pair_distance(a, b) == 1);
}

TEST_CASE("simplex_pair_intersects agrees with the orientation oracle in the plane") {
  Rng rng(2024);
  int disagreements = 0;
  for (int t = 0; t < 1000; ++t) {
    const Point p = random_point(rng, 2), q = random_point(rng, 2);
    const Point a = random_point(rng, 2), b = random_point(rng, 2), c = random_point(rng, 2);
    const std::vector<Point> S{p, q}, T{a, b, c};
    const bool got = simplex_pair_intersects(S, T);
    CHECK(got == simplex_pair_intersects(T, S));
    if (got != oracle::segment_meets_triangle(p, q, a, b, c)) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("polyhedra_distance and images_intersect") {
  const PLMap F = segment_map(Point{0, 0}, Point{1, 0});
  const PLMap G = segment_map(Point{0, 2}, Point{5, 2});
  CHECK(polyhedra_distance(F.embedded_facets(), G.embedded_facets()) == 2);
  CHECK_FALSE(images_intersect(F, G));
  CHECK(images_intersect(F, segment_map(Point{Rational(1, 2), -1}, Point{Rational(1, 2), 1})));
}

TEST_CASE("simplicial complexes are face-closed") {
  const auto K = SimplicialComplex::from_facets(4, {Simplex{{0, 1, 2}}, Simplex{{2, 3}}});
  CHECK(K.dim() == 2);
  CHECK(K.simplices(0).size() == 4);
  CHECK(K.simplices(1).size() == 4);
  CHECK(K.simplices(2).size() == 1);
  CHECK(K.facets().size() == 2);
  CHECK(K.contains(Simplex{{1, 2}}));
  CHECK(K.euler_characteristic() == 1);
  CHECK_THROWS_AS(SimplicialComplex(3, {Simplex{{0, 1, 2}}}), InvalidInput);  // edges missing
  CHECK(SimplicialComplex(3, {Simplex{{0, 1}}}).simplices(0).size() == 3);  // vertices are implicit
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {Simplex{{0, 0}}}), InvalidInput);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {Simplex{{0, 5}}}), InvalidInput);
}

TEST_CASE("permutation_sign") {
  const std::vector<VertexId> id{0, 1, 2}, swap{1, 0, 2}, cyc{1, 2, 0};
  CHECK(permutation_sign(id) == 1);
  CHECK(permutation_sign(swap) == -1);
  CHECK(permutation_sign(cyc) == 1);
}

TEST_CASE("freudenthal_cube examples") {
  const PLMap c1 = freudenthal_cube(1, 1);
  CHECK(c1.domain().vertex_count() == 2);
  CHECK(c1.domain().simplices(1).size() == 1);
  const PLMap c2 = freudenthal_cube(2, 1);
  CHECK(c2.domain().simplices(2).size() == 2);
  const PLMap c3 = freudenthal_cube(3, 2);
  CHECK(c3.domain().simplices(3).size() == 48);
  CHECK(c3.domain().euler_characteristic() == 1);
  // Vertex id sum_j i_j (s+1)^j at coordinates -1 + 2 i_j / s.
  CHECK(c3.image(1 + 2 * 3 + 0 * 9) == Point{0, 1, -1});
  CHECK_THROWS_AS(freudenthal_cube(0, 1), InvalidInput);
  CHECK_THROWS_AS(freudenthal_cube(2, 0), InvalidInput);
}

TEST_CASE("freudenthal interior faces are shared by exactly two top simplices") {
  for (int m = 1; m <= 3; ++m) {
    for (int s = 1; s <= 3; ++s) {
      const PLMap C = freudenthal_cube(m, s);
      CHECK(C.domain().simplices(m).size() == static_cast<std::size_t>([&] {
              long f = 1, p = 1;
              for (int i = 2; i <= m; ++i) f *= i;
              for (int i = 0; i < m; ++i) p *= s;
              return f * p;
            }()));
      std::map<std::vector<VertexId>, int> count;
      for (const auto& top : C.domain().simplices(m)) {
        for (std::size_t skip = 0; skip < top.vertices.size(); ++skip) {
          std::vector<VertexId> face;
          for (std::size_t i = 0; i < top.vertices.size(); ++i) {
            if (i != skip) face.push_back(top.vertices[i]);
          }
          ++count[face];
        }
      }
      for (const auto& [face, c] : count) {
        // A face on the boundary of the cube has all vertices on one facet.
        bool on_boundary = false;
        for (int axis = 0; axis < m && !on_boundary; ++axis) {
          for (int side : {-1, 1}) {
            bool all = true;
            for (VertexId v : face) all = all && C.image(v)[axis] == side;
            on_boundary = on_boundary || all;
          }
        }
        CHECK(c == (on_boundary ? 1 : 2));
      }
    }
  }
}

TEST_CASE("freudenthal_locate returns barycentric weights that reproduce the point") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Point x{rng.uniform_grid(Rational(-1), Rational(1), 6), rng.uniform_grid(Rational(-1), Rational(1), 6),
                  rng.uniform_grid(Rational(-1), Rational(1), 6)};
    const CubeLocation loc = freudenthal_locate(3, 3, x);
    const PLMap C = freudenthal_cube(3, 3);
    CHECK(eval_pl(C, loc.simplex, loc.weights) == x);
  }
}

TEST_CASE("boundary_cycle examples") {
  const OrientedCycle s0 = boundary_cycle(freudenthal_cube(1, 1));
  REQUIRE(s0.facets().size() == 2);
  CHECK(s0.cycle_dim() == 0);
  int total = 0;
  for (const auto& f : s0.facets()) {
    const Point& p = s0.map().image(f.simplex.vertices[0]);
    total += f.sign;
    CHECK(f.sign == (p[0] > 0 ? 1 : -1));
  }
  CHECK(total == 0);

  const OrientedCycle s1 = boundary_cycle(freudenthal_cube(2, 1));
  CHECK(s1.facets().size() == 4);
  CHECK(chain_boundary(s1.facets()).empty());

  // Coherence: walking the oriented edges goes once around the square
  // counterclockwise (signed area positive).
  Rational area2 = 0;
  for (const auto& f : s1.facets()) {
    const Point& a = s1.map().image(f.simplex.vertices[f.sign > 0 ? 0 : 1]);
    const Point& b = s1.map().image(f.simplex.vertices[f.sign > 0 ? 1 : 0]);
    area2 += a[0] * b[1] - a[1] * b[0];
  }
  CHECK(area2 == 8);
}

TEST_CASE("boundary of a boundary is empty") {
  for (int m = 2; m <= 4; ++m) {
    const OrientedCycle z = boundary_cycle(freudenthal_cube(m, 2));
    CHECK(chain_boundary(z.facets()).empty());
    CHECK(z.facets().size() == static_cast<std::size_t>(2 * m * [&] {
            long f = 1, p = 1;
            for (int i = 2; i <= m - 1; ++i) f *= i;
            for (int i = 0; i < m - 1; ++i) p *= 2;
            return f * p;
          }()));
  }
}

TEST_CASE("oriented cycles reject non-closed chains") {
  const PLMap C = freudenthal_cube(2, 1);
  const auto& edges = C.domain().simplices(1);
  CHECK_THROWS_AS(OrientedCycle(C, {{edges[0], 1}}, 1), InvalidInput);
  CHECK_THROWS_AS(OrientedCycle(C, {{Simplex{{0}}, 1}}, 0), InvalidInput);
  CHECK_THROWS_AS(closed_polygon({Point{0, 0}, Point{1, 0}}), InvalidInput);
  const OrientedCycle tri = closed_polygon({Point{0, 0}, Point{1, 0}, Point{0, 1}});
  CHECK(tri.facets().size() == 3);
  CHECK(tri.reversed().facets().front().sign == -tri.facets().front().sign);
}

TEST_CASE("compacted keeps only the support of a cycle") {
  const OrientedCycle z = boundary_cycle(freudenthal_cube(2, 2));
  std::vector<VertexId> old_ids;
  const OrientedCycle c = z.compacted(&old_ids);
  CHECK(c.map().domain().vertex_count() == 8);
  CHECK(old_ids.size() == 8);
  CHECK(c.facets().size() == z.facets().size());
  CHECK(chain_boundary(c.facets()).empty());
  for (VertexId v = 0; v < old_ids.size(); ++v) CHECK(c.map().image(v) == z.map().image(old_ids[v]));
}
