#include <doctest.h>

#include "c0t/errors.hpp"
#include "c0t/probe.hpp"
#include "c0t/random.hpp"
#include "c0t/refute.hpp"
#include "oracles.hpp"

using namespace c0t;

namespace {

std::vector<Point> sampled_segment(const Point& a, const Point& b, int samples) {
  std::vector<Point> out;
  for (int i = 0; i < samples; ++i) {
    const Rational t = ratio(i, samples - 1);
    out.push_back(a * Rational(1 - t) + b * t);
  }
  return out;
}

SampledMap sampled(const std::vector<Point>& pts, const Rational& epsilon) {
  SampledMap m;
  m.space = FiniteMetricSpace::from_points(pts);
  m.images = pts;
  m.cover = find_cover(m.space, epsilon);
  return m;
}

/// Unit-interval samples 0, 1/99, ..., 1 with intervals of 11 samples that
/// share their end samples: multiplicity 2.
Cover chain_cover(std::size_t n, std::size_t width) {
  Cover c;
  c.epsilon = ratio(static_cast<long>(width - 1), static_cast<long>(n - 1));
  for (std::size_t start = 0; start + 1 < n; start += width - 1) {
    std::vector<std::size_t> s;
    for (std::size_t i = start; i < std::min(n, start + width); ++i) s.push_back(i);
    c.sets.push_back(std::move(s));
  }
  return c;
}

std::vector<Point> unit_samples(int n) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back(Point{ratio(i, n - 1)});
  return pts;
}

}  // namespace

TEST_CASE("from_matrix validates metric axioms") {
  using Row = std::vector<Rational>;
  const auto X = FiniteMetricSpace::from_matrix({Row{0, 1, 2}, Row{1, 0, 1}, Row{2, 1, 0}});
  CHECK(X.size() == 3);
  CHECK(X.dist(0, 2) == 2);
  CHECK(X.resolution() == 1);
  CHECK_THROWS_AS(FiniteMetricSpace::from_matrix({Row{0, 1}, Row{2, 0}}), InvalidInput);
  CHECK_THROWS_AS(FiniteMetricSpace::from_matrix({Row{1, 1}, Row{1, 0}}), InvalidInput);
  CHECK_THROWS_AS(FiniteMetricSpace::from_matrix({Row{0, 0}, Row{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(FiniteMetricSpace::from_matrix({Row{0, 1, 5}, Row{1, 0, 1}, Row{5, 1, 0}}), InvalidInput);
  CHECK_THROWS_AS(FiniteMetricSpace::from_matrix({Row{0, 1}, Row{1}}), InvalidInput);
  CHECK_THROWS_AS(FiniteMetricSpace::from_points({Point{0, 0}, Point{0, 0}}), InvalidInput);
}

TEST_CASE("resolution matches the brute-force oracle") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Point> pts;
    for (int i = 0; i < 15; ++i) pts.push_back(Point{ratio(rng.uniform_int(-50, 50), 7), ratio(rng.uniform_int(-50, 50), 5)});
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
      return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    CHECK(FiniteMetricSpace::from_points(pts).resolution() == oracle::resolution(pts));
  }
}

TEST_CASE("cover dimension bound examples") {
  CHECK(cover_dimension_bound(FiniteMetricSpace::from_points({Point{0}}), Rational(1, 10)) == 0);
  CHECK(cover_dimension_bound(FiniteMetricSpace::from_points({}), Rational(1, 10)) == -1);
  const auto seg = FiniteMetricSpace::from_points(unit_samples(100));
  CHECK(cover_dimension_bound(seg, Rational(1, 20)) == 1);
  CHECK(cover_dimension_bound(seg, 2) == 0);
  CHECK_THROWS_AS(cover_dimension_bound(seg, 0), InvalidInput);
  CHECK_THROWS_AS(find_cover(seg, Rational(1, 200)), InvalidInput);
}

TEST_CASE("cover dimension bound is weakly decreasing in epsilon") {
  std::vector<Point> grid;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) grid.push_back(Point{ratio(i, 7), ratio(j, 7)});
  }
  const auto X = FiniteMetricSpace::from_points(grid);
  int previous = 1000;
  for (int m = 1; m <= 16; ++m) {
    const int b = cover_dimension_bound(X, ratio(m, 7));
    CHECK(b <= previous);
    CHECK(b >= 0);
    previous = b;
  }
  CHECK(previous == 0);
}

TEST_CASE("find_cover produces valid covers that respect the resolution") {
  Rng rng(19);
  for (int t = 0; t < 10; ++t) {
    std::vector<Point> pts;
    for (int i = 0; i < 30; ++i) pts.push_back(Point{ratio(i, 29), ratio(rng.uniform_int(0, 4), 40)});
    const auto X = FiniteMetricSpace::from_points(pts);
    const Rational eps = X.resolution() * 3;
    const Cover c = find_cover(X, eps);
    CHECK_NOTHROW(validate_cover(X, c));
    CHECK(oracle::co_covered(pts, c.sets, X.resolution()));
    CHECK(respects_resolution(X, c, X.resolution()));
    for (const auto& s : c.sets) {
      for (auto i : s) {
        for (auto j : s) CHECK(oracle::chebyshev(pts[i], pts[j]) <= eps);
      }
    }
  }
}

TEST_CASE("validate_cover and multiplicity") {
  const auto X = FiniteMetricSpace::from_points(unit_samples(100));
  const Cover c = chain_cover(100, 11);
  CHECK_NOTHROW(validate_cover(X, c));
  CHECK(multiplicity(c, 100) == 2);
  CHECK(respects_resolution(X, c, X.resolution()));
  Cover gap = c;
  gap.sets.pop_back();
  CHECK_THROWS_AS(validate_cover(X, gap), InvalidInput);
  Cover wide = c;
  wide.epsilon = Rational(1, 20);
  CHECK_THROWS_AS(validate_cover(X, wide), InvalidInput);
  Cover split = {{{0, 1}, {2, 3}}, 1};
  CHECK_FALSE(respects_resolution(FiniteMetricSpace::from_points(unit_samples(4)), split, ratio(1, 3)));
}

TEST_CASE("nerve approximation examples") {
  SUBCASE("one set collapses to a point") {
    const auto pts = unit_samples(5);
    const auto X = FiniteMetricSpace::from_points(pts);
    const NerveApproximation N = nerve_approximation(X, pts, Cover{{{0, 1, 2, 3, 4}}, 1});
    CHECK(N.polyhedron_dim == 0);
    for (const auto& p : N.sample_images) CHECK(p == pts.front());
    CHECK(N.deviation == 1);
    CHECK(N.deviation_bound >= N.deviation);
  }
  SUBCASE("a multiplicity-2 chain gives a path") {
    const auto pts = unit_samples(100);
    const auto X = FiniteMetricSpace::from_points(pts);
    std::vector<Point> f;
    for (const auto& p : pts) f.push_back(Point{p[0], Rational(p[0] * p[0])});
    const NerveApproximation N = nerve_approximation(X, f, chain_cover(100, 11));
    CHECK(N.polyhedron_dim == 1);
    CHECK(N.deviation_bound >= N.deviation);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(oracle::chebyshev(N.sample_images[i], f[i]) <= N.deviation_bound);
      Rational total = 0;
      for (const auto& w : N.weights[i]) {
        CHECK(w >= 0);
        total += w;
      }
      CHECK(total == 1);
    }
  }
  SUBCASE("disjoint clusters give isolated vertices") {
    const std::vector<Point> pts{Point{0}, Point{Rational(1, 10)}, Point{5}, Point{Rational(51, 10)}};
    const auto X = FiniteMetricSpace::from_points(pts);
    const NerveApproximation N = nerve_approximation(X, pts, Cover{{{0, 1}, {2, 3}}, Rational(1, 10)});
    CHECK(N.polyhedron_dim == 0);
    CHECK(N.nerve_map.domain().vertex_count() == 2);
  }
  CHECK_THROWS_AS(nerve_approximation(FiniteMetricSpace::from_points({Point{0}}), {}, Cover{{{0}}, 1}), InvalidInput);
}

TEST_CASE("separating_translation examples") {
  const std::vector<EmbeddedSimplex> x{{Point{-1, 0, 0}, Point{1, 0, 0}}};
  const std::vector<EmbeddedSimplex> y{{Point{0, -1, 0}, Point{0, 1, 0}}};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Rational bound(1, 100);
    const Point v = separating_translation(x, y, bound, seed);
    CHECK(cheb_norm(v) < bound);
    // x-axis + v meets the y-axis iff v_z = 0 and |v_x|, |v_y| <= 1.
    CHECK(v[2] != 0);
  }
  const std::vector<EmbeddedSimplex> tri{{Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}}};
  CHECK_THROWS_AS(separating_translation(x, tri, Rational(1, 10), 1), InvalidInput);
  CHECK_THROWS_AS(separating_translation(x, y, 0, 1), InvalidInput);
  // Two points always separate, even on the coarsest grid.
  const std::vector<EmbeddedSimplex> p{{Point{0, 0}}};
  CHECK(separating_translation(p, p, 1, 5, 1) != Point{0, 0});
}

TEST_CASE("refute_essential: skew segments in R^3") {
  const SampledMap A = sampled(sampled_segment(Point{-1, 0, 0}, Point{1, 0, 0}, 41), Rational(1, 10));
  const SampledMap B = sampled(sampled_segment(Point{0, -1, 0}, Point{0, 1, 0}, 41), Rational(1, 10));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const RefutationWitness w = refute_essential(A, B, Rational(1, 5), seed);
    CHECK(verify_witness(w, A, B));
    CHECK(w.dist_f < Rational(1, 5));
    CHECK(w.dist_g < Rational(1, 5));
    CHECK_FALSE(images_intersect(w.f_tilde, w.g_tilde));
    // The sampled witnesses also pass the probe's independent check.
    CHECK(check_witness(discrete_map(A.images), discrete_map(B.images), Rational(1, 5), w.f_tilde_samples,
                        w.g_tilde_samples));
  }
}

TEST_CASE("refute_essential: an arc against a point in the plane") {
  for (const Rational& delta : {Rational(1, 10), Rational(1, 100), Rational(1, 1000)}) {
    std::vector<Point> arc;
    for (int i = 0; i < 101; ++i) {
      const Rational s = ratio(4 * i, 100) - 2;
      arc.push_back(Point{Rational(delta * s), Rational(delta * s * s / 4)});
    }
    const SampledMap A = sampled(arc, delta / 4);
    SampledMap B;
    B.space = FiniteMetricSpace::from_points({Point{0, 0}});
    B.images = {Point{0, 0}};
    B.cover = Cover{{{0}}, delta / 4};
    const RefutationWitness w = refute_essential(A, B, delta, 7);
    CHECK(verify_witness(w, A, B));
  }
}

TEST_CASE("refute_essential gates") {
  const SampledMap A = sampled(sampled_segment(Point{-1, 0}, Point{1, 0}, 21), Rational(1, 10));
  const SampledMap B = sampled(sampled_segment(Point{0, -1}, Point{0, 1}, 21), Rational(1, 10));
  CHECK_THROWS_AS(refute_essential(A, B, Rational(1, 2), 1), InvalidInput);  // 1 + 1 is not below 2
  SampledMap A3 = sampled(sampled_segment(Point{-1, 0, 0}, Point{1, 0, 0}, 41), Rational(1, 10));
  A3.cover = Cover{{{}, {}}, 1};
  for (std::size_t i = 0; i <= 20; ++i) A3.cover.sets[0].push_back(i);
  for (std::size_t i = 20; i <= 40; ++i) A3.cover.sets[1].push_back(i);
  const SampledMap B3 = sampled(sampled_segment(Point{0, -1, 0}, Point{0, 1, 0}, 41), Rational(1, 10));
  CHECK_THROWS_AS(refute_essential(A3, B3, Rational(1, 5), 1), InvalidInput);  // cover too coarse
  CHECK_THROWS_AS(refute_essential(A3, B3, 0, 1), InvalidInput);
}

TEST_CASE("verify_witness rejects tampered witnesses") {
  const SampledMap A = sampled(sampled_segment(Point{-1, 0, 0}, Point{1, 0, 0}, 41), Rational(1, 10));
  const SampledMap B = sampled(sampled_segment(Point{0, -1, 0}, Point{0, 1, 0}, 41), Rational(1, 10));
  const RefutationWitness w = refute_essential(A, B, Rational(1, 5), 11);
  REQUIRE(verify_witness(w, A, B));

  RefutationWitness t = w;
  t.delta_used = w.dist_f;  // distance no longer strictly below delta
  CHECK_FALSE(verify_witness(t, A, B));

  t = w;
  t.f_tilde = w.f_tilde.translated(-w.v);  // untranslated nerves cross at the origin
  t.f_tilde_samples = w.f_tilde_samples.translated(-w.v);
  CHECK_FALSE(verify_witness(t, A, B));
}
