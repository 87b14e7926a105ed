#include "c0t/linking.hpp"

#include "c0t/errors.hpp"
#include "c0t/lp.hpp"
#include "c0t/random.hpp"

#include <string>

namespace c0t {

namespace {

struct PreparedSimplex {
  EmbeddedSimplex points;
  Box box;
  int sign;
};

std::vector<PreparedSimplex> prepare(const OrientedCycle& z) {
  std::vector<PreparedSimplex> out;
  out.reserve(z.facets().size());
  for (const auto& f : z.facets()) {
    auto pts = z.map().embed(f.simplex);
    Box box = bounding_box(pts);
    out.push_back({std::move(pts), std::move(box), f.sign});
  }
  return out;
}

// Contribution of the cone simplex [apex, base...] against tau.
// Returns nullopt on a non-transverse meeting.
std::optional<int> pair_sign(const Point& apex, const PreparedSimplex& base, const PreparedSimplex& tau,
                             std::size_t n) {
  const std::size_t p1 = base.points.size();  // p + 1 columns
  const std::size_t q = tau.points.size() - 1;
  lp::Matrix M(n, n);
  for (std::size_t j = 0; j < p1; ++j) {
    const Point col = base.points[j] - apex;
    for (std::size_t i = 0; i < n; ++i) M(i, j) = col[i];
  }
  for (std::size_t j = 1; j <= q; ++j) {
    const Point col = tau.points[j] - tau.points[0];
    for (std::size_t i = 0; i < n; ++i) M(i, p1 + j - 1) = -col[i];
  }
  const Point rhs_pt = tau.points[0] - apex;
  std::vector<Rational> rhs(rhs_pt.coords().begin(), rhs_pt.coords().end());
  std::vector<Rational> y;
  int det_sign = 0;
  if (!lp::solve_square(M, rhs, y, det_sign)) {
    EmbeddedSimplex cone;
    cone.reserve(p1 + 1);
    cone.push_back(apex);
    cone.insert(cone.end(), base.points.begin(), base.points.end());
    if (simplex_pair_intersects(cone, tau.points)) return std::nullopt;
    return 0;
  }
  // Barycentric coordinates: cone (1 - sum s, s_0..s_p); tau (1 - sum t, t_1..t_q).
  Rational sum_s = 0;
  Rational sum_t = 0;
  bool boundary = false;
  for (std::size_t j = 0; j < p1; ++j) {
    if (y[j] < 0) return 0;
    if (y[j] == 0) boundary = true;
    sum_s += y[j];
  }
  for (std::size_t j = p1; j < n; ++j) {
    if (y[j] < 0) return 0;
    if (y[j] == 0) boundary = true;
    sum_t += y[j];
  }
  if (sum_s > 1 || sum_t > 1) return 0;
  if (boundary || sum_s == 1 || sum_t == 1) return std::nullopt;
  // The frame determinant differs from det(M) by (-1)^q.
  const int frame_sign = (q % 2 == 0) ? det_sign : -det_sign;
  return frame_sign * base.sign * tau.sign;
}

std::optional<long> count(const std::vector<PreparedSimplex>& base, const std::vector<PreparedSimplex>& other,
                          const Point& apex, std::size_t n) {
  long total = 0;
  for (const auto& sigma : base) {
    EmbeddedSimplex cone_pts;
    cone_pts.push_back(apex);
    cone_pts.insert(cone_pts.end(), sigma.points.begin(), sigma.points.end());
    const Box cone_box = bounding_box(cone_pts);
    for (const auto& tau : other) {
      if (box_gap(cone_box, tau.box) > 0) continue;
      auto s = pair_sign(apex, sigma, tau, n);
      if (!s) return std::nullopt;
      total += *s;
    }
  }
  return total;
}

void check_pair(const OrientedCycle& z1, const OrientedCycle& z2) {
  if (z1.ambient_dim() != z2.ambient_dim()) throw InvalidInput("cycles live in different ambient spaces");
}

}  // namespace

Rational image_separation(const OrientedCycle& z1, const OrientedCycle& z2) {
  check_pair(z1, z2);
  return polyhedra_distance(z1.embedded(), z2.embedded());
}

std::optional<long> cone_intersection_number(const OrientedCycle& z1, const OrientedCycle& z2, const Point& apex) {
  check_pair(z1, z2);
  const std::size_t n = z1.ambient_dim();
  if (apex.dim() != n) throw InvalidInput("apex dimension mismatch");
  if (static_cast<std::size_t>(z1.cycle_dim() + z2.cycle_dim() + 1) != n) {
    throw InvalidInput("cycle dimensions are not complementary");
  }
  return count(prepare(z1), prepare(z2), apex, n);
}

ApexSearchResult cone_apex_search(const OrientedCycle& z1, const OrientedCycle& z2, std::uint64_t rng_seed,
                                  int retry_budget, const std::vector<Point>& first_candidates) {
  check_pair(z1, z2);
  const std::size_t n = z1.ambient_dim();
  if (static_cast<std::size_t>(z1.cycle_dim() + z2.cycle_dim() + 1) != n) {
    throw InvalidInput("cycle dimensions are not complementary");
  }
  const auto base = prepare(z1);
  const auto other = prepare(z2);

  std::vector<EmbeddedSimplex> all = z1.embedded();
  for (auto& s : z2.embedded()) all.push_back(std::move(s));
  Box box = all.empty() ? Box{Point::zero(n), Point::zero(n)} : bounding_box(all);
  Rational width = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational w = box.hi[i] - box.lo[i];
    if (w > width) width = w;
  }

  Rng rng(rng_seed);
  int attempts = 0;
  auto random_apex = [&]() {
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = rng.uniform_grid(Rational(box.lo[i] - width), Rational(box.hi[i] + width));
    }
    // Push one coordinate strictly beyond the box.
    const auto axis = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
    const Rational offset = rng.uniform_grid(width, Rational(2 * width));
    c[axis] = rng.uniform_int(0, 1) ? Rational(box.hi[axis] + offset) : Rational(box.lo[axis] - offset);
    return Point(std::move(c));
  };
  auto outside_box = [&](const Point& a) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] < box.lo[i] || a[i] > box.hi[i]) return true;
    }
    return false;
  };

  std::size_t next_given = 0;
  while (attempts < retry_budget) {
    ++attempts;
    Point apex = next_given < first_candidates.size() ? first_candidates[next_given++] : random_apex();
    if (apex.dim() != n) throw InvalidInput("apex candidate dimension mismatch");
    if (!outside_box(apex)) continue;
    if (other.empty()) return {apex, 0, attempts};
    if (auto total = count(base, other, apex, n)) return {apex, *total, attempts};
  }
  throw RetryExhausted("no generic cone apex found in " + std::to_string(retry_budget) + " attempts");
}

LinkingResult linking_number(const OrientedCycle& z1, const OrientedCycle& z2, const LinkingOptions& options) {
  check_pair(z1, z2);
  const std::size_t n = z1.ambient_dim();
  if (static_cast<std::size_t>(z1.cycle_dim() + z2.cycle_dim() + 1) != n) {
    throw InvalidInput("cycle dimensions " + std::to_string(z1.cycle_dim()) + " and " +
                       std::to_string(z2.cycle_dim()) + " are not complementary in R^" + std::to_string(n));
  }
  LinkingResult result;
  if (z1.empty() || z2.empty()) {
    result.value = 0;
    result.separation = 0;
    result.stability_radius = 0;
    auto found = cone_apex_search(z1, z2, options.seed, options.retry_budget, options.apex_candidates);
    result.apex = found.apex;
    result.apex_attempts = found.attempts;
    return result;
  }
  result.separation = image_separation(z1, z2);
  if (result.separation == 0) throw InvalidInput("cycle images intersect; linking number undefined");
  result.stability_radius = result.separation / 2;
  auto found = cone_apex_search(z1, z2, options.seed, options.retry_budget, options.apex_candidates);
  result.value = found.intersection_number;
  result.apex = found.apex;
  result.apex_attempts = found.attempts;
  return result;
}

}  // namespace c0t
