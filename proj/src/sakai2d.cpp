#include "c0t/sakai2d.hpp"

#include "c0t/errors.hpp"
#include "c0t/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace c0t {

namespace {

Rational cross(const Point& u, const Point& v) { return u[0] * v[1] - u[1] * v[0]; }

int orient(const Point& a, const Point& b, const Point& c) { return sign(cross(b - a, c - a)); }

Rational dot(const Point& u, const Point& v) { return u[0] * v[0] + u[1] * v[1]; }

Point perp_left(const Point& d) { return Point{Rational(-d[1]), d[0]}; }

Rational squared_norm(const Point& v) { return dot(v, v); }

bool inside(const Point& q, const Point& center, const Rational& radius) {
  return squared_norm(q - center) < radius * radius;
}

bool on_segment(const Point& q, const Point& a, const Point& b) {
  if (orient(a, b, q) != 0) return false;
  return std::min(a[0], b[0]) <= q[0] && q[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= q[1] &&
         q[1] <= std::max(a[1], b[1]);
}

Point at(const Point& a, const Point& b, const Rational& t) { return a + (b - a) * t; }

// Parameter of a point known to lie on the line through a, b.
Rational param_of(const Point& q, const Point& a, const Point& b) {
  const Point d = b - a;
  return dot(q - a, d) / dot(d, d);
}

// Parameters on [a, b] of the intersection with [c, d]: none, one point, or
// both ends of a collinear overlap.
std::vector<Rational> intersection_params(const Point& a, const Point& b, const Point& c, const Point& d) {
  std::vector<Rational> out;
  const Point r = b - a;
  const Point s = d - c;
  const Rational denom = cross(r, s);
  if (denom != 0) {
    const Rational t = cross(c - a, s) / denom;
    const Rational u = cross(c - a, r) / denom;
    if (t >= 0 && t <= 1 && u >= 0 && u <= 1) out.push_back(t);
    return out;
  }
  if (cross(c - a, r) != 0) return out;  // parallel, distinct lines
  Rational t0 = param_of(c, a, b);
  Rational t1 = param_of(d, a, b);
  if (t0 > t1) std::swap(t0, t1);
  Rational lo = t0 < 0 ? Rational(0) : t0;
  Rational hi = t1 > 1 ? Rational(1) : t1;
  if (lo <= hi) {
    out.push_back(lo);
    if (hi != lo) out.push_back(hi);
  }
  return out;
}

// Q(t) = |a + t(b - a) - p|^2 - radius^2, a convex quadratic in t.
struct DiskQuadratic {
  Rational A, B, C;
  DiskQuadratic(const Point& a, const Point& b, const Point& p, const Rational& radius) {
    const Point d = b - a;
    const Point e = a - p;
    A = dot(d, d);
    B = 2 * dot(d, e);
    C = dot(e, e) - radius * radius;
  }
  Rational operator()(const Rational& t) const { return (A * t + B) * t + C; }
  Rational argmin() const { return -B / (2 * A); }
};

// A parameter strictly inside (lo, hi) where the segment point lies in the
// open disk, if any.
std::optional<Rational> inside_sample(const DiskQuadratic& Q, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return std::nullopt;
  Rational t = Q.argmin();
  if (t < lo) t = lo;
  if (t > hi) t = hi;
  if (Q(t) >= 0) return std::nullopt;
  if (t > lo && t < hi) return t;
  // Q < 0 at an end of the interval: move toward the other end.
  const Rational end = (t == lo) ? hi : lo;
  Rational step = (end - t) / 2;
  for (int i = 0; i < 200; ++i) {
    Rational candidate = t + step;
    if (Q(candidate) < 0) return candidate;
    step /= 2;
  }
  throw InternalInconsistency("failed to sample inside the disk near an interior point");
}

// Whether the closed segment [a, b] meets the open disk.
bool segment_meets_disk(const Point& a, const Point& b, const Point& p, const Rational& radius) {
  if (a == b) return inside(a, p, radius);
  const DiskQuadratic Q(a, b, p, radius);
  Rational t = Q.argmin();
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return Q(t) < 0;
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_plane_point(const Point& p, const char* what) {
  if (p.dim() != 2) throw InvalidInput(std::string(what) + " must be a point of R^2");
}

}  // namespace

const char* to_string(Side s) {
  switch (s) {
    case Side::plus:
      return "plus";
    case Side::minus:
      return "minus";
    case Side::on:
      return "on";
  }
  return "on";
}

void validate(const Polyline& C) {
  if (C.vertices.size() < 2) throw InvalidInput("polyline needs at least two vertices");
  for (std::size_t i = 0; i < C.vertices.size(); ++i) {
    if (C.vertices[i].dim() != 2) throw InvalidInput("polyline vertex " + std::to_string(i) + " is not in R^2");
    if (i > 0 && C.vertices[i] == C.vertices[i - 1]) {
      throw InvalidInput("polyline repeats vertex " + std::to_string(i));
    }
  }
}

DiskArc component_in_disk(const Polyline& C, const Point& p, const Rational& a) {
  validate(C);
  require_plane_point(p, "p");
  if (a <= 0) throw InvalidInput("disk radius must be positive");
  const auto& V = C.vertices;
  std::optional<std::size_t> seg;
  for (std::size_t i = 0; i + 1 < V.size(); ++i) {
    if (on_segment(p, V[i], V[i + 1])) {
      seg = i;
      break;
    }
  }
  if (!seg) throw InvalidInput("p does not lie on the curve");

  std::size_t first = *seg;
  while (first > 0 && inside(V[first], p, a)) --first;
  std::size_t last = *seg + 1;
  while (last + 1 < V.size() && inside(V[last], p, a)) ++last;

  DiskArc arc;
  arc.center = p;
  arc.radius = a;
  arc.vertices.assign(V.begin() + static_cast<std::ptrdiff_t>(first), V.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  arc.spans = !inside(arc.vertices.front(), p, a) && !inside(arc.vertices.back(), p, a);
  return arc;
}

// ---------------------------------------------------------------------------
// Side classification

SideClassifier::SideClassifier(DiskArc arc, std::uint64_t seed, int retry_budget)
    : arc_(std::move(arc)), seed_(seed), retry_budget_(retry_budget) {
  if (!arc_.spans) throw InvalidInput("K' does not span the disk; its complement is not split in two");
  const auto& V = arc_.vertices;
  const Point& p = arc_.center;
  bool found = false;
  for (std::size_t i = 0; i + 1 < V.size() && !found; ++i) {
    if (!on_segment(p, V[i], V[i + 1])) continue;
    base_piece_ = i;
    found = true;
  }
  if (!found) throw InvalidInput("center does not lie on the arc");
  const Point& a = V[base_piece_];
  const Point& b = V[base_piece_ + 1];
  if (p != a && p != b) {
    base_point_ = p;
  } else {
    const Point& other = (p == a) ? b : a;
    Rational t = ratio(1, 2);
    base_point_ = at(p, other, t);
    while (!inside(base_point_, p, arc_.radius)) {
      t /= 2;
      base_point_ = at(p, other, t);
    }
  }
  reference_at(0);
}

bool SideClassifier::valid_reference(const Point& m, const Point& r) const {
  if (!inside(r, arc_.center, arc_.radius)) return false;
  const auto& V = arc_.vertices;
  for (std::size_t i = 0; i + 1 < V.size(); ++i) {
    if (i == base_piece_) continue;
    if (!intersection_params(m, r, V[i], V[i + 1]).empty()) return false;
  }
  return true;
}

const Point& SideClassifier::reference_at(std::size_t j) const {
  const auto& V = arc_.vertices;
  const Point& a = V[base_piece_];
  const Point& b = V[base_piece_ + 1];
  const Point d = b - a;
  const Point normal = perp_left(d);
  const Rational scale = cheb_norm(d);
  while (references_.size() <= j) {
    const std::size_t k = references_.size();
    Rng rng(derive_seed(seed_, k));
    if (k >= static_cast<std::size_t>(retry_budget_)) {
      throw RetryExhausted("no usable reference point for side classification");
    }
    // Base point shifted along the piece (not for the first reference).
    Point m = base_point_;
    if (k > 0) {
      const Rational tm = param_of(base_point_, a, b);
      const Rational room = std::min(tm, Rational(1 - tm)) / 2;
      Rational shift = rng.uniform_grid(Rational(-room), room, 16);
      m = at(a, b, Rational(tm + shift));
      while (!inside(m, arc_.center, arc_.radius)) {
        shift /= 2;
        m = at(a, b, Rational(tm + shift));
      }
    }
    Rational eta = arc_.radius / (4 * scale);
    if (k > 0) eta *= rng.uniform_grid(ratio(1, 4), Rational(1), 16);
    for (int halvings = 0;; ++halvings) {
      const Point r = m + normal * eta;
      if (valid_reference(m, r)) {
        references_.push_back(r);
        break;
      }
      if (halvings > 200) throw InternalInconsistency("reference point search did not converge");
      eta /= 2;
    }
  }
  return references_[j];
}

Side SideClassifier::classify(const Point& q) const {
  require_plane_point(q, "query");
  if (!inside(q, arc_.center, arc_.radius)) throw InvalidInput("query point is not in the open disk");
  const auto& V = arc_.vertices;
  for (std::size_t i = 0; i + 1 < V.size(); ++i) {
    if (on_segment(q, V[i], V[i + 1])) return Side::on;
  }
  for (std::size_t j = 0; j < static_cast<std::size_t>(retry_budget_); ++j) {
    const Point& r = reference_at(j);
    bool degenerate = false;
    long crossings = 0;
    for (std::size_t i = 0; i < V.size() && !degenerate; ++i) {
      if (on_segment(V[i], q, r)) degenerate = true;
    }
    for (std::size_t i = 0; i + 1 < V.size() && !degenerate; ++i) {
      const int o1 = orient(q, r, V[i]);
      const int o2 = orient(q, r, V[i + 1]);
      const int o3 = orient(V[i], V[i + 1], q);
      const int o4 = orient(V[i], V[i + 1], r);
      if (o1 * o2 < 0 && o3 * o4 < 0) ++crossings;
    }
    if (degenerate) continue;
    return crossings % 2 == 0 ? Side::plus : Side::minus;
  }
  throw RetryExhausted("every reference segment passes through a vertex of K'");
}

// ---------------------------------------------------------------------------
// Tracing L' through the sides

namespace {

struct Sample {
  Point point;
  Side side;
  Point interval_start;
};

std::vector<Rational> contact_params(const Point& u, const Point& w, const DiskArc& K) {
  std::vector<Rational> ts{Rational(0), Rational(1)};
  const auto& V = K.vertices;
  for (std::size_t i = 0; i + 1 < V.size(); ++i) {
    for (auto& t : intersection_params(u, w, V[i], V[i + 1])) ts.push_back(std::move(t));
  }
  return sorted_unique(std::move(ts));
}

std::vector<Sample> trace(const DiskArc& Lp, const SideClassifier& cls) {
  const DiskArc& K = cls.arc();
  std::vector<Sample> out;
  const auto& W = Lp.vertices;
  for (std::size_t s = 0; s + 1 < W.size(); ++s) {
    const Point& u = W[s];
    const Point& w = W[s + 1];
    const auto ts = contact_params(u, w, K);
    const DiskQuadratic Q(u, w, K.center, K.radius);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      auto t = inside_sample(Q, ts[i], ts[i + 1]);
      if (!t) continue;
      Point q = at(u, w, *t);
      const Side side = cls.classify(q);
      out.push_back({std::move(q), side, at(u, w, ts[i])});
    }
  }
  return out;
}

}  // namespace

SakaiReport sakai_check(const Polyline& K, const Polyline& L, const Point& p, const std::vector<Rational>& radii) {
  validate(K);
  validate(L);
  require_plane_point(p, "p");
  auto on_curve = [&](const Polyline& C) {
    for (std::size_t i = 0; i + 1 < C.vertices.size(); ++i) {
      if (on_segment(p, C.vertices[i], C.vertices[i + 1])) return true;
    }
    return false;
  };
  if (!on_curve(K) || !on_curve(L)) throw InvalidInput("p must lie on both curves");
  if (radii.empty()) throw InvalidInput("no radii given");

  SakaiReport report;
  report.transverse_all = true;
  for (const auto& a : radii) {
    if (a <= 0) throw InvalidInput("radii must be positive");
    RadiusVerdict v;
    v.radius = a;
    v.K_prime = component_in_disk(K, p, a);
    v.L_prime = component_in_disk(L, p, a);
    v.K_spans = v.K_prime.spans;
    if (!v.K_spans) {
      v.note = "K' does not span the disk at this radius";
      report.transverse_all = false;
      report.radii.push_back(std::move(v));
      continue;
    }
    const SideClassifier cls(v.K_prime);
    const auto samples = trace(v.L_prime, cls);
    std::optional<Side> last;
    std::optional<Rational> best;
    for (const auto& s : samples) {
      if (s.side == Side::on) continue;
      if (s.side == Side::plus) v.meets_plus = true;
      if (s.side == Side::minus) v.meets_minus = true;
      if (last && *last != s.side) {
        v.side_changes.push_back({s.interval_start, *last, s.side});
        const Rational d2 = squared_norm(s.interval_start - p);
        if (!best || d2 < *best) {
          best = d2;
          v.nearest_change = s.interval_start;
        }
      }
      last = s.side;
    }
    v.transverse = v.meets_plus && v.meets_minus;
    if (!v.transverse) report.transverse_all = false;
    if (!v.L_prime.spans) v.note = "L' does not span the disk at this radius";
    report.radii.push_back(std::move(v));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Squeeze-out

bool avoids_in_disk(const std::vector<Point>& polyline, const DiskArc& K) {
  const auto& V = K.vertices;
  for (std::size_t s = 0; s + 1 < polyline.size(); ++s) {
    const Point& u = polyline[s];
    const Point& w = polyline[s + 1];
    for (std::size_t i = 0; i + 1 < V.size(); ++i) {
      const auto ts = intersection_params(u, w, V[i], V[i + 1]);
      if (ts.empty()) continue;
      const Point x0 = at(u, w, ts.front());
      const Point x1 = at(u, w, ts.back());
      if (segment_meets_disk(x0, x1, K.center, K.radius)) return false;
    }
  }
  if (polyline.size() == 1) {
    for (std::size_t i = 0; i + 1 < V.size(); ++i) {
      if (on_segment(polyline[0], V[i], V[i + 1]) && inside(polyline[0], K.center, K.radius)) return false;
    }
  }
  return true;
}

namespace {

PLMap path_map(std::vector<Point> vertices) {
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) edges.push_back(Simplex{{i, i + 1}});
  auto domain = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(vertices.size(), edges));
  return PLMap(std::move(domain), std::move(vertices));
}

Point chebyshev_unit(const Point& v) { return v * Rational(1 / cheb_norm(v)); }

// Direction pushing a point of K' into the target side (s = +1 for the
// left side), or nullopt when the point is not on K'.
std::optional<Point> push_direction(const Point& z, const DiskArc& K, int s) {
  const auto& V = K.vertices;
  for (std::size_t i = 0; i < V.size(); ++i) {
    if (z != V[i]) continue;
    if (i == 0) return chebyshev_unit(perp_left(V[1] - V[0]) * Rational(s));
    if (i + 1 == V.size()) return chebyshev_unit(perp_left(V[i] - V[i - 1]) * Rational(s));
    const Point u_in = chebyshev_unit(V[i] - V[i - 1]);
    const Point u_out = chebyshev_unit(V[i + 1] - V[i]);
    const int turn = s * sign(cross(u_in, u_out));
    if (turn > 0) return chebyshev_unit(u_out - u_in);  // target sector is convex
    if (turn < 0) return chebyshev_unit(u_in - u_out);  // target sector is reflex
    return chebyshev_unit(perp_left(u_in) * Rational(s));
  }
  for (std::size_t i = 0; i + 1 < V.size(); ++i) {
    if (on_segment(z, V[i], V[i + 1])) return chebyshev_unit(perp_left(V[i + 1] - V[i]) * Rational(s));
  }
  return std::nullopt;
}

}  // namespace

SqueezeResult squeeze_out(const DiskArc& K_prime, const DiskArc& L_prime, const Rational& epsilon, int retry_budget) {
  if (epsilon <= 0) throw InvalidInput("epsilon must be positive");
  if (L_prime.vertices.size() < 2) throw InvalidInput("L' needs at least two vertices");
  const SideClassifier cls(K_prime);
  bool plus = false;
  bool minus = false;
  for (const auto& s : trace(L_prime, cls)) {
    if (s.side == Side::plus) plus = true;
    if (s.side == Side::minus) minus = true;
  }
  if (plus && minus) throw InvalidInput("L' meets both sides of K'; it cannot be squeezed out");

  SqueezeResult result;
  result.target = minus ? Side::minus : Side::plus;
  const int s = result.target == Side::plus ? 1 : -1;

  // Subdivide L' at every contact with K'.
  std::vector<Point> sub;
  const auto& W = L_prime.vertices;
  for (std::size_t i = 0; i + 1 < W.size(); ++i) {
    const auto ts = contact_params(W[i], W[i + 1], K_prime);
    for (std::size_t j = 0; j + 1 < ts.size(); ++j) sub.push_back(at(W[i], W[i + 1], ts[j]));
  }
  sub.push_back(W.back());

  result.original = path_map(sub);
  if (avoids_in_disk(sub, K_prime)) {
    result.eta = 0;
    result.pushed = result.original;
    result.norm = 0;
    return result;
  }

  std::vector<std::optional<Point>> dirs;
  dirs.reserve(sub.size());
  for (const auto& z : sub) dirs.push_back(push_direction(z, K_prime, s));

  Rational eta = epsilon / 2;
  for (int attempt = 0; attempt < retry_budget; ++attempt, eta /= 2) {
    std::vector<Point> moved;
    moved.reserve(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) moved.push_back(dirs[i] ? sub[i] + *dirs[i] * eta : sub[i]);
    if (!avoids_in_disk(moved, K_prime)) continue;
    result.eta = eta;
    result.pushed = result.original.with_images(std::move(moved));
    result.norm = c0_distance(result.original, result.pushed);
    if (!(result.norm < epsilon)) throw InternalInconsistency("squeeze-out exceeded its displacement budget");
    return result;
  }
  throw RetryExhausted("squeeze-out did not separate L' from K' within the retry budget");
}

// ---------------------------------------------------------------------------
// Oscillating example curve

double oscillating_y(double x) {
  if (x <= 0) return 0.0;
  return std::exp(-1.0 / (x * x)) * std::sin(1.0 / x);
}

Polyline oscillating_curve(const Rational& x_max, const Rational& step) {
  if (!(step > 0) || !(step < x_max)) throw InvalidInput("need 0 < step < x_max");
  const Rational ratio = x_max / step;
  const mpz_class count = ratio.get_num() / ratio.get_den();
  if (count > 1000000) throw InvalidInput("too many samples");
  const long N = count.get_si();
  Polyline C;
  C.vertices.reserve(static_cast<std::size_t>(2 * N + 1));
  for (long i = -N; i <= N; ++i) {
    const Rational x = step * Rational(mpz_class(i));
    const Rational y = i <= 0 ? Rational(0) : from_double(oscillating_y(x.get_d()));
    C.vertices.push_back(Point{x, y});
  }
  return C;
}

}  // namespace c0t
