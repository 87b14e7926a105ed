#include "c0t/refute.hpp"

#include "c0t/errors.hpp"
#include "c0t/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace c0t {

// ---------------------------------------------------------------------------
// Finite metric spaces

namespace {

Rational nearest_neighbour_resolution(std::size_t n, const std::vector<Rational>& dist) {
  Rational worst = 0;
  if (n < 2) return worst;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Rational> nearest;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational& d = dist[i * n + j];
      if (!nearest || d < *nearest) nearest = d;
    }
    if (*nearest > worst) worst = *nearest;
  }
  return worst;
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::from_matrix(std::vector<std::vector<Rational>> dist) {
  const std::size_t n = dist.size();
  FiniteMetricSpace X;
  X.n_ = n;
  X.dist_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) throw InvalidInput("distance matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) X.dist_[i * n + j] = std::move(dist[i][j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (X.dist(i, i) != 0) throw InvalidInput("distance matrix has a nonzero diagonal entry at " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (X.dist(i, j) != X.dist(j, i)) {
        throw InvalidInput("distance matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      if (X.dist(i, j) <= 0) {
        throw InvalidInput("distinct points " + std::to_string(i) + " and " + std::to_string(j) +
                           " are at distance <= 0");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (X.dist(i, k) > X.dist(i, j) + X.dist(j, k)) {
          throw InvalidInput("triangle inequality fails for (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                             std::to_string(k) + ")");
        }
      }
    }
  }
  X.resolution_ = nearest_neighbour_resolution(n, X.dist_);
  return X;
}

FiniteMetricSpace FiniteMetricSpace::from_points(const std::vector<Point>& points) {
  const std::size_t n = points.size();
  FiniteMetricSpace X;
  X.n_ = n;
  X.dist_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational d = cheb_dist(points[i], points[j]);
      if (d == 0) throw InvalidInput("sample points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      X.dist_[i * n + j] = d;
      X.dist_[j * n + i] = std::move(d);
    }
  }
  X.resolution_ = nearest_neighbour_resolution(n, X.dist_);
  return X;
}

// ---------------------------------------------------------------------------
// Covers

int multiplicity(const Cover& cover, std::size_t point_count) {
  std::vector<int> count(point_count, 0);
  for (const auto& s : cover.sets) {
    for (auto x : s) {
      if (x < point_count) ++count[x];
    }
  }
  int best = 0;
  for (int c : count) best = std::max(best, c);
  return best;
}

void validate_cover(const FiniteMetricSpace& X, const Cover& cover) {
  const std::size_t n = X.size();
  std::vector<char> covered(n, 0);
  for (std::size_t i = 0; i < cover.sets.size(); ++i) {
    const auto& s = cover.sets[i];
    if (s.empty()) throw InvalidInput("cover set " + std::to_string(i) + " is empty");
    std::vector<std::size_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("cover set " + std::to_string(i) + " repeats a point");
    }
    if (sorted.back() >= n) throw InvalidInput("cover set " + std::to_string(i) + " refers to an unknown point");
    for (auto a : s) {
      covered[a] = 1;
      for (auto b : s) {
        if (X.dist(a, b) > cover.epsilon) {
          throw InvalidInput("cover set " + std::to_string(i) + " has diameter above epsilon");
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!covered[x]) throw InvalidInput("point " + std::to_string(x) + " is not covered");
  }
}

bool respects_resolution(const FiniteMetricSpace& X, const Cover& cover, const Rational& eta) {
  const std::size_t n = X.size();
  std::vector<std::vector<std::size_t>> member(n);
  for (std::size_t i = 0; i < cover.sets.size(); ++i) {
    for (auto x : cover.sets[i]) member[x].push_back(i);
  }
  for (auto& m : member) std::sort(m.begin(), m.end());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (X.dist(a, b) > eta) continue;
      std::vector<std::size_t> common;
      std::set_intersection(member[a].begin(), member[a].end(), member[b].begin(), member[b].end(),
                            std::back_inserter(common));
      if (common.empty()) return false;
    }
  }
  return true;
}

namespace {

// Distances replaced by their rank among the distinct values, so that the
// cover search compares integers; a double copy guides greedy choices.
struct RankedMetric {
  std::size_t n = 0;
  std::vector<Rational> values;
  std::vector<int> rank;
  std::vector<double> approx;
  int eta_rank = 0;
  std::vector<std::vector<std::size_t>> eta_neighbours;  // excludes self

  explicit RankedMetric(const FiniteMetricSpace& X) : n(X.size()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) values.push_back(X.dist(i, j));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    rank.resize(n * n);
    approx.resize(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      const Rational& d = X.dist(i / n, i % n);
      rank[i] = static_cast<int>(std::lower_bound(values.begin(), values.end(), d) - values.begin());
      approx[i] = d.get_d();
    }
    eta_rank = rank_of(X.resolution());
    eta_neighbours.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && rank[i * n + j] <= eta_rank) eta_neighbours[i].push_back(j);
      }
    }
  }

  int rank_of(const Rational& d) const {
    return static_cast<int>(std::lower_bound(values.begin(), values.end(), d) - values.begin());
  }
  /// Largest rank whose value is <= e.
  int floor_rank(const Rational& e) const {
    return static_cast<int>(std::upper_bound(values.begin(), values.end(), e) - values.begin()) - 1;
  }
  int r(std::size_t i, std::size_t j) const { return rank[i * n + j]; }
  double d(std::size_t i, std::size_t j) const { return approx[i * n + j]; }
};

using SetList = std::vector<std::vector<std::size_t>>;

bool diameters_within(const RankedMetric& M, const SetList& sets, int g) {
  for (const auto& s : sets) {
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (M.r(s[a], s[b]) > g) return false;
      }
    }
  }
  return true;
}

// Greedy partition into balls of radius rho (over unassigned points),
// thickened by the resolution so that every close pair shares a set.
std::optional<SetList> thickened_partition(const RankedMetric& M, const std::vector<std::size_t>& order, double rho,
                                           int g) {
  const std::size_t n = M.n;
  std::vector<int> part(n, -1);
  int parts = 0;
  for (auto c : order) {
    if (part[c] >= 0) continue;
    part[c] = parts;
    for (std::size_t x = 0; x < n; ++x) {
      if (part[x] < 0 && M.d(c, x) <= rho) part[x] = parts;
    }
    ++parts;
  }
  std::vector<std::vector<char>> in(static_cast<std::size_t>(parts), std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    in[static_cast<std::size_t>(part[x])][x] = 1;
    for (auto y : M.eta_neighbours[x]) in[static_cast<std::size_t>(part[y])][x] = 1;
  }
  SetList sets(static_cast<std::size_t>(parts));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (in[i][x]) sets[i].push_back(x);
    }
  }
  if (!diameters_within(M, sets, g)) return std::nullopt;
  return sets;
}

// Every resolution pair as its own set, plus singletons for isolated points.
SetList pair_cover(const RankedMetric& M) {
  SetList sets;
  for (std::size_t x = 0; x < M.n; ++x) {
    if (M.eta_neighbours[x].empty()) sets.push_back({x});
    for (auto y : M.eta_neighbours[x]) {
      if (x < y) sets.push_back({x, y});
    }
  }
  return sets;
}

// Removes points from sets while the cover keeps every point and every
// resolution pair covered.
void prune(const RankedMetric& M, SetList& sets) {
  const std::size_t n = M.n;
  std::vector<std::vector<char>> in(sets.size(), std::vector<char>(n, 0));
  std::vector<std::vector<std::size_t>> member(n);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto x : sets[i]) {
      in[i][x] = 1;
      member[x].push_back(i);
    }
  }
  auto removable = [&](std::size_t x, std::size_t i) {
    for (auto y : M.eta_neighbours[x]) {
      if (!in[i][y]) continue;
      bool elsewhere = false;
      for (auto j : member[x]) {
        if (j != i && in[j][y]) {
          elsewhere = true;
          break;
        }
      }
      if (!elsewhere) return false;
    }
    return true;
  };
  for (int pass = 0; pass < 4; ++pass) {
    bool changed = false;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return member[a].size() > member[b].size(); });
    for (auto x : order) {
      // Prefer dropping x from the largest sets first.
      auto candidates = member[x];
      std::stable_sort(candidates.begin(), candidates.end(),
                       [&](std::size_t a, std::size_t b) { return sets[a].size() > sets[b].size(); });
      for (auto i : candidates) {
        if (member[x].size() <= 1) break;
        if (!removable(x, i)) continue;
        in[i][x] = 0;
        member[x].erase(std::find(member[x].begin(), member[x].end(), i));
        changed = true;
      }
    }
    if (!changed) break;
  }
  SetList out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < n; ++x) {
      if (in[i][x]) s.push_back(x);
    }
    if (!s.empty()) out.push_back(std::move(s));
  }
  sets = std::move(out);
}

// Connected components of the resolution graph: the only covers of
// multiplicity one that respect the resolution.
SetList resolution_components(const RankedMetric& M) {
  std::vector<int> comp(M.n, -1);
  SetList sets;
  for (std::size_t s = 0; s < M.n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(sets.size());
    std::vector<std::size_t> members{s};
    comp[s] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (auto y : M.eta_neighbours[members[k]]) {
        if (comp[y] < 0) {
          comp[y] = id;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    sets.push_back(std::move(members));
  }
  return sets;
}

int set_multiplicity(const SetList& sets, std::size_t n) {
  Cover c;
  c.sets = sets;
  return multiplicity(c, n);
}

std::vector<std::size_t> farthest_point_order(const RankedMetric& M) {
  const std::size_t n = M.n;
  std::vector<std::size_t> order;
  std::vector<double> gap(n, std::numeric_limits<double>::infinity());
  std::vector<char> used(n, 0);
  std::size_t next = 0;
  for (std::size_t k = 0; k < n; ++k) {
    order.push_back(next);
    used[next] = 1;
    std::size_t best = n;
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      gap[x] = std::min(gap[x], M.d(next, x));
      if (best == n || gap[x] > gap[best]) best = x;
    }
    if (best == n) break;
    next = best;
  }
  return order;
}

}  // namespace

Cover find_cover(const FiniteMetricSpace& X, const Rational& epsilon) {
  if (epsilon <= 0) throw InvalidInput("epsilon must be positive");
  if (epsilon < X.resolution()) {
    throw InvalidInput("epsilon " + to_string(epsilon) + " is below the sample resolution " +
                       to_string(X.resolution()));
  }
  Cover best;
  best.epsilon = epsilon;
  const std::size_t n = X.size();
  if (n == 0) return best;

  const RankedMetric M(X);
  std::vector<std::size_t> index_order(n);
  std::iota(index_order.begin(), index_order.end(), 0);
  const std::vector<std::vector<std::size_t>> orders = {index_order, farthest_point_order(M)};
  const double eta = X.resolution().get_d();

  int best_mult = std::numeric_limits<int>::max();
  auto consider = [&](SetList sets) {
    prune(M, sets);
    const int m = set_multiplicity(sets, n);
    if (m < best_mult) {
      best_mult = m;
      best.sets = std::move(sets);
    }
  };

  // Valid covers at epsilon are exactly the valid covers at the largest
  // distance not exceeding epsilon; searching every smaller threshold too
  // makes the result monotone in epsilon.
  const int top = M.floor_rank(epsilon);
  consider(pair_cover(M));
  if (SetList comps = resolution_components(M); diameters_within(M, comps, top)) consider(std::move(comps));
  for (int g = M.eta_rank; g <= top && best_mult > 1; ++g) {
    const double rho = (M.values[static_cast<std::size_t>(g)].get_d() - 2 * eta) / 2;
    for (const auto& order : orders) {
      if (auto sets = thickened_partition(M, order, rho, g)) consider(std::move(*sets));
    }
  }
  validate_cover(X, best);
  if (!respects_resolution(X, best, X.resolution())) {
    throw InternalInconsistency("constructed cover does not respect the sample resolution");
  }
  return best;
}

int cover_dimension_bound(const FiniteMetricSpace& X, const Rational& epsilon) {
  if (epsilon <= 0) throw InvalidInput("epsilon must be positive");
  if (X.size() == 0) return -1;
  return multiplicity(find_cover(X, epsilon), X.size()) - 1;
}

// ---------------------------------------------------------------------------
// Nerve approximation

NerveApproximation nerve_approximation(const FiniteMetricSpace& X, const std::vector<Point>& f, const Cover& cover) {
  const std::size_t n = X.size();
  if (f.size() != n) throw InvalidInput("map must have one image per sample point");
  if (n == 0) throw InvalidInput("cannot approximate a map on the empty space");
  validate_cover(X, cover);
  const std::size_t dim = f[0].dim();
  for (const auto& p : f) {
    if (p.dim() != dim) throw InvalidInput("sample images have inconsistent dimensions");
  }

  const std::size_t sets = cover.sets.size();
  std::vector<std::vector<char>> in(sets, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < sets; ++i) {
    for (auto x : cover.sets[i]) in[i][x] = 1;
  }

  NerveApproximation out;
  out.deviation_bound = 0;
  std::vector<Point> reps;
  reps.reserve(sets);
  for (std::size_t i = 0; i < sets; ++i) {
    const auto& s = cover.sets[i];
    reps.push_back(f[s.front()]);
    for (auto a : s) {
      for (auto b : s) {
        Rational d = cheb_dist(f[a], f[b]);
        if (d > out.deviation_bound) out.deviation_bound = d;
      }
    }
  }

  out.carriers.resize(n);
  out.weights.resize(n);
  out.sample_images.reserve(n);
  out.deviation = 0;
  for (std::size_t x = 0; x < n; ++x) {
    Simplex carrier;
    std::vector<Rational> w;
    Rational total = 0;
    for (std::size_t i = 0; i < sets; ++i) {
      if (!in[i][x]) continue;
      std::optional<Rational> to_complement;
      for (std::size_t y = 0; y < n; ++y) {
        if (in[i][y]) continue;
        if (!to_complement || X.dist(x, y) < *to_complement) to_complement = X.dist(x, y);
      }
      carrier.vertices.push_back(i);
      w.push_back(to_complement ? *to_complement : Rational(1));
      total += w.back();
    }
    Point image = Point::zero(dim);
    for (std::size_t j = 0; j < w.size(); ++j) {
      w[j] /= total;
      image = image + reps[carrier.vertices[j]] * w[j];
    }
    Rational dev = cheb_dist(image, f[x]);
    if (dev > out.deviation) out.deviation = dev;
    out.carriers[x] = std::move(carrier);
    out.weights[x] = std::move(w);
    out.sample_images.push_back(std::move(image));
  }

  // Nonempty intersections of cover sets are exactly subsets of some
  // point's membership, so these carriers generate the nerve.
  std::vector<Simplex> facets = out.carriers;
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  auto nerve = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(sets, facets));
  out.polyhedron_dim = nerve->dim();
  out.nerve_map = PLMap(std::move(nerve), std::move(reps));
  if (out.deviation > out.deviation_bound) {
    throw InternalInconsistency("nerve deviation exceeds its bound");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Separating translations

namespace {

int max_simplex_dim(const std::vector<EmbeddedSimplex>& S) {
  int d = -1;
  for (const auto& s : S) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::size_t ambient_of(const std::vector<EmbeddedSimplex>& S) {
  for (const auto& s : S) {
    if (!s.empty()) return s.front().dim();
  }
  return 0;
}

bool translated_disjoint(const std::vector<EmbeddedSimplex>& SA, const std::vector<Box>& boxA,
                         const std::vector<EmbeddedSimplex>& SB, const std::vector<Box>& boxB, const Point& v) {
  for (std::size_t i = 0; i < SA.size(); ++i) {
    const Box moved{boxA[i].lo + v, boxA[i].hi + v};
    EmbeddedSimplex shifted;
    for (std::size_t j = 0; j < SB.size(); ++j) {
      if (box_gap(moved, boxB[j]) > 0) continue;
      if (shifted.empty()) {
        for (const auto& p : SA[i]) shifted.push_back(p + v);
      }
      if (simplex_pair_intersects(shifted, SB[j])) return false;
    }
  }
  return true;
}

}  // namespace

Point separating_translation(const std::vector<EmbeddedSimplex>& SA, const std::vector<EmbeddedSimplex>& SB,
                             const Rational& bound, std::uint64_t rng_seed, int retry_budget) {
  if (bound <= 0) throw InvalidInput("translation bound must be positive");
  const std::size_t n = std::max(ambient_of(SA), ambient_of(SB));
  if (n == 0) throw InvalidInput("no simplices to separate");
  for (const auto* list : {&SA, &SB}) {
    for (const auto& s : *list) {
      for (const auto& p : s) {
        if (p.dim() != n) throw InvalidInput("simplices live in different ambient spaces");
      }
    }
  }
  if (SA.empty() || SB.empty()) return Point::zero(n);
  const int dA = max_simplex_dim(SA);
  const int dB = max_simplex_dim(SB);
  if (static_cast<std::size_t>(dA + dB) >= n) {
    throw InvalidInput("dimensions " + std::to_string(dA) + " + " + std::to_string(dB) +
                       " are not below the ambient dimension " + std::to_string(n));
  }
  std::vector<Box> boxA, boxB;
  for (const auto& s : SA) boxA.push_back(bounding_box(s));
  for (const auto& s : SB) boxB.push_back(bounding_box(s));

  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    const int bits = std::min(8 + attempt, 62);
    const std::int64_t top = (std::int64_t{1} << bits) - 1;
    Rng rng(derive_seed(rng_seed, static_cast<std::uint64_t>(attempt)));
    std::vector<Rational> c(n);
    mpz_class scale = 1;
    scale <<= bits;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational m(mpz_class(static_cast<long>(rng.uniform_int(-top, top))));
      c[i] = bound * m / Rational(scale);
    }
    Point v(std::move(c));
    if (translated_disjoint(SA, boxA, SB, boxB, v)) return v;
  }
  throw RetryExhausted("no separating translation found in " + std::to_string(retry_budget) + " attempts");
}

// ---------------------------------------------------------------------------
// Refutation

PLMap discrete_map(const std::vector<Point>& images) {
  auto domain = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(images.size(), {}));
  return PLMap(std::move(domain), images);
}

namespace {

void validate_sampled(const SampledMap& m, const char* name) {
  if (m.images.size() != m.space.size()) {
    throw InvalidInput(std::string(name) + ": need one image per sample point");
  }
  if (m.images.empty()) throw InvalidInput(std::string(name) + ": no sample points");
}

Rational sample_distance(const std::vector<Point>& a, const std::vector<Point>& b) {
  Rational worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = cheb_dist(a[i], b[i]);
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace

bool verify_witness(const RefutationWitness& w, const SampledMap& f, const SampledMap& g) {
  if (w.f_tilde_samples.images().size() != f.images.size()) return false;
  if (w.g_tilde_samples.images().size() != g.images.size()) return false;
  if (sample_distance(w.f_tilde_samples.images(), f.images) != w.dist_f) return false;
  if (sample_distance(w.g_tilde_samples.images(), g.images) != w.dist_g) return false;
  if (!(w.dist_f < w.delta_used) || !(w.dist_g < w.delta_used)) return false;
  if (polyhedra_intersect(w.f_tilde.embedded_facets(), w.g_tilde.embedded_facets())) return false;
  // The sample values must lie on the translated nerve (checked through
  // disjointness of the sample points from the other nerve).
  return !polyhedra_intersect(w.f_tilde_samples.embedded_facets(), w.g_tilde.embedded_facets()) &&
         !polyhedra_intersect(w.f_tilde.embedded_facets(), w.g_tilde_samples.embedded_facets());
}

RefutationWitness refute_essential(const SampledMap& f, const SampledMap& g, const Rational& delta,
                                   std::uint64_t rng_seed, int retry_budget) {
  if (delta <= 0) throw InvalidInput("delta must be positive");
  validate_sampled(f, "A");
  validate_sampled(g, "B");
  const std::size_t n = f.images.front().dim();
  if (g.images.front().dim() != n) throw InvalidInput("sampled maps live in different ambient spaces");

  const NerveApproximation nf = nerve_approximation(f.space, f.images, f.cover);
  const NerveApproximation ng = nerve_approximation(g.space, g.images, g.cover);
  const Rational half = delta / 2;
  if (nf.deviation >= half) {
    throw InvalidInput("cover of A too coarse: nerve deviation " + to_string(nf.deviation) + " is not below delta/2");
  }
  if (ng.deviation >= half) {
    throw InvalidInput("cover of B too coarse: nerve deviation " + to_string(ng.deviation) + " is not below delta/2");
  }
  if (static_cast<std::size_t>(nf.polyhedron_dim + ng.polyhedron_dim) >= n) {
    throw InvalidInput("nerve dimensions " + std::to_string(nf.polyhedron_dim) + " + " +
                       std::to_string(ng.polyhedron_dim) + " are not below the ambient dimension " +
                       std::to_string(n) + "; no dimension-based refutation");
  }

  const Point v = separating_translation(nf.nerve_map.embedded_facets(), ng.nerve_map.embedded_facets(), half,
                                         rng_seed, retry_budget);
  RefutationWitness w;
  w.delta_used = delta;
  w.v = v;
  w.f_tilde = nf.nerve_map.translated(v);
  w.g_tilde = ng.nerve_map;
  std::vector<Point> fs;
  fs.reserve(nf.sample_images.size());
  for (const auto& p : nf.sample_images) fs.push_back(p + v);
  w.f_tilde_samples = discrete_map(fs);
  w.g_tilde_samples = discrete_map(ng.sample_images);
  w.dist_f = sample_distance(fs, f.images);
  w.dist_g = sample_distance(ng.sample_images, g.images);
  if (!verify_witness(w, f, g)) throw InternalInconsistency("refutation witness failed its own verification");
  return w;
}

}  // namespace c0t
