#include "c0t/plcore.hpp"

#include "c0t/errors.hpp"
#include "c0t/lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace c0t {

namespace {

void require_same_dim(const Point& u, const Point& v) {
  if (u.dim() != v.dim()) {
    throw InvalidInput("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                       std::to_string(v.dim()));
  }
}

std::size_t common_dim(std::span<const Point> S, std::span<const Point> T) {
  if (S.empty() || T.empty()) throw InvalidInput("empty simplex");
  const std::size_t n = S.front().dim();
  for (const auto& p : S) {
    if (p.dim() != n) throw InvalidInput("simplex vertices of mixed dimension");
  }
  for (const auto& p : T) {
    if (p.dim() != n) throw InvalidInput("dimension mismatch between simplices");
  }
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Point

Point Point::basis(std::size_t dim, std::size_t axis) {
  std::vector<Rational> c(dim);
  c.at(axis) = 1;
  return Point(std::move(c));
}

Point Point::operator+(const Point& other) const {
  require_same_dim(*this, other);
  std::vector<Rational> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = coords_[i] + other.coords_[i];
  return Point(std::move(c));
}

Point Point::operator-(const Point& other) const {
  require_same_dim(*this, other);
  std::vector<Rational> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = coords_[i] - other.coords_[i];
  return Point(std::move(c));
}

Point Point::operator-() const {
  std::vector<Rational> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = -coords_[i];
  return Point(std::move(c));
}

Point Point::operator*(const Rational& factor) const {
  std::vector<Rational> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = coords_[i] * factor;
  return Point(std::move(c));
}

std::vector<double> to_doubles(const Point& p) {
  std::vector<double> out;
  out.reserve(p.dim());
  for (const auto& c : p.coords()) out.push_back(to_double(c));
  return out;
}

Rational cheb_norm(const Vec& v) {
  Rational best = 0;
  for (const auto& c : v.coords()) {
    Rational a = abs_value(c);
    if (a > best) best = a;
  }
  return best;
}

Rational cheb_dist(const Point& u, const Point& v) {
  require_same_dim(u, v);
  Rational best = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Rational a = abs_value(Rational(u[i] - v[i]));
    if (a > best) best = a;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Simplex / SimplicialComplex

Simplex Simplex::sorted() const {
  Simplex s = *this;
  std::sort(s.vertices.begin(), s.vertices.end());
  return s;
}

int permutation_sign(std::span<const VertexId> ids) {
  std::vector<VertexId> v(ids.begin(), ids.end());
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] < v[i]) sign = -sign;
    }
  }
  return sign;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 const std::vector<Simplex>& facets) {
  std::set<std::vector<VertexId>> all;
  for (VertexId v = 0; v < vertex_count; ++v) all.insert({v});
  for (const auto& f : facets) {
    auto ids = f.sorted().vertices;
    if (ids.empty()) throw InvalidInput("empty simplex");
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      throw InvalidInput("simplex with repeated vertex ids");
    }
    if (ids.back() >= vertex_count) {
      throw InvalidInput("vertex id " + std::to_string(ids.back()) + " out of range");
    }
    if (ids.size() > 24) throw InvalidInput("simplex dimension too large");
    const std::size_t k = ids.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<VertexId> face;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) face.push_back(ids[i]);
      }
      all.insert(std::move(face));
    }
  }
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  c.lookup_ = std::move(all);
  c.index();
  return c;
}

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, const std::vector<Simplex>& simplices)
    : vertex_count_(vertex_count) {
  for (VertexId v = 0; v < vertex_count; ++v) lookup_.insert({v});
  for (const auto& s : simplices) {
    auto ids = s.sorted().vertices;
    if (ids.empty()) throw InvalidInput("empty simplex");
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      throw InvalidInput("simplex with repeated vertex ids");
    }
    if (ids.back() >= vertex_count) {
      throw InvalidInput("vertex id " + std::to_string(ids.back()) + " out of range");
    }
    lookup_.insert(std::move(ids));
  }
  for (const auto& ids : lookup_) {
    if (ids.size() < 2) continue;
    for (std::size_t skip = 0; skip < ids.size(); ++skip) {
      std::vector<VertexId> face;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i != skip) face.push_back(ids[i]);
      }
      if (!lookup_.count(face)) {
        throw InvalidInput("simplex list is not closed under faces");
      }
    }
  }
  index();
}

void SimplicialComplex::index() {
  by_dim_.clear();
  for (const auto& ids : lookup_) {
    const std::size_t d = ids.size() - 1;
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(Simplex{ids});
  }
  for (auto& level : by_dim_) std::sort(level.begin(), level.end());

  // A simplex is maximal iff no coface one dimension up contains it.
  std::set<std::vector<VertexId>> covered;
  for (std::size_t d = 1; d < by_dim_.size(); ++d) {
    for (const auto& s : by_dim_[d]) {
      for (std::size_t skip = 0; skip < s.vertices.size(); ++skip) {
        std::vector<VertexId> face;
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
          if (i != skip) face.push_back(s.vertices[i]);
        }
        covered.insert(std::move(face));
      }
    }
  }
  facets_.clear();
  for (const auto& ids : lookup_) {
    if (!covered.count(ids)) facets_.push_back(Simplex{ids});
  }
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> none;
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[static_cast<std::size_t>(d)];
}

bool SimplicialComplex::contains(const Simplex& s) const { return lookup_.count(s.sorted().vertices) > 0; }

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(by_dim_[d].size());
  }
  return chi;
}

// ---------------------------------------------------------------------------
// PLMap

PLMap::PLMap(std::shared_ptr<const SimplicialComplex> domain, std::vector<Point> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (!domain_) throw InvalidInput("PL map without a domain");
  if (images_.size() != domain_->vertex_count()) {
    throw InvalidInput("PL map has " + std::to_string(images_.size()) + " images for " +
                       std::to_string(domain_->vertex_count()) + " vertices");
  }
  ambient_dim_ = images_.empty() ? 0 : images_.front().dim();
  for (const auto& p : images_) {
    if (p.dim() != ambient_dim_) throw InvalidInput("PL map images of mixed dimension");
  }
  if (!images_.empty() && ambient_dim_ == 0) throw InvalidInput("ambient dimension must be >= 1");
}

EmbeddedSimplex PLMap::embed(const Simplex& s) const {
  EmbeddedSimplex out;
  out.reserve(s.vertices.size());
  for (auto v : s.vertices) out.push_back(images_.at(v));
  return out;
}

std::vector<EmbeddedSimplex> PLMap::embedded_facets() const {
  std::vector<EmbeddedSimplex> out;
  out.reserve(domain_->facets().size());
  for (const auto& f : domain_->facets()) out.push_back(embed(f));
  return out;
}

PLMap PLMap::translated(const Vec& v) const {
  std::vector<Point> moved;
  moved.reserve(images_.size());
  for (const auto& p : images_) moved.push_back(p + v);
  return with_images(std::move(moved));
}

bool PLMap::same_domain(const PLMap& other) const {
  return domain_ == other.domain_ || *domain_ == *other.domain_;
}

Rational c0_distance(const PLMap& F, const PLMap& G) {
  if (!F.same_domain(G)) throw InvalidInput("c0_distance requires a common domain complex");
  Rational best = 0;
  for (VertexId v = 0; v < F.images().size(); ++v) {
    Rational d = cheb_dist(F.image(v), G.image(v));
    if (d > best) best = d;
  }
  return best;
}

Point eval_pl(const PLMap& F, const Simplex& s, std::span<const Rational> bary) {
  if (!F.domain().contains(s)) throw InvalidInput("simplex is not in the domain complex");
  if (bary.size() != s.vertices.size()) throw InvalidInput("wrong number of barycentric weights");
  Rational total = 0;
  for (const auto& w : bary) {
    if (w < 0) throw InvalidInput("negative barycentric weight");
    total += w;
  }
  if (total != 1) throw InvalidInput("barycentric weights do not sum to 1");
  Point acc = Point::zero(F.ambient_dim());
  for (std::size_t i = 0; i < bary.size(); ++i) {
    if (bary[i] != 0) acc = acc + F.image(s.vertices[i]) * bary[i];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Boxes and exact simplex predicates

Box bounding_box(std::span<const Point> pts) {
  if (pts.empty()) throw InvalidInput("bounding box of no points");
  std::vector<Rational> lo(pts.front().coords().begin(), pts.front().coords().end());
  std::vector<Rational> hi = lo;
  for (const auto& p : pts) {
    if (p.dim() != lo.size()) throw InvalidInput("dimension mismatch");
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (p[i] < lo[i]) lo[i] = p[i];
      if (p[i] > hi[i]) hi[i] = p[i];
    }
  }
  return Box{Point(std::move(lo)), Point(std::move(hi))};
}

Box bounding_box(const std::vector<EmbeddedSimplex>& simplices) {
  std::vector<Point> pts;
  for (const auto& s : simplices) pts.insert(pts.end(), s.begin(), s.end());
  return bounding_box(pts);
}

Rational box_gap(const Box& a, const Box& b) {
  require_same_dim(a.lo, b.lo);
  Rational gap = 0;
  for (std::size_t i = 0; i < a.lo.dim(); ++i) {
    Rational g1 = a.lo[i] - b.hi[i];
    Rational g2 = b.lo[i] - a.hi[i];
    if (g1 > gap) gap = g1;
    if (g2 > gap) gap = g2;
  }
  return gap;
}

bool simplex_pair_intersects(std::span<const Point> S, std::span<const Point> T) {
  const std::size_t n = common_dim(S, T);
  if (box_gap(bounding_box(S), bounding_box(T)) > 0) return false;

  // Variables: lambda (|S|), mu (|T|). Rows: n coordinate equalities and
  // the two convexity constraints.
  const std::size_t a = S.size();
  const std::size_t b = T.size();
  lp::Matrix A(n + 2, a + b);
  std::vector<Rational> rhs(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a; ++j) A(i, j) = S[j][i];
    for (std::size_t j = 0; j < b; ++j) A(i, a + j) = -T[j][i];
  }
  for (std::size_t j = 0; j < a; ++j) A(n, j) = 1;
  for (std::size_t j = 0; j < b; ++j) A(n + 1, a + j) = 1;
  rhs[n] = 1;
  rhs[n + 1] = 1;
  return lp::feasible(A, rhs);
}

Rational simplex_pair_distance(std::span<const Point> S, std::span<const Point> T) {
  const std::size_t n = common_dim(S, T);
  const std::size_t a = S.size();
  const std::size_t b = T.size();
  // Variables: lambda (a), mu (b), t, slack+ (n), slack- (n).
  const std::size_t t_col = a + b;
  const std::size_t cols = a + b + 1 + 2 * n;
  lp::Matrix A(2 * n + 2, cols);
  std::vector<Rational> rhs(2 * n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      A(i, j) = S[j][i];
      A(n + i, j) = -S[j][i];
    }
    for (std::size_t j = 0; j < b; ++j) {
      A(i, a + j) = -T[j][i];
      A(n + i, a + j) = T[j][i];
    }
    A(i, t_col) = -1;
    A(n + i, t_col) = -1;
    A(i, t_col + 1 + i) = 1;
    A(n + i, t_col + 1 + n + i) = 1;
  }
  for (std::size_t j = 0; j < a; ++j) A(2 * n, j) = 1;
  for (std::size_t j = 0; j < b; ++j) A(2 * n + 1, a + j) = 1;
  rhs[2 * n] = 1;
  rhs[2 * n + 1] = 1;
  std::vector<Rational> cost(cols);
  cost[t_col] = 1;
  auto result = lp::minimize(A, rhs, cost);
  if (result.status != lp::Status::optimal) {
    throw InternalInconsistency("distance LP did not reach an optimum");
  }
  return result.objective;
}

bool polyhedra_intersect(const std::vector<EmbeddedSimplex>& A, const std::vector<EmbeddedSimplex>& B) {
  std::vector<Box> boxes_b;
  boxes_b.reserve(B.size());
  for (const auto& t : B) boxes_b.push_back(bounding_box(t));
  for (const auto& s : A) {
    const Box box_s = bounding_box(s);
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (box_gap(box_s, boxes_b[j]) > 0) continue;
      if (simplex_pair_intersects(s, B[j])) return true;
    }
  }
  return false;
}

Rational polyhedra_distance(const std::vector<EmbeddedSimplex>& A, const std::vector<EmbeddedSimplex>& B) {
  if (A.empty() || B.empty()) throw InvalidInput("distance to an empty polyhedron");
  struct Candidate {
    Rational gap;
    std::size_t i, j;
  };
  std::vector<Box> boxes_a, boxes_b;
  for (const auto& s : A) boxes_a.push_back(bounding_box(s));
  for (const auto& t : B) boxes_b.push_back(bounding_box(t));
  std::vector<Candidate> order;
  order.reserve(A.size() * B.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) order.push_back({box_gap(boxes_a[i], boxes_b[j]), i, j});
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Candidate& x, const Candidate& y) { return x.gap < y.gap; });
  bool have = false;
  Rational best;
  for (const auto& c : order) {
    if (have && c.gap >= best) break;
    Rational d = simplex_pair_distance(A[c.i], B[c.j]);
    if (!have || d < best) {
      best = d;
      have = true;
    }
    if (best == 0) break;
  }
  return best;
}

bool images_intersect(const PLMap& F, const PLMap& G) {
  if (F.ambient_dim() != G.ambient_dim()) throw InvalidInput("maps into different ambient spaces");
  return polyhedra_intersect(F.embedded_facets(), G.embedded_facets());
}

// ---------------------------------------------------------------------------
// Oriented chains and cycles

std::vector<OrientedFacet> chain_boundary(const std::vector<OrientedFacet>& chain) {
  std::map<std::vector<VertexId>, long> coeff;
  for (const auto& f : chain) {
    const auto& v = f.simplex.vertices;
    if (v.size() < 2) continue;
    for (std::size_t skip = 0; skip < v.size(); ++skip) {
      std::vector<VertexId> face;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != skip) face.push_back(v[i]);
      }
      const int parity = permutation_sign(face);
      std::sort(face.begin(), face.end());
      coeff[face] += (skip % 2 == 0 ? 1 : -1) * f.sign * parity;
    }
  }
  std::vector<OrientedFacet> out;
  for (const auto& [face, c] : coeff) {
    if (c != 0) out.push_back({Simplex{face}, static_cast<int>(c)});
  }
  return out;
}

OrientedCycle::OrientedCycle(PLMap map, std::vector<OrientedFacet> facets, int cycle_dim)
    : map_(std::move(map)), facets_(std::move(facets)), cycle_dim_(cycle_dim) {
  if (cycle_dim_ < 0) throw InvalidInput("cycle dimension must be >= 0");
  std::set<std::vector<VertexId>> seen;
  for (const auto& f : facets_) {
    if (f.simplex.dim() != cycle_dim_) throw InvalidInput("cycle facet of wrong dimension");
    if (f.sign != 1 && f.sign != -1) throw InvalidInput("cycle orientation signs must be +1 or -1");
    if (!map_.domain().contains(f.simplex)) throw InvalidInput("cycle facet is not in the domain complex");
    if (!seen.insert(f.simplex.sorted().vertices).second) throw InvalidInput("repeated cycle facet");
  }
  if (cycle_dim_ == 0) {
    long total = 0;
    for (const auto& f : facets_) total += f.sign;
    if (total != 0) throw InvalidInput("0-cycle signs do not sum to zero");
    return;
  }
  std::map<std::vector<VertexId>, int> incidence;
  for (const auto& f : facets_) {
    const auto ids = f.simplex.sorted().vertices;
    for (std::size_t skip = 0; skip < ids.size(); ++skip) {
      std::vector<VertexId> face;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i != skip) face.push_back(ids[i]);
      }
      ++incidence[face];
    }
  }
  for (const auto& [face, count] : incidence) {
    if (count != 2) throw InvalidInput("cycle is not a closed pseudomanifold");
  }
  if (!chain_boundary(facets_).empty()) throw InvalidInput("cycle orientation is not coherent");
}

std::vector<EmbeddedSimplex> OrientedCycle::embedded() const {
  std::vector<EmbeddedSimplex> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(map_.embed(f.simplex));
  return out;
}

OrientedCycle OrientedCycle::with_map(PLMap map) const {
  if (!map_.same_domain(map)) throw InvalidInput("with_map requires the same domain");
  return OrientedCycle(std::move(map), facets_, cycle_dim_);
}

OrientedCycle OrientedCycle::reversed() const {
  auto flipped = facets_;
  for (auto& f : flipped) f.sign = -f.sign;
  return OrientedCycle(map_, std::move(flipped), cycle_dim_);
}

OrientedCycle OrientedCycle::compacted(std::vector<VertexId>* old_ids) const {
  std::vector<VertexId> support;
  for (const auto& f : facets_) support.insert(support.end(), f.simplex.vertices.begin(), f.simplex.vertices.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::map<VertexId, VertexId> remap;
  for (VertexId i = 0; i < support.size(); ++i) remap[support[i]] = i;

  std::vector<OrientedFacet> facets;
  std::vector<Simplex> simplices;
  for (const auto& f : facets_) {
    Simplex s;
    for (auto v : f.simplex.vertices) s.vertices.push_back(remap[v]);
    simplices.push_back(s);
    facets.push_back({s, f.sign});
  }
  std::vector<Point> images;
  for (auto v : support) images.push_back(map_.image(v));
  auto domain = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(support.size(), simplices));
  if (old_ids) *old_ids = support;
  return OrientedCycle(PLMap(domain, std::move(images)), std::move(facets), cycle_dim_);
}

OrientedCycle closed_polygon(std::vector<Point> vertices) {
  const std::size_t k = vertices.size();
  if (k < 3) throw InvalidInput("a closed polygon needs at least three vertices");
  std::vector<Simplex> edges;
  std::vector<OrientedFacet> facets;
  for (VertexId i = 0; i < k; ++i) {
    Simplex e{{i, (i + 1) % k}};
    edges.push_back(e);
    facets.push_back({std::move(e), 1});
  }
  auto domain = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(k, edges));
  return OrientedCycle(PLMap(std::move(domain), std::move(vertices)), std::move(facets), 1);
}

OrientedCycle boundary_cycle(const PLMap& ball) {
  const int m = ball.domain().dim();
  if (m < 1 || static_cast<std::size_t>(m) != ball.ambient_dim()) {
    throw InvalidInput("boundary_cycle expects an m-ball embedded in R^m");
  }
  std::vector<OrientedFacet> chain;
  for (const auto& f : ball.domain().facets()) {
    if (f.dim() != m) throw InvalidInput("ball complex is not pure");
    lp::Matrix frame(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    const Point& origin = ball.image(f.vertices[0]);
    for (int j = 0; j < m; ++j) {
      const Point edge = ball.image(f.vertices[static_cast<std::size_t>(j) + 1]) - origin;
      for (int i = 0; i < m; ++i) frame(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = edge[static_cast<std::size_t>(i)];
    }
    const int s = lp::determinant_sign(frame);
    if (s == 0) throw InvalidInput("ball has a degenerate top simplex");
    chain.push_back({f, s});
  }
  std::map<std::vector<VertexId>, int> incidence;
  for (const auto& f : chain) {
    for (std::size_t skip = 0; skip < f.simplex.vertices.size(); ++skip) {
      std::vector<VertexId> face;
      for (std::size_t i = 0; i < f.simplex.vertices.size(); ++i) {
        if (i != skip) face.push_back(f.simplex.vertices[i]);
      }
      std::sort(face.begin(), face.end());
      ++incidence[face];
    }
  }
  for (const auto& [face, count] : incidence) {
    if (count > 2) throw InvalidInput("input is not a combinatorial ball");
  }
  auto boundary = chain_boundary(chain);
  for (const auto& f : boundary) {
    if (f.sign != 1 && f.sign != -1) throw InvalidInput("input is not a combinatorial ball");
  }
  return OrientedCycle(ball, std::move(boundary), m - 1);
}

}  // namespace c0t
