#pragma once

// Exact piecewise-linear geometry kernel.
//
// Continuous maps are represented in the PL category: a map is a simplicial
// complex together with one image point per vertex, extended affinely over
// every simplex. All predicates are exact over the rationals; no tolerance is
// used anywhere.

#include "c0t/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <vector>

namespace c0t {

/// Coordinate tuple in R^n. Also used for displacement vectors.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Rational>(dim)); }
  /// Unit basis vector e_axis in R^dim.
  static Point basis(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  Point operator+(const Point& other) const;
  Point operator-(const Point& other) const;
  Point operator-() const;
  Point operator*(const Rational& factor) const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<Rational> coords_;
};

using Vec = Point;

/// Vertex images of one simplex, in simplex order.
using EmbeddedSimplex = std::vector<Point>;

std::vector<double> to_doubles(const Point& p);

/// Chebyshev norm max_i |v_i|.
Rational cheb_norm(const Vec& v);

/// Chebyshev distance; throws InvalidInput on dimension mismatch.
Rational cheb_dist(const Point& u, const Point& v);

using VertexId = std::size_t;

/// Ordered list of distinct vertex ids. The ordering carries orientation.
struct Simplex {
  std::vector<VertexId> vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  /// Same simplex with vertex ids ascending.
  Simplex sorted() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// +1 or -1: parity of the permutation that sorts `ids`.
int permutation_sign(std::span<const VertexId> ids);

/// Abstract finite simplicial complex on vertices 0..vertex_count-1.
/// Face-closed; every vertex is a 0-simplex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds the face closure of `facets`. Throws on repeated or out-of-range
  /// vertex ids.
  static SimplicialComplex from_facets(std::size_t vertex_count, const std::vector<Simplex>& facets);

  /// Validating constructor: `simplices` must already be closed under faces.
  SimplicialComplex(std::size_t vertex_count, const std::vector<Simplex>& simplices);

  std::size_t vertex_count() const { return vertex_count_; }
  /// Maximum simplex dimension, -1 when there are no vertices.
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// All simplices of dimension d, vertex ids ascending, lexicographic order.
  const std::vector<Simplex>& simplices(int d) const;
  /// Maximal simplices (not a proper face of another), lexicographic order.
  const std::vector<Simplex>& facets() const { return facets_; }
  bool contains(const Simplex& s) const;
  long euler_characteristic() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.by_dim_ == b.by_dim_;
  }

 private:
  void index();

  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::set<std::vector<VertexId>> lookup_;
  std::vector<Simplex> facets_;
};

/// Affine-on-simplices map from a complex into R^n.
class PLMap {
 public:
  PLMap() = default;
  PLMap(std::shared_ptr<const SimplicialComplex> domain, std::vector<Point> images);

  const SimplicialComplex& domain() const { return *domain_; }
  const std::shared_ptr<const SimplicialComplex>& domain_ptr() const { return domain_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const Point& image(VertexId v) const { return images_[v]; }
  const std::vector<Point>& images() const { return images_; }

  EmbeddedSimplex embed(const Simplex& s) const;
  /// Images of all facets, in facet order.
  std::vector<EmbeddedSimplex> embedded_facets() const;

  /// Same domain, new vertex images.
  PLMap with_images(std::vector<Point> images) const { return PLMap(domain_, std::move(images)); }
  PLMap translated(const Vec& v) const;

  bool same_domain(const PLMap& other) const;

 private:
  std::shared_ptr<const SimplicialComplex> domain_;
  std::vector<Point> images_;
  std::size_t ambient_dim_ = 0;
};

/// Sup over the domain of cheb_dist(F(x), G(x)). The difference of two
/// affine maps on a simplex is affine, so the sup is attained at a vertex.
/// Requires a common domain complex.
Rational c0_distance(const PLMap& F, const PLMap& G);

/// Affine combination of the vertex images of `s` with barycentric weights.
Point eval_pl(const PLMap& F, const Simplex& s, std::span<const Rational> bary);

/// Exact decision whether two closed simplices (convex hulls of the given
/// points) intersect. Solved as a rational LP feasibility problem.
bool simplex_pair_intersects(std::span<const Point> S, std::span<const Point> T);

/// Exact minimum Chebyshev distance between two closed simplices.
Rational simplex_pair_distance(std::span<const Point> S, std::span<const Point> T);

/// Whether any pair of simplices from the two lists intersects.
bool polyhedra_intersect(const std::vector<EmbeddedSimplex>& A, const std::vector<EmbeddedSimplex>& B);

/// Exact minimum Chebyshev distance between two unions of simplices. Zero if
/// they intersect. Throws InvalidInput if either list is empty.
Rational polyhedra_distance(const std::vector<EmbeddedSimplex>& A, const std::vector<EmbeddedSimplex>& B);

/// Whether the images of two PL maps intersect.
bool images_intersect(const PLMap& F, const PLMap& G);

/// Axis-aligned bounding box of a set of points.
struct Box {
  Point lo;
  Point hi;
};
Box bounding_box(std::span<const Point> pts);
Box bounding_box(const std::vector<EmbeddedSimplex>& simplices);
/// Chebyshev gap between two boxes (0 when they overlap).
Rational box_gap(const Box& a, const Box& b);

// ---------------------------------------------------------------------------
// Triangulated cubes and oriented cycles.

/// Freudenthal (Kuhn) triangulation of [-1,1]^m with s subdivisions per
/// axis. The returned map embeds each vertex at its reference coordinates.
/// Vertex (i_0, ..., i_{m-1}) has id sum_j i_j (s+1)^j and coordinates
/// -1 + 2 i_j / s. There are m! s^m top simplices.
PLMap freudenthal_cube(int m, int s);

/// Locates x in freudenthal_cube(m, s): returns the containing top simplex
/// (vertex order of the Kuhn path) and barycentric weights.
struct CubeLocation {
  Simplex simplex;
  std::vector<Rational> weights;
};
CubeLocation freudenthal_locate(int m, int s, const Point& x);

/// One top simplex of a cycle with its orientation sign relative to the
/// listed vertex order.
struct OrientedFacet {
  Simplex simplex;
  int sign = 1;
};

/// Oriented PL p-cycle: a chain of oriented p-simplices of `map`'s domain
/// forming a closed pseudomanifold (every (p-1)-face is shared by exactly
/// two facets with opposite induced orientation; for p = 0 the signs sum to
/// zero).
class OrientedCycle {
 public:
  OrientedCycle(PLMap map, std::vector<OrientedFacet> facets, int cycle_dim);

  const PLMap& map() const { return map_; }
  const std::vector<OrientedFacet>& facets() const { return facets_; }
  int cycle_dim() const { return cycle_dim_; }
  std::size_t ambient_dim() const { return map_.ambient_dim(); }
  bool empty() const { return facets_.empty(); }

  std::vector<EmbeddedSimplex> embedded() const;
  /// Re-embeds the same chain with another map on the same domain.
  OrientedCycle with_map(PLMap map) const;
  OrientedCycle reversed() const;
  /// Equivalent cycle on a complex containing only the support simplices.
  /// `old_ids`, if given, receives the original id of every new vertex.
  OrientedCycle compacted(std::vector<VertexId>* old_ids = nullptr) const;

 private:
  PLMap map_;
  std::vector<OrientedFacet> facets_;
  int cycle_dim_;
};

/// Signed boundary of an oriented chain, with faces in ascending vertex
/// order and zero coefficients removed.
std::vector<OrientedFacet> chain_boundary(const std::vector<OrientedFacet>& chain);

/// Closed polygon v0 -> v1 -> ... -> v_{k-1} -> v0 as an oriented 1-cycle
/// (k >= 3 distinct vertices).
OrientedCycle closed_polygon(std::vector<Point> vertices);

/// Oriented boundary sphere of a triangulated m-ball embedded in R^m (each
/// top simplex oriented by the sign of its reference-coordinate frame).
/// The returned cycle lives on the ball's own domain.
OrientedCycle boundary_cycle(const PLMap& ball);

}  // namespace c0t
