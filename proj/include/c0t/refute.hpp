#pragma once

// Dimension-based refutation of delta-essential intersections.
//
// If the images of two maps can be pushed into polyhedra whose dimensions sum
// to less than n, an arbitrarily small translation separates them. Spaces
// are represented by finite samples; maps by their values on the samples.
// The nerve of a fine cover gives the low-dimensional polyhedron, and a
// randomly drawn, exactly verified translation separates the two nerves.

#include "c0t/plcore.hpp"

#include <cstdint>
#include <vector>

namespace c0t {

/// Finite metric space on points 0..size-1 with an exact distance matrix.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  /// Validates symmetry, zero diagonal, positivity off the diagonal and the
  /// triangle inequality (by enumerating all triples).
  static FiniteMetricSpace from_matrix(std::vector<std::vector<Rational>> dist);
  /// Chebyshev distances between the given points; rejects duplicates.
  static FiniteMetricSpace from_points(const std::vector<Point>& points);

  std::size_t size() const { return n_; }
  const Rational& dist(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  /// Largest nearest-neighbour distance (0 for fewer than two points): the
  /// scale below which the sample cannot resolve the underlying space.
  const Rational& resolution() const { return resolution_; }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> dist_;
  Rational resolution_;
};

/// Cover of a finite metric space by subsets of diameter at most epsilon.
struct Cover {
  std::vector<std::vector<std::size_t>> sets;
  Rational epsilon;
};

/// Max over points of the number of sets containing the point.
int multiplicity(const Cover& cover, std::size_t point_count);

/// Throws InvalidInput unless every index is in range, no set repeats an
/// index, the sets cover all points and every set has diameter <= epsilon.
void validate_cover(const FiniteMetricSpace& X, const Cover& cover);

/// Whether every pair of points at distance <= eta lies in a common set.
/// On a finite sample this is the stand-in for openness of the cover: the
/// sets must overlap at the sample's resolution, as open sets covering the
/// underlying continuum do.
bool respects_resolution(const FiniteMetricSpace& X, const Cover& cover, const Rational& eta);

/// Best epsilon-cover found that respects X.resolution(). Heuristic: greedy
/// partitions thickened by the resolution, pruned by local search, minimized
/// over all distance thresholds up to epsilon. Throws InvalidInput if
/// epsilon is not positive or below the resolution.
Cover find_cover(const FiniteMetricSpace& X, const Rational& epsilon);

/// Upper bound on the epsilon-scale covering dimension:
/// multiplicity(find_cover(X, epsilon)) - 1, and -1 for the empty space.
/// Weakly decreasing in epsilon.
int cover_dimension_bound(const FiniteMetricSpace& X, const Rational& epsilon);

/// Nerve approximation of a sampled map.
struct NerveApproximation {
  /// Realized nerve: one vertex per cover set, placed at the image of the
  /// set's first member.
  PLMap nerve_map;
  /// For every sample point: the nerve simplex of the sets containing it
  /// and the partition-of-unity weights on that simplex.
  std::vector<Simplex> carriers;
  std::vector<std::vector<Rational>> weights;
  /// Approximating map on the samples (points of the realized nerve).
  std::vector<Point> sample_images;
  /// max over sets of the Chebyshev image diameter of the set; dominates
  /// the deviation because every approximate value is a convex combination
  /// of representatives of sets containing the point.
  Rational deviation_bound;
  /// Measured max over samples of |approx(x) - f(x)|.
  Rational deviation;
  /// Dimension of the nerve, at most multiplicity - 1.
  int polyhedron_dim = -1;
};

/// Weights w_i(x) = dist(x, X minus S_i) (1 when S_i = X), normalized.
NerveApproximation nerve_approximation(const FiniteMetricSpace& X, const std::vector<Point>& f, const Cover& cover);

/// Rational v with |v| < bound such that every translated pair
/// (SA_i + v, SB_j) is disjoint, verified exactly. Components are drawn on
/// the grid bound * m / 2^j, |m| < 2^j, with j growing on each retry.
/// Throws InvalidInput unless dim SA + dim SB < n, RetryExhausted when the
/// budget runs out.
Point separating_translation(const std::vector<EmbeddedSimplex>& SA, const std::vector<EmbeddedSimplex>& SB,
                             const Rational& bound, std::uint64_t rng_seed, int retry_budget = 64);

/// A finite sample of a space, with a map into R^n and a cover.
struct SampledMap {
  FiniteMetricSpace space;
  std::vector<Point> images;
  Cover cover;
};

/// The sampled map as a PL map on the discrete complex of its samples.
PLMap discrete_map(const std::vector<Point>& images);

struct RefutationWitness {
  /// Realized nerves; f_tilde is translated by v.
  PLMap f_tilde;
  PLMap g_tilde;
  /// The same maps evaluated on the samples, on the discrete complexes of
  /// f_samples and g_samples' domains.
  PLMap f_tilde_samples;
  PLMap g_tilde_samples;
  Rational delta_used;
  Point v;
  Rational dist_f;
  Rational dist_g;
};

/// Re-checks dist_f < delta, dist_g < delta, the sample distances, and exact
/// disjointness of all nerve simplex pairs.
bool verify_witness(const RefutationWitness& w, const SampledMap& f, const SampledMap& g);

/// Throws InvalidInput if a nerve deviation is >= delta/2 (cover too
/// coarse) or the nerve dimensions sum to n or more.
RefutationWitness refute_essential(const SampledMap& f, const SampledMap& g, const Rational& delta,
                                   std::uint64_t rng_seed, int retry_budget = 64);

}  // namespace c0t
