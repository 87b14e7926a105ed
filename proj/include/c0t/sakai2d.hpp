#pragma once

// Transversality of two plane curves at a common point, disk-side version.
//
// K and L are polylines through p. For a small Euclidean open disk D_a
// around p, the component K' of K inside D_a through p cuts the disk into
// two sides; the curves are transverse at p when the component L' of L
// through p meets both sides for every small radius. When L' stays on one
// side, it can be pushed off K' by an arbitrarily small perturbation
// ("squeezed out"), which refutes every delta-essential intersection.
//
// Everything is exact. Circle crossings are never computed: an arc is kept
// as whole polyline segments and intersected with the open disk through
// exact sign tests of the squared distance.

#include "c0t/plcore.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace c0t {

struct Polyline {
  std::vector<Point> vertices;
};

/// Throws InvalidInput unless there are at least two vertices, all in R^2,
/// and consecutive vertices differ.
void validate(const Polyline& C);

/// Component of C intersected with the open disk |x - p| < a that contains
/// p. Stored as consecutive whole segments of C; the component is their
/// union intersected with the disk. Interior vertices lie inside the disk.
struct DiskArc {
  std::vector<Point> vertices;
  Point center;
  Rational radius;
  /// Both end vertices lie outside the open disk, so the arc crosses it.
  bool spans = false;
};

/// Throws InvalidInput if p is not on C or a <= 0.
DiskArc component_in_disk(const Polyline& C, const Point& p, const Rational& a);

enum class Side { plus, minus, on };
const char* to_string(Side s);

/// Classifies points of the open disk against a spanning arc K'. The plus
/// side is the one to the left of K' in its vertex order. A query is
/// decided by the parity of crossings of the segment from the query to a
/// reference point known to lie on the plus side; degenerate segments
/// (through a vertex of K') are retried with other reference points.
class SideClassifier {
 public:
  /// Throws InvalidInput if the arc does not span the disk.
  explicit SideClassifier(DiskArc arc, std::uint64_t seed = 1, int retry_budget = 64);

  /// Throws InvalidInput if q is not in the open disk, RetryExhausted if no
  /// reference point gives a generic segment.
  Side classify(const Point& q) const;

  const DiskArc& arc() const { return arc_; }
  const Point& reference() const { return references_.front(); }

 private:
  bool valid_reference(const Point& m, const Point& r) const;
  const Point& reference_at(std::size_t j) const;

  DiskArc arc_;
  std::size_t base_piece_ = 0;
  Point base_point_;
  std::uint64_t seed_;
  int retry_budget_;
  mutable std::vector<Point> references_;
};

/// Where L' passes from one side to the other.
struct SideChange {
  Point location;
  Side from = Side::plus;
  Side to = Side::minus;
};

struct RadiusVerdict {
  Rational radius;
  bool K_spans = false;
  bool meets_plus = false;
  bool meets_minus = false;
  bool transverse = false;
  /// Side changes along L', in L's vertex order.
  std::vector<SideChange> side_changes;
  /// The side change closest to p.
  std::optional<Point> nearest_change;
  DiskArc K_prime;
  DiskArc L_prime;
  std::string note;
};

struct SakaiReport {
  std::vector<RadiusVerdict> radii;
  /// Transverse at every listed radius (and K' spans at each).
  bool transverse_all = false;
};

/// Per-radius verdicts. Throws InvalidInput if p is not on both curves or a
/// radius is not positive; a non-spanning K' is reported per radius.
SakaiReport sakai_check(const Polyline& K, const Polyline& L, const Point& p, const std::vector<Rational>& radii);

struct SqueezeResult {
  Side target = Side::plus;
  /// Push distance actually used (Chebyshev); 0 when L' already avoids K'.
  Rational eta;
  /// L' subdivided at its contacts with K', and the pushed copy. Both are
  /// PL maps on the same path complex.
  PLMap original;
  PLMap pushed;
  /// c0_distance(original, pushed).
  Rational norm;
};

/// Whether the polyline avoids K' inside the open disk of K'.
bool avoids_in_disk(const std::vector<Point>& polyline, const DiskArc& K_prime);

/// Pushes the vertices of L' lying on K' by eta < epsilon toward the side L'
/// touches (plus when it touches neither), along the normal of K' or the
/// bisector at joints, halving eta until the result avoids K' exactly.
/// Throws InvalidInput if L' meets both sides, RetryExhausted if halving
/// runs out.
SqueezeResult squeeze_out(const DiskArc& K_prime, const DiskArc& L_prime, const Rational& epsilon,
                          int retry_budget = 64);

/// Graph of y = 0 (x <= 0), exp(-1/x^2) sin(1/x) (x > 0) sampled at
/// x = step * i on [-x_max, x_max]; y is evaluated in double precision and
/// embedded exactly.
Polyline oscillating_curve(const Rational& x_max, const Rational& step);

/// The function sampled by oscillating_curve, in double precision.
double oscillating_y(double x);

}  // namespace c0t
