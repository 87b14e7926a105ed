#pragma once

// Sufficient condition for delta-essential intersections of two
// submanifolds A (dimension k) and B of R^n, stated in flat chart
// coordinates where A is the coordinate plane R^k x {0}.
//
// A disk map f: D^{n-k} -> B certifies the intersection when its image stays
// inside J = [-1,1]^n, its boundary sphere avoids the flat piece
// J_A = [-1-nu, 1+nu]^k x {0}, and the sphere links the plate cycle built
// from J_A with nonzero linking coefficient kappa. The certified delta is an
// explicit closed-form bound below which no pair of perturbations of J_A and
// of the disk can separate the two images.
//
// Scenes are authored in chart coordinates. Translating the certified delta
// back through a chart into ambient coordinates needs a modulus of
// continuity of the chart and is left to the caller.

#include "c0t/linking.hpp"
#include "c0t/plcore.hpp"

#include <functional>
#include <optional>
#include <string>

namespace c0t {

struct FlatChartScene {
  int n = 0;
  int k = 0;
  /// Dimension of B, when known. Informational only.
  std::optional<int> l;
  Rational nu;
  int disk_subdivisions = 1;
  /// PL map on freudenthal_cube(n - k, disk_subdivisions) into R^n (the
  /// disk map in chart coordinates).
  PLMap disk_map;
  /// Subdivisions per axis of the triangulated J_A.
  int ja_subdivisions = 1;
  std::string chart_note = "coordinates are chart coordinates in which A is flat";
};

/// Builds a scene by evaluating `f` at the reference coordinates of every
/// vertex of freudenthal_cube(n - k, s).
FlatChartScene make_flat_chart_scene(int n, int k, const Rational& nu, int s,
                                     const std::function<Point(const Point&)>& f);

/// Throws InvalidInput unless 0 <= k < n, nu > 0, and the disk map is a map
/// of freudenthal_cube(n - k, disk_subdivisions) into R^n.
void validate(const FlatChartScene& scene);

/// J_A = [-1-nu, 1+nu]^k x {0}^{n-k} as an embedded triangulated box. For
/// k = 0 this is the single point at the origin.
PLMap build_JA(int k, int n, const Rational& nu, int subdivisions = 1);

/// Plate cycle over the boundary of I^{k+1}, I = [-1-nu, 1+nu]. A point
/// (a, t) of the boundary maps to (a, 0) on the top face t = 1+nu and to
/// (a, 3(t-1-nu)) (in coordinates 1..k+1) elsewhere, so the walls drop to
/// depth -6-6nu and the bottom face closes the cycle at that depth.
///
/// With `h_A` (a map on build_JA's domain) the top face becomes h_A(a, 0)
/// and the rest h_A(a, 0) + 3(t-1-nu) e_{k+1}.
OrientedCycle build_plate(int k, int n, const Rational& nu, const PLMap* h_A = nullptr, int subdivisions = 1);

/// The disk map restricted to its boundary sphere, with the boundary
/// orientation of the Freudenthal ball.
OrientedCycle sphere_cycle(const FlatChartScene& scene);

struct ConditionT {
  /// Disk image contained in J.
  bool disk_in_J = false;
  /// Boundary sphere image contained in J and disjoint from J_A.
  bool sphere_avoids_JA = false;
  /// Linking coefficient of the sphere with the plate; 0 when not computed.
  long kappa = 0;
  std::optional<LinkingResult> linking;
  std::string failure;

  bool holds() const { return disk_in_J && sphere_avoids_JA && kappa != 0; }
};

ConditionT check_condition_T(const FlatChartScene& scene, const LinkingOptions& options = {});

struct Margins {
  /// Chebyshev distance between the boundary sphere image and J_A.
  Rational sphere_to_JA;
  /// nu / 2.
  Rational nu_half;
  /// Chebyshev distance between the boundary sphere image and the plate.
  Rational separation;
};

struct CertifiedDelta {
  Rational delta;
  Margins margins;
};

/// delta = min(sphere_to_JA, nu/2, separation) / 2. Throws InvalidInput if
/// kappa is zero, InternalInconsistency if a margin is not positive.
CertifiedDelta certified_delta(const FlatChartScene& scene, const OrientedCycle& plate, const LinkingResult& kappa);

enum class Verdict { certified, rejected };

struct Certificate {
  Verdict verdict = Verdict::rejected;
  std::string reason;
  long kappa = 0;
  Rational delta;
  std::optional<Margins> margins;
  bool disk_in_J = false;
  bool sphere_avoids_JA = false;
  std::optional<LinkingResult> linking;
};

/// Certified iff Condition T holds; rejected with the first failing
/// condition otherwise. A certified delta is sound for all PL perturbations
/// of J_A and of the disk map within delta.
Certificate certify_transverse(const FlatChartScene& scene, const LinkingOptions& options = {});

struct PerturbedCheck {
  bool images_intersect = false;
  /// Linking coefficient of the perturbed sphere with the perturbed plate.
  std::optional<long> kappa;
};

/// Re-runs the argument on explicit perturbations: h_A on build_JA's
/// domain, h_B on the disk domain.
PerturbedCheck check_perturbed(const FlatChartScene& scene, const PLMap& h_A, const PLMap& h_B,
                               const LinkingOptions& options = {});

}  // namespace c0t
