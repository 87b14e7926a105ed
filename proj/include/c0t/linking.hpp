#pragma once

// Linking coefficient of two disjoint oriented PL cycles of complementary
// dimensions p + q = n - 1 in R^n.
//
// The value is the signed count of transverse intersections between the
// cone a * z1 over a generic apex a (a (p+1)-chain with boundary z1) and
// z2. At an intersection of the cone simplex [a, v0, ..., vp] with the
// simplex [w0, ..., wq], the local sign is
//
//   sign det(v0 - a, ..., vp - a, w1 - w0, ..., wq - w0)
//
// times the orientation signs of the two facets, i.e. the frame of the
// cone simplex followed by the frame of the z2 simplex is compared with the
// standard basis of R^n. Only |value| is independent of this convention.

#include "c0t/plcore.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace c0t {

struct LinkingOptions {
  std::uint64_t seed = 1;
  int retry_budget = 64;
  /// Apexes tried, in order, before any random candidate.
  std::vector<Point> apex_candidates;
};

struct LinkingResult {
  long value = 0;
  /// Exact Chebyshev distance between the two images.
  Rational separation;
  /// separation / 2: perturbing both cycles by less than this keeps the
  /// straight-line homotopies disjoint, so the value cannot change.
  Rational stability_radius;
  Point apex;
  int apex_attempts = 0;
};

/// Exact minimum Chebyshev distance between the images of two cycles.
Rational image_separation(const OrientedCycle& z1, const OrientedCycle& z2);

struct ApexSearchResult {
  Point apex;
  long intersection_number = 0;
  int attempts = 0;
};

/// Signed intersection number of a * z1 with z2, or nullopt when some cone
/// simplex meets a z2 simplex non-transversally (touching a face, or a
/// singular configuration that still intersects).
std::optional<long> cone_intersection_number(const OrientedCycle& z1, const OrientedCycle& z2, const Point& apex);

/// Finds a rational apex outside the bounding box of both images for which
/// every cone/z2 simplex pair is either disjoint or meets in a single
/// interior point. Throws RetryExhausted after `retry_budget` attempts.
ApexSearchResult cone_apex_search(const OrientedCycle& z1, const OrientedCycle& z2, std::uint64_t rng_seed,
                                  int retry_budget = 64, const std::vector<Point>& first_candidates = {});

/// Throws InvalidInput for non-complementary dimensions or intersecting
/// images, RetryExhausted if no generic apex is found.
LinkingResult linking_number(const OrientedCycle& z1, const OrientedCycle& z2, const LinkingOptions& options = {});

}  // namespace c0t
