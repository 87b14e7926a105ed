#pragma once

// Randomized search for perturbations that separate two PL maps.
//
// An intersection of the images of F and G is delta-essential when every
// pair of perturbations within delta still intersects. A separating pair
// found here is a proof that the intersection is not delta-essential; the
// absence of one after N trials is only evidence.

#include "c0t/plcore.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace c0t {

enum class Strategy {
  /// Every vertex displaced uniformly in the open delta-ball.
  uniform,
  /// As uniform, with one random coordinate pushed to the edge of the ball.
  boundary,
  /// One random direction per map, shared by all its vertices, at nearly
  /// full length (a rigid translation).
  directional,
};

const char* to_string(Strategy s);
/// Throws InvalidInput for unknown names.
Strategy parse_strategy(const std::string& name);

/// Vertex images displaced within the open Chebyshev delta-ball on the grid
/// delta * m / 2^16, |m| < 2^16, so c0_distance(F, result) < delta (or the
/// map itself for delta = 0). Throws InvalidInput for delta < 0.
PLMap random_perturbation(const PLMap& F, const Rational& delta, std::uint64_t rng_seed,
                          Strategy strategy = Strategy::uniform);

struct ProbeWitness {
  PLMap F_tilde;
  PLMap G_tilde;
  std::size_t trial = 0;
  Rational dist_F;
  Rational dist_G;
};

struct ProbeReport {
  std::size_t trials = 0;
  /// Trials whose perturbed images still intersect.
  std::size_t intersecting = 0;
  /// First separating pair, by trial index.
  std::optional<ProbeWitness> witness;
  Rational delta;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::uniform;

  /// "refuted (witness)" or "no witness found in N trials".
  std::string summary() const;
};

/// Whether (F_tilde, G_tilde) is a valid separating pair: same domains as
/// (F, G), both strictly within delta, images disjoint.
bool check_witness(const PLMap& F, const PLMap& G, const Rational& delta, const PLMap& F_tilde,
                   const PLMap& G_tilde);

/// Runs independent trials; trial t draws from the substream
/// derive_seed(seed, t), so the report does not depend on `threads`.
ProbeReport probe_essential(const PLMap& F, const PLMap& G, const Rational& delta, std::size_t trials,
                            std::uint64_t rng_seed, Strategy strategy = Strategy::uniform, unsigned threads = 1);

}  // namespace c0t
