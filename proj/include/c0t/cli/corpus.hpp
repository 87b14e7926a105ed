#pragma once

// Bundled example scenes, available through `c0trans examples`.

#include "c0t/cli/scene_io.hpp"

#include <string>
#include <vector>

namespace c0t::cli {

struct Example {
  std::string name;
  /// Subcommand that consumes the scene.
  std::string command;
  std::string description;
  Json scene;
};

/// All examples, in a fixed order.
std::vector<Example> example_corpus();

/// Throws InvalidInput for unknown names.
Example find_example(const std::string& name);

/// x-axis (K) against the vertical axis (B's disk) in the chart with nu = 1/4.
Json crossing_lines_scene(int disk_subdivisions = 2);

/// Two round 16-gons forming a Hopf link; the second one shifted by
/// `offset` along the x-axis.
Json hopf_link_scene(const Rational& offset = 0);

/// Segments along the x- and y-axes of R^3, sampled at `samples` points,
/// crossing at the origin.
Json skew_segments_scene(const Rational& delta, int samples = 41);

/// An arc through the origin of R^2 against the origin itself, scaled with
/// delta so the sample size stays fixed.
Json point_vs_arc_scene(const Rational& delta, int samples = 101);

}  // namespace c0t::cli
