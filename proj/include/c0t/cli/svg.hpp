#pragma once

// Deterministic SVG rendering of scenes and results.
//
// Output depends only on the inputs: coordinates are converted to double
// and printed with a fixed format, elements are emitted in input order.
// Scenes in R^2 are drawn directly, scenes in R^1 on the x-axis, and scenes
// in R^3 need a projection; anything else is rejected.

#include "c0t/certify.hpp"
#include "c0t/cli/scene_io.hpp"
#include "c0t/probe.hpp"
#include "c0t/refute.hpp"
#include "c0t/sakai2d.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace c0t::cli {

enum class Projection { none, xy, xz, yz, oblique };

/// "xy", "xz", "yz" or "oblique"; throws InvalidInput otherwise.
Projection parse_projection(const std::string& name);

/// Collects primitives in world coordinates and writes them on a fixed
/// 640-pixel canvas fitted to their bounding box (y pointing up).
class SvgCanvas {
 public:
  SvgCanvas(std::size_t dim, Projection projection);

  std::array<double, 2> project(const Point& p) const;

  void segment(const Point& a, const Point& b, const std::string& color, double width = 1.5, bool dashed = false);
  void polyline(const std::vector<Point>& pts, const std::string& color, double width = 1.5, bool dashed = false);
  /// Edges of the image of every simplex; isolated vertices as dots.
  void pl_map(const PLMap& F, const std::string& color, double width = 1.5, bool dashed = false);
  void dot(const Point& p, const std::string& color, double radius_px = 3.0);
  void arrow(const Point& from, const Point& to, const std::string& color);
  /// Euclidean circle of the given world radius (2-D scenes only).
  void circle(const Point& center, double radius, const std::string& stroke, const std::string& fill);
  void label(const std::string& text);

  std::string str() const;

 private:
  struct Item {
    enum class Type { path, dot, arrow, circle } type;
    std::vector<std::array<double, 2>> pts;
    double size = 0;
    std::string stroke;
    std::string fill;
    double width = 1.5;
    bool dashed = false;
  };
  void extend(const std::array<double, 2>& q);

  std::size_t dim_;
  Projection projection_;
  std::vector<Item> items_;
  std::vector<std::string> labels_;
  double lo_[2] = {0, 0};
  double hi_[2] = {0, 0};
  bool empty_ = true;
};

std::string render_certify(const FlatChartScene& scene, const Certificate& cert, Projection projection);
std::string render_sakai(const SakaiScene& scene, const SakaiReport& report,
                         const std::vector<std::optional<SqueezeResult>>& squeezes);
std::string render_link(const OrientedCycle& z1, const OrientedCycle& z2, const LinkingResult& result,
                        Projection projection);
std::string render_probe(const PLMap& F, const PLMap& G, const ProbeReport& report, Projection projection);
std::string render_refute(const RefuteScene& scene, const RefutationWitness& w, Projection projection);

/// Writes `svg` to `path`; throws InvalidInput if the file cannot be opened.
void write_file(const std::string& path, const std::string& svg);

}  // namespace c0t::cli
