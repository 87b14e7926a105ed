#include "c0t/cli/corpus.hpp"

#include "c0t/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace c0t::cli {

namespace {

Json header(const std::string& kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

/// Six-digit decimal string; exact once parsed.
std::string decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

Json sampled_segment(const Point& a, const Point& b, int samples, const Rational& epsilon) {
  Json points = Json::array();
  for (int i = 0; i < samples; ++i) {
    const Rational t = ratio(i, samples - 1);
    points.push_back(point_json(a * (Rational(1) - t) + b * t));
  }
  Json m;
  m["points"] = std::move(points);
  Json cover;
  cover["epsilon"] = rational_json(epsilon);
  m["cover"] = std::move(cover);
  return m;
}

Json parabola_tangency_scene() {
  Json j = header("sakai");
  Json K = Json::array();
  for (int i = -4; i <= 4; ++i) K.push_back(point_json(Point{ratio(i, 4), Rational(0)}));
  Json L = Json::array();
  for (int i = -8; i <= 8; ++i) {
    const Rational x = ratio(i, 8);
    L.push_back(point_json(Point{x, x * x}));
  }
  j["K"] = std::move(K);
  j["L"] = std::move(L);
  j["p"] = point_json(Point{0, 0});
  j["radii"] = Json::array({"1", "1/2", "1/4"});
  j["squeeze_epsilon"] = "1/10";
  return j;
}

Json oscillating_curve_scene() {
  Json j = header("sakai");
  j["K"] = Json::array({Json::array({"-1/4", "0"}), Json::array({"1/4", "0"})});
  j["L"] = polyline_json(oscillating_curve(Rational(1, 4), Rational(1, 1000)).vertices);
  j["p"] = Json::array({"0", "0"});
  j["radii"] = Json::array({"1/5", "1/10", "1/20"});
  return j;
}

Json crossing_lines_sakai_scene() {
  Json j = header("sakai");
  j["K"] = Json::array({Json::array({"-2", "0"}), Json::array({"2", "0"})});
  j["L"] = Json::array({Json::array({"0", "-2"}), Json::array({"0", "2"})});
  j["p"] = Json::array({"0", "0"});
  j["radii"] = Json::array({"1", "1/2", "1/4"});
  return j;
}

Json segment_dim_scene() {
  Json j = header("dim");
  Json points = Json::array();
  for (int i = 0; i < 100; ++i) points.push_back(Json::array({rational_json(ratio(i, 99))}));
  j["points"] = std::move(points);
  j["epsilon"] = "1/5";
  return j;
}

}  // namespace

Json crossing_lines_scene(int disk_subdivisions) {
  Json j = header("certify");
  j["n"] = 2;
  j["k"] = 1;
  j["l"] = 1;
  j["nu"] = "1/4";
  j["disk_subdivisions"] = disk_subdivisions;
  Json images = Json::array();
  for (int i = 0; i <= disk_subdivisions; ++i) {
    images.push_back(point_json(Point{Rational(0), ratio(2 * i, disk_subdivisions) - 1}));
  }
  j["disk_images"] = std::move(images);
  return j;
}

Json hopf_link_scene(const Rational& offset) {
  Json j = header("link");
  j["dim"] = 3;
  Json a = Json::array();
  Json b = Json::array();
  for (int i = 0; i < 16; ++i) {
    const double t = 2 * std::numbers::pi * i / 16;
    a.push_back(Json::array({decimal(std::cos(t)), decimal(std::sin(t)), "0"}));
    const Rational bx = parse_rational(decimal(1 + std::cos(t))) + offset;
    b.push_back(Json::array({rational_json(bx), "0", decimal(std::sin(t))}));
  }
  Json cycles = Json::array();
  cycles.push_back(Json{{"name", "a"}, {"polygon", std::move(a)}});
  cycles.push_back(Json{{"name", "b"}, {"polygon", std::move(b)}});
  j["cycles"] = std::move(cycles);
  j["pair"] = Json::array({"a", "b"});
  return j;
}

Json skew_segments_scene(const Rational& delta, int samples) {
  Json j = header("refute");
  j["n"] = 3;
  j["delta"] = rational_json(delta);
  j["A"] = sampled_segment(Point{-1, 0, 0}, Point{1, 0, 0}, samples, Rational(1, 10));
  j["B"] = sampled_segment(Point{0, -1, 0}, Point{0, 1, 0}, samples, Rational(1, 10));
  return j;
}

Json point_vs_arc_scene(const Rational& delta, int samples) {
  // delta * (s, s^2 / 4) for s in [-2, 2]: neighbouring samples are
  // 0.04 delta apart (Chebyshev), so a cover at scale delta/4 resolves the
  // arc with multiplicity 2 and keeps the nerve within delta/4 of it.
  Json j = header("refute");
  j["n"] = 2;
  j["delta"] = rational_json(delta);
  Json arc = Json::array();
  for (int i = 0; i < samples; ++i) {
    const Rational s = ratio(4 * i, samples - 1) - 2;
    arc.push_back(point_json(Point{delta * s, delta * s * s / 4}));
  }
  Json A;
  A["points"] = std::move(arc);
  A["cover"] = Json{{"epsilon", rational_json(delta / 4)}};
  Json B;
  B["points"] = Json::array({Json::array({"0", "0"})});
  B["cover"] = Json{{"epsilon", rational_json(delta / 4)}};
  j["A"] = std::move(A);
  j["B"] = std::move(B);
  return j;
}

std::vector<Example> example_corpus() {
  std::vector<Example> out;
  out.push_back({"crossing-lines", "certify",
                 "x-axis against the vertical axis in R^2 (nu = 1/4); certified with |kappa| = 1, delta = 1/16",
                 crossing_lines_scene()});
  out.push_back({"crossing-lines-sakai", "sakai", "the coordinate axes of R^2 at the origin; transverse",
                 crossing_lines_sakai_scene()});
  out.push_back({"parabola-tangency", "sakai",
                 "y = x^2 tangent to the x-axis at the origin; one-sided, squeezed out", parabola_tangency_scene()});
  out.push_back({"oscillating-curve", "sakai",
                 "x-axis against y = exp(-1/x^2) sin(1/x) (x > 0), 0 (x <= 0); transverse at the origin",
                 oscillating_curve_scene()});
  out.push_back({"hopf-link", "link", "two round 16-gons forming a Hopf link in R^3; |value| = 1",
                 hopf_link_scene()});
  out.push_back({"skew-segments-r3", "refute",
                 "segments along the x- and y-axes of R^3 crossing at the origin; separated for delta = 1/5",
                 skew_segments_scene(Rational(1, 5))});
  out.push_back({"point-vs-arc", "refute", "an arc through the origin of R^2 against the origin; delta = 1/10",
                 point_vs_arc_scene(Rational(1, 10))});
  out.push_back({"segment-dim", "dim", "100 samples of [0, 1]; covering dimension bound 1 at epsilon = 1/5",
                 segment_dim_scene()});
  return out;
}

Example find_example(const std::string& name) {
  for (auto& e : example_corpus()) {
    if (e.name == name) return e;
  }
  std::string known;
  for (const auto& e : example_corpus()) known += (known.empty() ? "" : ", ") + e.name;
  throw InvalidInput("unknown example '" + name + "' (known: " + known + ")");
}

}  // namespace c0t::cli
