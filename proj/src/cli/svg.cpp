#include "c0t/cli/svg.hpp"

#include "c0t/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace c0t::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kMargin = 24.0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

Projection parse_projection(const std::string& name) {
  if (name == "xy") return Projection::xy;
  if (name == "xz") return Projection::xz;
  if (name == "yz") return Projection::yz;
  if (name == "oblique") return Projection::oblique;
  throw InvalidInput("unknown projection '" + name + "' (expected xy, xz, yz or oblique)");
}

SvgCanvas::SvgCanvas(std::size_t dim, Projection projection) : dim_(dim), projection_(projection) {
  if (dim_ == 0 || dim_ > 3) {
    throw InvalidInput("cannot render a scene in R^" + std::to_string(dim_) + " (supported: R^1, R^2, R^3 projected)");
  }
  if (dim_ == 3 && projection_ == Projection::none) {
    throw InvalidInput("cannot render a scene in R^3 without a projection (use --project xy|xz|yz|oblique)");
  }
}

std::array<double, 2> SvgCanvas::project(const Point& p) const {
  if (p.dim() != dim_) throw InvalidInput("point of dimension " + std::to_string(p.dim()) + " in a " +
                                          std::to_string(dim_) + "-dimensional drawing");
  const std::vector<double> c = to_doubles(p);
  if (dim_ == 1) return {c[0], 0.0};
  if (dim_ == 2) return {c[0], c[1]};
  switch (projection_) {
    case Projection::xy:
      return {c[0], c[1]};
    case Projection::xz:
      return {c[0], c[2]};
    case Projection::yz:
      return {c[1], c[2]};
    case Projection::oblique:
    case Projection::none:
      break;
  }
  // Cabinet projection: depth drawn at half length along 45 degrees.
  constexpr double k = 0.35355339059327373;
  return {c[0] + k * c[2], c[1] + k * c[2]};
}

void SvgCanvas::extend(const std::array<double, 2>& q) {
  if (empty_) {
    lo_[0] = hi_[0] = q[0];
    lo_[1] = hi_[1] = q[1];
    empty_ = false;
    return;
  }
  for (int i = 0; i < 2; ++i) {
    lo_[i] = std::min(lo_[i], q[i]);
    hi_[i] = std::max(hi_[i], q[i]);
  }
}

void SvgCanvas::segment(const Point& a, const Point& b, const std::string& color, double width, bool dashed) {
  polyline({a, b}, color, width, dashed);
}

void SvgCanvas::polyline(const std::vector<Point>& pts, const std::string& color, double width, bool dashed) {
  Item it{Item::Type::path, {}, 0, color, "none", width, dashed};
  for (const auto& p : pts) {
    it.pts.push_back(project(p));
    extend(it.pts.back());
  }
  items_.push_back(std::move(it));
}

void SvgCanvas::pl_map(const PLMap& F, const std::string& color, double width, bool dashed) {
  const auto& K = F.domain();
  std::vector<bool> covered(K.vertex_count(), false);
  if (K.dim() >= 1) {
    for (const auto& e : K.simplices(1)) {
      segment(F.image(e.vertices[0]), F.image(e.vertices[1]), color, width, dashed);
      covered[e.vertices[0]] = covered[e.vertices[1]] = true;
    }
  }
  for (VertexId v = 0; v < K.vertex_count(); ++v) {
    if (!covered[v]) dot(F.image(v), color);
  }
}

void SvgCanvas::dot(const Point& p, const std::string& color, double radius_px) {
  Item it{Item::Type::dot, {project(p)}, radius_px, "none", color, 0, false};
  extend(it.pts[0]);
  items_.push_back(std::move(it));
}

void SvgCanvas::arrow(const Point& from, const Point& to, const std::string& color) {
  Item it{Item::Type::arrow, {project(from), project(to)}, 0, color, "none", 1.0, false};
  extend(it.pts[0]);
  extend(it.pts[1]);
  items_.push_back(std::move(it));
}

void SvgCanvas::circle(const Point& center, double radius, const std::string& stroke, const std::string& fill) {
  Item it{Item::Type::circle, {project(center)}, radius, stroke, fill, 1.0, false};
  extend({it.pts[0][0] - radius, it.pts[0][1] - radius});
  extend({it.pts[0][0] + radius, it.pts[0][1] + radius});
  items_.push_back(std::move(it));
}

void SvgCanvas::label(const std::string& text) { labels_.push_back(text); }

std::string SvgCanvas::str() const {
  double lo[2] = {lo_[0], lo_[1]};
  double hi[2] = {hi_[0], hi_[1]};
  if (empty_) lo[0] = lo[1] = 0, hi[0] = hi[1] = 1;
  for (int i = 0; i < 2; ++i) {
    if (hi[i] - lo[i] <= 0) lo[i] -= 0.5, hi[i] += 0.5;
  }
  const double inner = kWidth - 2 * kMargin;
  const double scale = std::min(inner / (hi[0] - lo[0]), inner / (hi[1] - lo[1]));
  const double height = (hi[1] - lo[1]) * scale + 2 * kMargin + 16.0 * static_cast<double>(labels_.size());
  const double top = 16.0 * static_cast<double>(labels_.size());
  auto X = [&](double x) { return fmt(kMargin + (x - lo[0]) * scale); };
  auto Y = [&](double y) { return fmt(top + kMargin + (hi[1] - y) * scale); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(height) +
       "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(height) + "\">\n";
  s += "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
       "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"context-stroke\"/></marker></defs>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(height) + "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    s += "<text x=\"8\" y=\"" + fmt(14.0 + 16.0 * static_cast<double>(i)) +
         "\" font-family=\"monospace\" font-size=\"12\">" + escape(labels_[i]) + "</text>\n";
  }
  for (const auto& it : items_) {
    switch (it.type) {
      case Item::Type::path: {
        s += "<polyline fill=\"none\" stroke=\"" + it.stroke + "\" stroke-width=\"" + fmt(it.width) + "\"";
        if (it.dashed) s += " stroke-dasharray=\"4 3\"";
        s += " points=\"";
        for (std::size_t i = 0; i < it.pts.size(); ++i) {
          if (i) s += ' ';
          s += X(it.pts[i][0]) + "," + Y(it.pts[i][1]);
        }
        s += "\"/>\n";
        break;
      }
      case Item::Type::dot:
        s += "<circle cx=\"" + X(it.pts[0][0]) + "\" cy=\"" + Y(it.pts[0][1]) + "\" r=\"" + fmt(it.size) +
             "\" fill=\"" + it.fill + "\"/>\n";
        break;
      case Item::Type::arrow:
        s += "<line x1=\"" + X(it.pts[0][0]) + "\" y1=\"" + Y(it.pts[0][1]) + "\" x2=\"" + X(it.pts[1][0]) +
             "\" y2=\"" + Y(it.pts[1][1]) + "\" stroke=\"" + it.stroke + "\" stroke-width=\"" + fmt(it.width) +
             "\" marker-end=\"url(#head)\"/>\n";
        break;
      case Item::Type::circle:
        s += "<circle cx=\"" + X(it.pts[0][0]) + "\" cy=\"" + Y(it.pts[0][1]) + "\" r=\"" + fmt(it.size * scale) +
             "\" fill=\"" + it.fill + "\" fill-opacity=\"0.15\" stroke=\"" + it.stroke + "\"/>\n";
        break;
    }
  }
  s += "</svg>\n";
  return s;
}

// ---------------------------------------------------------------------------

std::string render_certify(const FlatChartScene& scene, const Certificate& cert, Projection projection) {
  SvgCanvas c(static_cast<std::size_t>(scene.n), projection);
  c.label("certify: " + std::string(cert.verdict == Verdict::certified ? "certified" : "rejected") +
          "  kappa=" + std::to_string(cert.kappa) + "  delta=" + to_string(cert.delta));
  // J = [-1, 1]^n, drawn as its 1-skeleton.
  PLMap J = freudenthal_cube(scene.n, 1);
  const auto& K = J.domain();
  for (const auto& e : K.simplices(1)) {
    const Point d = J.image(e.vertices[1]) - J.image(e.vertices[0]);
    int nonzero = 0;
    for (const auto& x : d.coords()) nonzero += x != 0;
    if (nonzero == 1) c.segment(J.image(e.vertices[0]), J.image(e.vertices[1]), "#bbbbbb", 1.0, true);
  }
  if (scene.n <= 3) {
    OrientedCycle plate = build_plate(scene.k, scene.n, scene.nu, nullptr, scene.ja_subdivisions);
    c.pl_map(plate.map(), "#9ecae1", 1.0, true);
  }
  c.pl_map(build_JA(scene.k, scene.n, scene.nu, scene.ja_subdivisions), "#d62728", 3.0);
  c.pl_map(scene.disk_map, "#1f77b4", 1.5);
  OrientedCycle sphere = sphere_cycle(scene);
  for (const auto& f : sphere.facets()) {
    const auto pts = sphere.map().embed(f.simplex);
    if (pts.size() == 1) c.dot(pts[0], "#2ca02c", 4.0);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) c.segment(pts[i], pts[i + 1], "#2ca02c", 2.0);
  }
  return c.str();
}

std::string render_sakai(const SakaiScene& scene, const SakaiReport& report,
                         const std::vector<std::optional<SqueezeResult>>& squeezes) {
  SvgCanvas c(2, Projection::none);
  c.label(std::string("sakai: ") + (report.transverse_all ? "transverse at every radius" : "not transverse"));
  for (const auto& v : report.radii) {
    c.circle(scene.p, to_double(v.radius), "#888888", "#e0e0ff");
  }
  c.polyline(scene.K.vertices, "#c7c7c7", 1.0);
  c.polyline(scene.L.vertices, "#f7c6a0", 1.0);
  for (std::size_t i = 0; i < report.radii.size(); ++i) {
    const auto& v = report.radii[i];
    c.polyline(v.K_prime.vertices, "#1f77b4", 2.0);
    c.polyline(v.L_prime.vertices, "#ff7f0e", 2.0);
    for (const auto& ch : v.side_changes) c.dot(ch.location, "#d62728", 2.5);
    if (i < squeezes.size() && squeezes[i]) {
      c.polyline(squeezes[i]->original.images(), "#7f7f7f", 1.0, true);
      c.polyline(squeezes[i]->pushed.images(), "#2ca02c", 1.5);
    }
  }
  c.dot(scene.p, "#000000", 3.0);
  return c.str();
}

std::string render_link(const OrientedCycle& z1, const OrientedCycle& z2, const LinkingResult& result,
                        Projection projection) {
  SvgCanvas c(z1.ambient_dim(), projection);
  c.label("link: value=" + std::to_string(result.value) + "  separation=" + to_string(result.separation));
  for (const auto* z : {&z1, &z2}) {
    const std::string color = z == &z1 ? "#1f77b4" : "#d62728";
    for (const auto& f : z->facets()) {
      const auto pts = z->map().embed(f.simplex);
      if (pts.size() == 1) c.dot(pts[0], color, 4.0);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) c.segment(pts[i], pts[i + 1], color, 2.0);
      if (pts.size() == 2 && f.sign != 0) {
        // Direction of the oriented edge.
        const Point mid = (pts[0] + pts[1]) * Rational(1, 2);
        const Point tip = f.sign > 0 ? pts[1] : pts[0];
        c.arrow(mid, mid + (tip - mid) * Rational(1, 4), color);
      }
    }
  }
  return c.str();
}

std::string render_probe(const PLMap& F, const PLMap& G, const ProbeReport& report, Projection projection) {
  SvgCanvas c(F.ambient_dim(), projection);
  c.label("probe: " + report.summary() + "  delta=" + to_string(report.delta));
  c.pl_map(F, "#1f77b4", 2.0);
  c.pl_map(G, "#d62728", 2.0);
  if (report.witness) {
    const auto& w = *report.witness;
    c.pl_map(w.F_tilde, "#1f77b4", 1.0, true);
    c.pl_map(w.G_tilde, "#d62728", 1.0, true);
    for (VertexId v = 0; v < F.domain().vertex_count(); ++v) {
      if (F.image(v) != w.F_tilde.image(v)) c.arrow(F.image(v), w.F_tilde.image(v), "#555555");
    }
    for (VertexId v = 0; v < G.domain().vertex_count(); ++v) {
      if (G.image(v) != w.G_tilde.image(v)) c.arrow(G.image(v), w.G_tilde.image(v), "#555555");
    }
  }
  return c.str();
}

std::string render_refute(const RefuteScene& scene, const RefutationWitness& w, Projection projection) {
  SvgCanvas c(scene.n, projection);
  c.label("refute: separated by v=(" + [&] {
    std::string s;
    for (std::size_t i = 0; i < w.v.dim(); ++i) s += (i ? ", " : "") + to_string(w.v[i]);
    return s;
  }() + ")  delta=" + to_string(w.delta_used));
  for (const auto& p : scene.A.images) c.dot(p, "#1f77b4", 1.5);
  for (const auto& p : scene.B.images) c.dot(p, "#d62728", 1.5);
  c.pl_map(w.f_tilde, "#1f77b4", 1.5);
  c.pl_map(w.g_tilde, "#d62728", 1.5);
  if (w.f_tilde.domain().vertex_count() > 0) {
    const Point& q = w.f_tilde.image(0);
    c.arrow(q - w.v, q, "#555555");
  }
  return c.str();
}

void write_file(const std::string& path, const std::string& svg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
  out << svg;
  if (!out) throw InvalidInput("failed writing '" + path + "'");
}

}  // namespace c0t::cli
