#include "c0t/certify.hpp"

#include "c0t/errors.hpp"

#include <string>

namespace c0t {

namespace {

bool inside_J(const Point& p) {
  for (const auto& c : p.coords()) {
    if (c < -1 || c > 1) return false;
  }
  return true;
}

Point lift(const Point& p, std::size_t n) {
  std::vector<Rational> c(p.coords().begin(), p.coords().end());
  c.resize(n);
  return Point(std::move(c));
}

std::size_t cube_vertex_count(int m, int s) {
  std::size_t count = 1;
  for (int j = 0; j < m; ++j) count *= static_cast<std::size_t>(s) + 1;
  return count;
}

}  // namespace

FlatChartScene make_flat_chart_scene(int n, int k, const Rational& nu, int s,
                                     const std::function<Point(const Point&)>& f) {
  if (k < 0 || k >= n) throw InvalidInput("need 0 <= k < n");
  const PLMap cube = freudenthal_cube(n - k, s);
  std::vector<Point> images;
  images.reserve(cube.images().size());
  for (const auto& ref : cube.images()) images.push_back(f(ref));
  FlatChartScene scene;
  scene.n = n;
  scene.k = k;
  scene.nu = nu;
  scene.disk_subdivisions = s;
  scene.disk_map = cube.with_images(std::move(images));
  validate(scene);
  return scene;
}

void validate(const FlatChartScene& scene) {
  if (scene.n < 1) throw InvalidInput("ambient dimension n must be >= 1");
  if (scene.k < 0 || scene.k >= scene.n) throw InvalidInput("need 0 <= k < n");
  if (scene.nu <= 0) throw InvalidInput("nu must be positive");
  if (scene.disk_subdivisions < 1 || scene.ja_subdivisions < 1) throw InvalidInput("subdivisions must be >= 1");
  if (scene.l && (*scene.l < 0 || *scene.l > scene.n)) throw InvalidInput("l must lie in [0, n]");
  const int m = scene.n - scene.k;
  if (!scene.disk_map.domain_ptr()) throw InvalidInput("scene has no disk map");
  if (scene.disk_map.ambient_dim() != static_cast<std::size_t>(scene.n)) {
    throw InvalidInput("disk map images must lie in R^n");
  }
  if (scene.disk_map.domain().vertex_count() != cube_vertex_count(m, scene.disk_subdivisions) ||
      scene.disk_map.domain().dim() != m) {
    throw InvalidInput("disk map domain is not the triangulated (n-k)-ball with the stated subdivisions");
  }
}

PLMap build_JA(int k, int n, const Rational& nu, int subdivisions) {
  if (k < 0 || k >= n) throw InvalidInput("need 0 <= k < n");
  if (nu <= 0) throw InvalidInput("nu must be positive");
  const auto dim = static_cast<std::size_t>(n);
  if (k == 0) {
    auto domain = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(1, {}));
    return PLMap(domain, {Point::zero(dim)});
  }
  const PLMap cube = freudenthal_cube(k, subdivisions);
  const Rational scale = 1 + nu;
  std::vector<Point> images;
  for (const auto& ref : cube.images()) images.push_back(lift(ref * scale, dim));
  return cube.with_images(std::move(images));
}

OrientedCycle build_plate(int k, int n, const Rational& nu, const PLMap* h_A, int subdivisions) {
  if (k < 0 || k >= n) throw InvalidInput("need 0 <= k < n");
  if (nu <= 0) throw InvalidInput("nu must be positive");
  const auto dim = static_cast<std::size_t>(n);
  const auto kk = static_cast<std::size_t>(k);
  const PLMap JA = build_JA(k, n, nu, subdivisions);
  if (h_A) {
    if (!h_A->same_domain(JA)) throw InvalidInput("h_A must be defined on the triangulated J_A");
    if (h_A->ambient_dim() != dim) throw InvalidInput("h_A must map into R^n");
  }

  // Boundary of the (k+1)-cube; the last reference coordinate is t.
  const PLMap cube = freudenthal_cube(k + 1, subdivisions);
  const OrientedCycle sphere = boundary_cycle(cube);
  const Rational scale = 1 + nu;
  const Rational top = scale;

  // J_A vertex for the a-part of a cube vertex (top face of the cube is a
  // copy of the Freudenthal k-cube with the same vertex order).
  const std::size_t side = static_cast<std::size_t>(subdivisions) + 1;
  std::size_t top_stride = 1;
  for (std::size_t j = 0; j < kk; ++j) top_stride *= side;

  std::vector<Point> images;
  images.reserve(cube.images().size());
  for (VertexId v = 0; v < cube.images().size(); ++v) {
    const Point& ref = cube.image(v);
    std::vector<Rational> a(kk);
    bool on_wall = false;
    for (std::size_t i = 0; i < kk; ++i) {
      a[i] = ref[i] * scale;
      if (ref[i] == 1 || ref[i] == -1) on_wall = true;
    }
    const Rational t = ref[kk] * scale;
    const VertexId ja_vertex = v % top_stride;
    Point base = h_A ? h_A->image(ja_vertex) : lift(Point(a), dim);
    if (!on_wall && t == top) {
      images.push_back(std::move(base));
    } else {
      images.push_back(base + Point::basis(dim, kk) * Rational(3 * (t - 1 - nu)));
    }
  }
  return sphere.with_map(cube.with_images(std::move(images))).compacted();
}

OrientedCycle sphere_cycle(const FlatChartScene& scene) {
  validate(scene);
  const PLMap ball = freudenthal_cube(scene.n - scene.k, scene.disk_subdivisions);
  return boundary_cycle(ball).with_map(scene.disk_map);
}

ConditionT check_condition_T(const FlatChartScene& scene, const LinkingOptions& options) {
  validate(scene);
  ConditionT result;
  result.disk_in_J = true;
  for (const auto& p : scene.disk_map.images()) {
    if (!inside_J(p)) {
      result.disk_in_J = false;
      break;
    }
  }
  if (!result.disk_in_J) {
    result.failure = "disk image leaves J = [-1,1]^n";
    return result;
  }

  const OrientedCycle sphere = sphere_cycle(scene);
  const PLMap JA = build_JA(scene.k, scene.n, scene.nu, scene.ja_subdivisions);
  // Sphere vertices are disk vertices, so containment in J already holds.
  result.sphere_avoids_JA = !polyhedra_intersect(sphere.embedded(), JA.embedded_facets());
  if (!result.sphere_avoids_JA) {
    result.failure = "boundary sphere image meets J_A";
    return result;
  }

  const OrientedCycle plate = build_plate(scene.k, scene.n, scene.nu, nullptr, scene.ja_subdivisions);
  result.linking = linking_number(sphere, plate, options);
  result.kappa = result.linking->value;
  if (result.kappa == 0) result.failure = "linking coefficient of the boundary sphere with the plate is zero";
  return result;
}

CertifiedDelta certified_delta(const FlatChartScene& scene, const OrientedCycle& plate, const LinkingResult& kappa) {
  if (kappa.value == 0) throw InvalidInput("certified_delta requires a nonzero linking coefficient");
  const OrientedCycle sphere = sphere_cycle(scene);
  const PLMap JA = build_JA(scene.k, scene.n, scene.nu, scene.ja_subdivisions);

  CertifiedDelta out;
  out.margins.sphere_to_JA = polyhedra_distance(sphere.embedded(), JA.embedded_facets());
  out.margins.nu_half = scene.nu / 2;
  out.margins.separation = image_separation(sphere, plate);
  if (out.margins.sphere_to_JA <= 0 || out.margins.nu_half <= 0 || out.margins.separation <= 0) {
    throw InternalInconsistency("certified margin is not positive although Condition T holds");
  }
  Rational smallest = out.margins.sphere_to_JA;
  if (out.margins.nu_half < smallest) smallest = out.margins.nu_half;
  if (out.margins.separation < smallest) smallest = out.margins.separation;
  out.delta = smallest / 2;
  return out;
}

Certificate certify_transverse(const FlatChartScene& scene, const LinkingOptions& options) {
  validate(scene);
  Certificate cert;
  const ConditionT cond = check_condition_T(scene, options);
  cert.disk_in_J = cond.disk_in_J;
  cert.sphere_avoids_JA = cond.sphere_avoids_JA;
  cert.kappa = cond.kappa;
  cert.linking = cond.linking;
  if (!cond.holds()) {
    cert.verdict = Verdict::rejected;
    cert.reason = cond.failure;
    cert.delta = 0;
    return cert;
  }
  const OrientedCycle plate = build_plate(scene.k, scene.n, scene.nu, nullptr, scene.ja_subdivisions);
  const CertifiedDelta d = certified_delta(scene, plate, *cond.linking);
  cert.verdict = Verdict::certified;
  cert.delta = d.delta;
  cert.margins = d.margins;
  cert.reason = "boundary sphere links the plate with nonzero coefficient";
  return cert;
}

PerturbedCheck check_perturbed(const FlatChartScene& scene, const PLMap& h_A, const PLMap& h_B,
                               const LinkingOptions& options) {
  validate(scene);
  const PLMap JA = build_JA(scene.k, scene.n, scene.nu, scene.ja_subdivisions);
  if (!h_A.same_domain(JA)) throw InvalidInput("h_A must be defined on the triangulated J_A");
  if (!h_B.same_domain(scene.disk_map)) throw InvalidInput("h_B must be defined on the disk domain");

  PerturbedCheck out;
  out.images_intersect = images_intersect(h_A, h_B);
  const OrientedCycle plate = build_plate(scene.k, scene.n, scene.nu, &h_A, scene.ja_subdivisions);
  const OrientedCycle sphere = sphere_cycle(scene).with_map(h_B);
  if (image_separation(sphere, plate) > 0) out.kappa = linking_number(sphere, plate, options).value;
  return out;
}

}  // namespace c0t
