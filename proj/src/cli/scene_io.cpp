#include "c0t/cli/scene_io.hpp"

#include "c0t/errors.hpp"

#include <algorithm>

namespace c0t::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message) {
  throw InvalidInput(where + ": " + message);
}

std::string index_path(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::size_t read_size(const Json& j, const std::string& where) {
  const long v = read_integer(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::uint64_t read_seed(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  return static_cast<std::uint64_t>(read_size(j, where));
}

std::vector<std::size_t> read_index_list(const Json& j, const std::string& where) {
  require_array(j, where);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_size(j[i], index_path(where, i)));
  return out;
}

std::vector<Simplex> read_simplices(const Json& j, const std::string& where, std::size_t vertex_count) {
  require_array(j, where);
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = index_path(where, i);
    Simplex s{read_index_list(j[i], at)};
    if (s.vertices.empty()) fail(at, "empty simplex");
    for (VertexId v : s.vertices) {
      if (v >= vertex_count) fail(at, "vertex index " + std::to_string(v) + " out of range");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<Rational>> read_matrix(const Json& j, const std::string& where) {
  require_array(j, where);
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row = index_path(where, i);
    require_array(j[i], row);
    if (j[i].size() != j.size()) fail(row, "distance matrix must be square");
    std::vector<Rational> r;
    for (std::size_t c = 0; c < j[i].size(); ++c) r.push_back(read_rational(j[i][c], index_path(row, c)));
    out.push_back(std::move(r));
  }
  return out;
}

template <typename F>
auto rethrow_at(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    const std::string what = e.what();
    if (what.rfind("$", 0) == 0) throw;
    fail(where, what);
  }
}

void check_header(ObjectReader& r, const std::string& kind) {
  r.required("schema_version");
  const std::string k = read_string(r.required("kind"), r.path("kind"));
  if (k != kind) fail(r.path("kind"), "expected \"" + kind + "\", got \"" + k + "\"");
}

SampledMap read_sampled_map(const Json& j, const std::string& where, std::size_t n) {
  ObjectReader r(j, where);
  const Json* points = r.optional("points");
  const Json* matrix = r.optional("dist_matrix");
  const Json* images = r.optional("images");
  if (!points && !matrix) fail(where, "one of \"points\" or \"dist_matrix\" is required");
  if (points && matrix) fail(where, "\"points\" and \"dist_matrix\" are mutually exclusive");
  SampledMap out;
  std::optional<std::vector<Point>> pts;
  if (points) {
    pts = read_points(*points, r.path("points"));
    out.space = rethrow_at(r.path("points"), [&] { return FiniteMetricSpace::from_points(*pts); });
  } else {
    auto m = read_matrix(*matrix, r.path("dist_matrix"));
    out.space = rethrow_at(r.path("dist_matrix"), [&] { return FiniteMetricSpace::from_matrix(std::move(m)); });
  }
  if (images) {
    out.images = read_points(*images, r.path("images"), n);
  } else if (pts && !pts->empty() && (*pts)[0].dim() == n) {
    out.images = *pts;
  } else {
    fail(where, "\"images\" is required unless the points already lie in R^n");
  }
  if (out.images.size() != out.space.size()) fail(r.path("images"), "expected one image per sample point");

  ObjectReader c(r.required("cover"), r.path("cover"));
  out.cover.epsilon = read_rational(c.required("epsilon"), c.path("epsilon"));
  if (const Json* sets = c.optional("sets")) {
    require_array(*sets, c.path("sets"));
    for (std::size_t i = 0; i < sets->size(); ++i) {
      out.cover.sets.push_back(read_index_list((*sets)[i], index_path(c.path("sets"), i)));
    }
    rethrow_at(c.path("sets"), [&] { validate_cover(out.space, out.cover); });
  } else {
    out.cover = rethrow_at(c.path("epsilon"), [&] { return find_cover(out.space, out.cover.epsilon); });
  }
  c.finish();
  r.finish();
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Json parse_document(const std::string& text, const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("$", "expected a JSON object");
  if (!doc.contains("schema_version")) fail("$", "missing \"schema_version\"");
  const long version = read_integer(doc["schema_version"], "$.schema_version");
  if (version != kSchemaVersion) {
    fail("$.schema_version", "unsupported version " + std::to_string(version) + " (expected " +
                                 std::to_string(kSchemaVersion) + ")");
  }
  if (!doc.contains("kind")) fail("$", "missing \"kind\"");
  return doc;
}

std::string document_kind(const Json& doc) { return read_string(doc.at("kind"), "$.kind"); }

ObjectReader::ObjectReader(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
  if (!j_.is_object()) fail(where_, "expected an object");
}

const Json& ObjectReader::required(const std::string& key) {
  const Json* v = optional(key);
  if (!v) fail(where_, "missing required field \"" + key + "\"");
  return *v;
}

const Json* ObjectReader::optional(const std::string& key) {
  seen_.push_back(key);
  auto it = j_.find(key);
  return it == j_.end() ? nullptr : &*it;
}

void ObjectReader::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it) {
    if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end()) {
      fail(where_ + "." + it.key(), "unknown field");
    }
  }
}

Rational read_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_number_float()) fail(where, "floating-point numbers are not exact; write the value as a string");
  if (!j.is_string()) fail(where, "expected a rational (string \"p/q\", decimal string or integer)");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
}

long read_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const Rational r = read_rational(j, where);
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  }
  fail(where, "expected an integer");
}

std::string read_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Point read_point(const Json& j, const std::string& where, std::size_t dim) {
  require_array(j, where);
  if (dim != 0 && j.size() != dim) {
    fail(where, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  }
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(read_rational(j[i], index_path(where, i)));
  return Point(std::move(c));
}

std::vector<Point> read_points(const Json& j, const std::string& where, std::size_t dim) {
  require_array(j, where);
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_point(j[i], index_path(where, i), dim));
    if (dim == 0 && out.back().dim() != out.front().dim()) fail(index_path(where, i), "inconsistent dimension");
  }
  return out;
}

// ---------------------------------------------------------------------------

const PLMap& PlScene::map(const std::string& name, const std::string& where) const {
  auto it = maps.find(name);
  if (it == maps.end()) fail(where, "no map or complex named \"" + name + "\"");
  return it->second;
}

const OrientedCycle& PlScene::cycle(const std::string& name, const std::string& where) const {
  auto it = cycles.find(name);
  if (it == cycles.end()) fail(where, "no cycle named \"" + name + "\"");
  return it->second;
}

PlScene read_pl_scene(ObjectReader& reader) {
  PlScene scene;
  const long dim = read_integer(reader.required("dim"), reader.path("dim"));
  if (dim < 1) fail(reader.path("dim"), "dimension must be positive");
  scene.dim = static_cast<std::size_t>(dim);

  std::map<std::string, std::shared_ptr<const SimplicialComplex>> complexes;
  if (const Json* cs = reader.optional("complexes")) {
    const std::string base = reader.path("complexes");
    require_array(*cs, base);
    for (std::size_t i = 0; i < cs->size(); ++i) {
      const std::string at = index_path(base, i);
      ObjectReader r((*cs)[i], at);
      const std::string name = read_string(r.required("name"), r.path("name"));
      if (complexes.count(name)) fail(r.path("name"), "duplicate complex \"" + name + "\"");
      auto vertices = read_points(r.required("vertices"), r.path("vertices"), scene.dim);
      auto simplices = read_simplices(r.required("simplices"), r.path("simplices"), vertices.size());
      r.finish();
      auto K = rethrow_at(at, [&] {
        return std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(vertices.size(), simplices));
      });
      complexes[name] = K;
      scene.maps[name] = PLMap(K, std::move(vertices));
    }
  }
  if (const Json* ms = reader.optional("maps")) {
    const std::string base = reader.path("maps");
    require_array(*ms, base);
    for (std::size_t i = 0; i < ms->size(); ++i) {
      ObjectReader r((*ms)[i], index_path(base, i));
      const std::string name = read_string(r.required("name"), r.path("name"));
      if (scene.maps.count(name)) fail(r.path("name"), "duplicate map \"" + name + "\"");
      const std::string domain = read_string(r.required("domain"), r.path("domain"));
      auto it = complexes.find(domain);
      if (it == complexes.end()) fail(r.path("domain"), "no complex named \"" + domain + "\"");
      auto images = read_points(r.required("images"), r.path("images"), scene.dim);
      if (images.size() != it->second->vertex_count()) {
        fail(r.path("images"), "expected " + std::to_string(it->second->vertex_count()) + " images");
      }
      r.finish();
      scene.maps[name] = PLMap(it->second, std::move(images));
    }
  }
  if (const Json* cy = reader.optional("cycles")) {
    const std::string base = reader.path("cycles");
    require_array(*cy, base);
    for (std::size_t i = 0; i < cy->size(); ++i) {
      const std::string at = index_path(base, i);
      ObjectReader r((*cy)[i], at);
      const std::string name = read_string(r.required("name"), r.path("name"));
      if (scene.cycles.count(name)) fail(r.path("name"), "duplicate cycle \"" + name + "\"");
      if (const Json* poly = r.optional("polygon")) {
        auto vertices = read_points(*poly, r.path("polygon"), scene.dim);
        r.finish();
        scene.cycles.emplace(name, rethrow_at(at, [&] { return closed_polygon(std::move(vertices)); }));
        continue;
      }
      const std::string map_name = read_string(r.required("map"), r.path("map"));
      const PLMap& F = scene.map(map_name, r.path("map"));
      auto facets = read_simplices(r.required("facets"), r.path("facets"), F.domain().vertex_count());
      if (facets.empty()) fail(r.path("facets"), "a cycle needs at least one facet");
      std::vector<int> signs(facets.size(), 1);
      if (const Json* sj = r.optional("signs")) {
        if (require_array(*sj, r.path("signs")).size() != facets.size()) {
          fail(r.path("signs"), "expected one sign per facet");
        }
        for (std::size_t f = 0; f < facets.size(); ++f) {
          const long s = read_integer((*sj)[f], index_path(r.path("signs"), f));
          if (s != 1 && s != -1) fail(index_path(r.path("signs"), f), "sign must be 1 or -1");
          signs[f] = static_cast<int>(s);
        }
      }
      r.finish();
      std::vector<OrientedFacet> chain;
      for (std::size_t f = 0; f < facets.size(); ++f) chain.push_back({facets[f], signs[f]});
      const int cycle_dim = facets.front().dim();
      scene.cycles.emplace(name, rethrow_at(at, [&] { return OrientedCycle(F, std::move(chain), cycle_dim); }));
    }
  }
  return scene;
}

FlatChartScene read_certify_scene(const Json& doc) {
  ObjectReader r(doc, "$");
  check_header(r, "certify");
  FlatChartScene scene;
  scene.n = static_cast<int>(read_integer(r.required("n"), r.path("n")));
  scene.k = static_cast<int>(read_integer(r.required("k"), r.path("k")));
  if (const Json* l = r.optional("l")) scene.l = static_cast<int>(read_integer(*l, r.path("l")));
  scene.nu = read_rational(r.required("nu"), r.path("nu"));
  scene.disk_subdivisions = static_cast<int>(read_integer(r.required("disk_subdivisions"), r.path("disk_subdivisions")));
  if (const Json* s = r.optional("ja_subdivisions")) {
    scene.ja_subdivisions = static_cast<int>(read_integer(*s, r.path("ja_subdivisions")));
  }
  if (const Json* note = r.optional("chart_note")) scene.chart_note = read_string(*note, r.path("chart_note"));
  if (scene.n < 1 || scene.n > 6) fail(r.path("n"), "n must be between 1 and 6");
  if (scene.k < 0 || scene.k >= scene.n) fail(r.path("k"), "k must satisfy 0 <= k < n");
  if (scene.disk_subdivisions < 1 || scene.disk_subdivisions > 64) {
    fail(r.path("disk_subdivisions"), "must be between 1 and 64");
  }
  if (scene.ja_subdivisions < 1 || scene.ja_subdivisions > 64) fail(r.path("ja_subdivisions"), "must be between 1 and 64");
  auto images = read_points(r.required("disk_images"), r.path("disk_images"), static_cast<std::size_t>(scene.n));
  r.finish();
  PLMap cube = freudenthal_cube(scene.n - scene.k, scene.disk_subdivisions);
  if (images.size() != cube.domain().vertex_count()) {
    fail("$.disk_images", "expected " + std::to_string(cube.domain().vertex_count()) +
                              " images (one per vertex of the subdivided disk, in vertex-id order)");
  }
  scene.disk_map = cube.with_images(std::move(images));
  rethrow_at("$", [&] { validate(scene); });
  return scene;
}

LinkScene read_link_scene(const Json& doc) {
  ObjectReader r(doc, "$");
  check_header(r, "link");
  LinkScene out;
  out.pl = read_pl_scene(r);
  const Json& pair = require_array(r.required("pair"), r.path("pair"));
  if (pair.size() != 2) fail(r.path("pair"), "expected two cycle names");
  out.first = read_string(pair[0], r.path("pair") + "[0]");
  out.second = read_string(pair[1], r.path("pair") + "[1]");
  out.pl.cycle(out.first, r.path("pair") + "[0]");
  out.pl.cycle(out.second, r.path("pair") + "[1]");
  if (const Json* s = r.optional("seed")) out.seed = read_seed(*s, r.path("seed"));
  r.finish();
  return out;
}

ProbeScene read_probe_scene(const Json& doc) {
  ProbeScene out;
  if (document_kind(doc) == "certify") {
    FlatChartScene scene = read_certify_scene(doc);
    out.F = build_JA(scene.k, scene.n, scene.nu, scene.ja_subdivisions);
    out.G = scene.disk_map;
    out.chart = std::move(scene);
    return out;
  }
  ObjectReader r(doc, "$");
  check_header(r, "probe");
  PlScene pl = read_pl_scene(r);
  out.F = pl.map(read_string(r.required("F"), r.path("F")), r.path("F"));
  out.G = pl.map(read_string(r.required("G"), r.path("G")), r.path("G"));
  if (const Json* d = r.optional("delta")) out.delta = read_rational(*d, r.path("delta"));
  if (const Json* t = r.optional("trials")) out.trials = read_size(*t, r.path("trials"));
  r.finish();
  return out;
}

SakaiScene read_sakai_scene(const Json& doc) {
  ObjectReader r(doc, "$");
  check_header(r, "sakai");
  SakaiScene out;
  out.K.vertices = read_points(r.required("K"), r.path("K"), 2);
  out.L.vertices = read_points(r.required("L"), r.path("L"), 2);
  rethrow_at(r.path("K"), [&] { validate(out.K); });
  rethrow_at(r.path("L"), [&] { validate(out.L); });
  out.p = read_point(r.required("p"), r.path("p"), 2);
  const Json& radii = require_array(r.required("radii"), r.path("radii"));
  if (radii.empty()) fail(r.path("radii"), "at least one radius is required");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    out.radii.push_back(read_rational(radii[i], index_path(r.path("radii"), i)));
    if (out.radii.back() <= 0) fail(index_path(r.path("radii"), i), "radius must be positive");
  }
  if (const Json* e = r.optional("squeeze_epsilon")) {
    out.squeeze_epsilon = read_rational(*e, r.path("squeeze_epsilon"));
    if (*out.squeeze_epsilon <= 0) fail(r.path("squeeze_epsilon"), "must be positive");
  }
  r.finish();
  return out;
}

RefuteScene read_refute_scene(const Json& doc) {
  ObjectReader r(doc, "$");
  check_header(r, "refute");
  RefuteScene out;
  const long n = read_integer(r.required("n"), r.path("n"));
  if (n < 1) fail(r.path("n"), "n must be positive");
  out.n = static_cast<std::size_t>(n);
  out.delta = read_rational(r.required("delta"), r.path("delta"));
  if (out.delta <= 0) fail(r.path("delta"), "delta must be positive");
  out.A = read_sampled_map(r.required("A"), r.path("A"), out.n);
  out.B = read_sampled_map(r.required("B"), r.path("B"), out.n);
  if (const Json* s = r.optional("seed")) out.seed = read_seed(*s, r.path("seed"));
  r.finish();
  return out;
}

DimScene read_dim_scene(const Json& doc) {
  ObjectReader r(doc, "$");
  check_header(r, "dim");
  DimScene out;
  const Json* points = r.optional("points");
  const Json* matrix = r.optional("dist_matrix");
  if (!points == !matrix) fail("$", "exactly one of \"points\" or \"dist_matrix\" is required");
  if (points) {
    auto pts = read_points(*points, r.path("points"));
    out.X = rethrow_at(r.path("points"), [&] { return FiniteMetricSpace::from_points(pts); });
  } else {
    auto m = read_matrix(*matrix, r.path("dist_matrix"));
    out.X = rethrow_at(r.path("dist_matrix"), [&] { return FiniteMetricSpace::from_matrix(std::move(m)); });
  }
  out.epsilon = read_rational(r.required("epsilon"), r.path("epsilon"));
  r.finish();
  return out;
}

// ---------------------------------------------------------------------------

Json rational_json(const Rational& r) { return to_string(r); }

void put_rational(Json& obj, const std::string& key, const Rational& r) {
  obj[key] = rational_json(r);
  obj[key + "_approx"] = to_double(r);
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(rational_json(c));
  return a;
}

Json map_json(const PLMap& F) {
  Json j;
  j["vertex_count"] = F.domain().vertex_count();
  Json facets = Json::array();
  for (const auto& s : F.domain().facets()) facets.push_back(s.vertices);
  j["simplices"] = std::move(facets);
  Json images = Json::array();
  for (const auto& p : F.images()) images.push_back(point_json(p));
  j["images"] = std::move(images);
  return j;
}

Json polyline_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

Json linking_json(const LinkingResult& r) {
  Json j;
  j["value"] = r.value;
  put_rational(j, "separation", r.separation);
  put_rational(j, "stability_radius", r.stability_radius);
  j["apex"] = point_json(r.apex);
  j["apex_attempts"] = r.apex_attempts;
  return j;
}

Json certificate_json(const FlatChartScene& scene, const Certificate& cert) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "certificate";
  j["verdict"] = cert.verdict == Verdict::certified ? "certified" : "rejected";
  j["reason"] = cert.reason;
  j["kappa"] = cert.kappa;
  put_rational(j, "delta", cert.delta);
  if (cert.margins) {
    Json m;
    put_rational(m, "sphere_to_JA", cert.margins->sphere_to_JA);
    put_rational(m, "nu_half", cert.margins->nu_half);
    put_rational(m, "separation", cert.margins->separation);
    j["margins"] = std::move(m);
  } else {
    j["margins"] = nullptr;
  }
  j["disk_in_J"] = cert.disk_in_J;
  j["sphere_avoids_JA"] = cert.sphere_avoids_JA;
  j["linking"] = cert.linking ? linking_json(*cert.linking) : Json(nullptr);
  Json s;
  s["n"] = scene.n;
  s["k"] = scene.k;
  if (scene.l) s["l"] = *scene.l;
  put_rational(s, "nu", scene.nu);
  s["disk_subdivisions"] = scene.disk_subdivisions;
  s["ja_subdivisions"] = scene.ja_subdivisions;
  j["scene"] = std::move(s);
  j["chart_note"] = scene.chart_note;
  return j;
}

Json probe_json(const ProbeReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "probe";
  j["verdict"] = r.witness ? "refuted" : "no_witness";
  j["summary"] = r.summary();
  j["trials"] = r.trials;
  j["intersecting"] = r.intersecting;
  put_rational(j, "delta", r.delta);
  j["seed"] = r.seed;
  j["strategy"] = to_string(r.strategy);
  if (r.witness) {
    Json w;
    w["trial"] = r.witness->trial;
    put_rational(w, "dist_F", r.witness->dist_F);
    put_rational(w, "dist_G", r.witness->dist_G);
    w["F_tilde"] = map_json(r.witness->F_tilde);
    w["G_tilde"] = map_json(r.witness->G_tilde);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json sakai_json(const SakaiReport& r, const std::vector<std::optional<SqueezeResult>>& squeezes) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "sakai";
  j["transverse_all"] = r.transverse_all;
  Json radii = Json::array();
  for (std::size_t i = 0; i < r.radii.size(); ++i) {
    const RadiusVerdict& v = r.radii[i];
    Json e;
    put_rational(e, "radius", v.radius);
    e["K_spans"] = v.K_spans;
    e["meets_plus"] = v.meets_plus;
    e["meets_minus"] = v.meets_minus;
    e["transverse"] = v.transverse;
    Json changes = Json::array();
    for (const auto& c : v.side_changes) {
      Json cj;
      cj["location"] = point_json(c.location);
      cj["location_approx"] = to_doubles(c.location);
      cj["from"] = to_string(c.from);
      cj["to"] = to_string(c.to);
      changes.push_back(std::move(cj));
    }
    e["side_changes"] = std::move(changes);
    if (v.nearest_change) {
      e["nearest_change"] = point_json(*v.nearest_change);
      e["nearest_change_approx"] = to_doubles(*v.nearest_change);
    } else {
      e["nearest_change"] = nullptr;
    }
    e["note"] = v.note;
    e["K_prime"] = polyline_json(v.K_prime.vertices);
    e["L_prime"] = polyline_json(v.L_prime.vertices);
    if (i < squeezes.size() && squeezes[i]) {
      const SqueezeResult& s = *squeezes[i];
      Json sj;
      sj["target"] = to_string(s.target);
      put_rational(sj, "eta", s.eta);
      put_rational(sj, "norm", s.norm);
      sj["original"] = polyline_json(s.original.images());
      sj["pushed"] = polyline_json(s.pushed.images());
      e["squeeze"] = std::move(sj);
    }
    radii.push_back(std::move(e));
  }
  j["radii"] = std::move(radii);
  return j;
}

Json refutation_json(const RefutationWitness& w) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "refutation";
  j["verdict"] = "refuted";
  put_rational(j, "delta_used", w.delta_used);
  j["v"] = point_json(w.v);
  put_rational(j, "dist_f", w.dist_f);
  put_rational(j, "dist_g", w.dist_g);
  j["f_tilde"] = map_json(w.f_tilde);
  j["g_tilde"] = map_json(w.g_tilde);
  j["f_dim"] = w.f_tilde.domain().dim();
  j["g_dim"] = w.g_tilde.domain().dim();
  return j;
}

Json dim_json(const FiniteMetricSpace& X, const Rational& epsilon, const Cover& cover) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "dim";
  j["points"] = X.size();
  put_rational(j, "epsilon", epsilon);
  put_rational(j, "resolution", X.resolution());
  const int m = multiplicity(cover, X.size());
  j["multiplicity"] = m;
  j["dimension_bound"] = X.size() == 0 ? -1 : m - 1;
  j["cover"] = cover.sets;
  return j;
}

Json error_json(const std::string& category, const std::string& message) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "error";
  j["error"] = category;
  j["message"] = message;
  return j;
}

}  // namespace c0t::cli
