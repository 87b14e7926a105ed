#include "c0t/cli/cli.hpp"

#include "c0t/cli/corpus.hpp"
#include "c0t/cli/scene_io.hpp"
#include "c0t/cli/svg.hpp"
#include "c0t/errors.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace c0t::cli {

namespace {

struct Common {
  std::string input;
  std::string output = "json-pretty";
  std::string svg;
  std::string project;
  std::uint64_t seed = 1;
  int retry_budget = 64;
  /// Whether --seed was given explicitly (it then overrides the scene).
  bool seed_given = false;
};

int default_retry_budget() {
  const char* env = std::getenv(kRetryBudgetEnv);
  if (!env || !*env) return 64;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 100000) {
    throw InvalidInput(std::string(kRetryBudgetEnv) + " must be an integer in [1, 100000], got '" + env + "'");
  }
  return static_cast<int>(v);
}

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
  if (with_input) cmd->add_option("scene", c.input, "Scene file, or - for standard input")->required();
  cmd->add_option("--output", c.output, "Output format")->check(CLI::IsMember({"json", "json-pretty"}));
  cmd->add_option("--svg", c.svg, "Also render the scene and result to this SVG file");
  cmd->add_option("--project", c.project, "Projection for 3-D renderings: xy, xz, yz or oblique");
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--retry-budget", c.retry_budget, "Attempts for randomized searches")
      ->check(CLI::Range(1, 100000));
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput(path + ": cannot open file");
  ss << f.rdbuf();
  return ss.str();
}

std::string source_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

/// Prefixes schema errors with the file they came from.
template <typename F>
auto from_source(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    const std::string what = e.what();
    if (what.rfind("$", 0) == 0) throw InvalidInput(source_name(path) + ": " + what);
    throw;
  }
}

Projection projection_of(const Common& c) {
  return c.project.empty() ? Projection::none : parse_projection(c.project);
}

void emit(std::ostream& out, const Common& c, const Json& j) {
  out << (c.output == "json" ? j.dump() : j.dump(2)) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_certify(const Common& c, std::istream& in, std::ostream& out) {
  const std::string text = read_input(c.input, in);
  FlatChartScene scene = from_source(c.input, [&] {
    Json doc = parse_document(text, source_name(c.input));
    return read_certify_scene(doc);
  });
  LinkingOptions opts;
  opts.seed = c.seed;
  opts.retry_budget = c.retry_budget;
  const Certificate cert = certify_transverse(scene, opts);
  if (!c.svg.empty()) write_file(c.svg, render_certify(scene, cert, projection_of(c)));
  emit(out, c, certificate_json(scene, cert));
  return kExitVerdict;
}

int cmd_link(const Common& c, std::istream& in, std::ostream& out) {
  const std::string text = read_input(c.input, in);
  LinkScene scene = from_source(c.input, [&] { return read_link_scene(parse_document(text, source_name(c.input))); });
  LinkingOptions opts;
  opts.seed = (!c.seed_given && scene.seed) ? *scene.seed : c.seed;
  opts.retry_budget = c.retry_budget;
  const OrientedCycle& z1 = scene.pl.cycles.at(scene.first);
  const OrientedCycle& z2 = scene.pl.cycles.at(scene.second);
  const LinkingResult r = linking_number(z1, z2, opts);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "linking";
  j["pair"] = Json::array({scene.first, scene.second});
  const Json body = linking_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  if (!c.svg.empty()) write_file(c.svg, render_link(z1, z2, r, projection_of(c)));
  emit(out, c, j);
  return kExitVerdict;
}

struct ProbeArgs {
  std::string delta;
  std::size_t trials = 0;
  std::string strategy = "uniform";
  unsigned threads = 1;
};

int cmd_probe(const Common& c, const ProbeArgs& a, std::istream& in, std::ostream& out) {
  const std::string text = read_input(c.input, in);
  ProbeScene scene = from_source(c.input, [&] { return read_probe_scene(parse_document(text, source_name(c.input))); });
  std::optional<Rational> delta = scene.delta;
  if (!a.delta.empty()) delta = parse_rational(a.delta);
  if (!delta && scene.chart) {
    // Default for certify scenes: probe at the certified delta.
    LinkingOptions opts;
    opts.seed = c.seed;
    opts.retry_budget = c.retry_budget;
    const Certificate cert = certify_transverse(*scene.chart, opts);
    if (cert.verdict != Verdict::certified) {
      throw InvalidInput("--delta is required: the scene is not certified (" + cert.reason + ")");
    }
    delta = cert.delta;
  }
  if (!delta) throw InvalidInput("--delta is required (or a \"delta\" field in the scene)");
  const std::size_t trials = a.trials ? a.trials : scene.trials.value_or(1000);
  const ProbeReport r =
      probe_essential(scene.F, scene.G, *delta, trials, c.seed, parse_strategy(a.strategy), a.threads);
  if (!c.svg.empty()) write_file(c.svg, render_probe(scene.F, scene.G, r, projection_of(c)));
  emit(out, c, probe_json(r));
  return kExitVerdict;
}

int cmd_sakai(const Common& c, const std::string& squeeze_epsilon, std::istream& in, std::ostream& out) {
  const std::string text = read_input(c.input, in);
  SakaiScene scene = from_source(c.input, [&] { return read_sakai_scene(parse_document(text, source_name(c.input))); });
  std::optional<Rational> eps = scene.squeeze_epsilon;
  if (!squeeze_epsilon.empty()) {
    eps = parse_rational(squeeze_epsilon);
    if (*eps <= 0) throw InvalidInput("--squeeze-epsilon must be positive");
  }
  const SakaiReport report = sakai_check(scene.K, scene.L, scene.p, scene.radii);
  std::vector<std::optional<SqueezeResult>> squeezes(report.radii.size());
  if (eps) {
    for (std::size_t i = 0; i < report.radii.size(); ++i) {
      const RadiusVerdict& v = report.radii[i];
      if (v.K_spans && !v.transverse) squeezes[i] = squeeze_out(v.K_prime, v.L_prime, *eps, c.retry_budget);
    }
  }
  if (!c.svg.empty()) write_file(c.svg, render_sakai(scene, report, squeezes));
  emit(out, c, sakai_json(report, squeezes));
  return kExitVerdict;
}

int cmd_refute(const Common& c, std::istream& in, std::ostream& out) {
  const std::string text = read_input(c.input, in);
  RefuteScene scene =
      from_source(c.input, [&] { return read_refute_scene(parse_document(text, source_name(c.input))); });
  const std::uint64_t seed = (!c.seed_given && scene.seed) ? *scene.seed : c.seed;
  const RefutationWitness w = refute_essential(scene.A, scene.B, scene.delta, seed, c.retry_budget);
  if (!verify_witness(w, scene.A, scene.B)) throw InternalInconsistency("refutation witness failed re-verification");
  if (!c.svg.empty()) write_file(c.svg, render_refute(scene, w, projection_of(c)));
  emit(out, c, refutation_json(w));
  return kExitVerdict;
}

int cmd_dim(const Common& c, const std::string& epsilon, std::istream& in, std::ostream& out) {
  const std::string text = read_input(c.input, in);
  DimScene scene = from_source(c.input, [&] { return read_dim_scene(parse_document(text, source_name(c.input))); });
  if (!epsilon.empty()) scene.epsilon = parse_rational(epsilon);
  const Cover cover = scene.X.size() == 0 ? Cover{{}, scene.epsilon} : find_cover(scene.X, scene.epsilon);
  emit(out, c, dim_json(scene.X, scene.epsilon, cover));
  return kExitVerdict;
}

int cmd_examples(const Common& c, const std::string& name, std::ostream& out) {
  if (name.empty()) {
    Json list = Json::array();
    for (const auto& e : example_corpus()) {
      list.push_back(Json{{"name", e.name}, {"command", e.command}, {"description", e.description}});
    }
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "examples";
    j["examples"] = std::move(list);
    emit(out, c, j);
    return kExitVerdict;
  }
  emit(out, c, find_example(name).scene);
  return kExitVerdict;
}

int fail(std::ostream& out, std::ostream& err, const Common& c, const std::string& category,
         const std::string& message, int status) {
  err << "c0trans: " << category << ": " << message << "\n";
  emit(out, c, error_json(category, message));
  return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"c0trans: certify, refute and probe C0 transversality of piecewise-linear scenes"};
  app.require_subcommand(1);
  Common c;
  ProbeArgs probe;
  std::string squeeze_epsilon;
  std::string dim_epsilon;
  std::string example_name;

  try {
    c.retry_budget = default_retry_budget();
  } catch (const InvalidInput& e) {
    return fail(out, err, c, "invalid_input", e.what(), kExitInvalid);
  }

  auto* certify = app.add_subcommand("certify", "Check the linking certificate and compute a certified delta");
  add_common(certify, c);
  auto* link = app.add_subcommand("link", "Linking number of two cycles");
  add_common(link, c);
  auto* probe_cmd = app.add_subcommand("probe", "Search for separating perturbations");
  add_common(probe_cmd, c);
  probe_cmd->add_option("--delta", probe.delta, "Perturbation size (exact rational)");
  probe_cmd->add_option("--trials", probe.trials, "Number of trials")->check(CLI::PositiveNumber);
  probe_cmd->add_option("--strategy", probe.strategy, "uniform, boundary or directional")
      ->check(CLI::IsMember({"uniform", "boundary", "directional"}));
  probe_cmd->add_option("--threads", probe.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  auto* sakai = app.add_subcommand("sakai", "Disk-side transversality of two plane curves");
  add_common(sakai, c);
  sakai->add_option("--squeeze-epsilon", squeeze_epsilon, "Squeeze one-sided arcs off within this distance");
  auto* refute = app.add_subcommand("refute", "Dimension-based refutation of essential intersections");
  add_common(refute, c);
  auto* dim = app.add_subcommand("dim", "Covering-dimension bound of a finite metric space");
  add_common(dim, c);
  dim->add_option("--epsilon", dim_epsilon, "Cover scale (overrides the scene)");
  auto* examples = app.add_subcommand("examples", "List the bundled scenes or print one");
  add_common(examples, c, false);
  examples->add_option("--name", example_name, "Scene to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(out, err, c, "usage", e.what(), kExitInvalid);
  }
  c.seed_given = app.get_subcommands().front()->count("--seed") > 0;

  try {
    if (certify->parsed()) return cmd_certify(c, in, out);
    if (link->parsed()) return cmd_link(c, in, out);
    if (probe_cmd->parsed()) return cmd_probe(c, probe, in, out);
    if (sakai->parsed()) return cmd_sakai(c, squeeze_epsilon, in, out);
    if (refute->parsed()) return cmd_refute(c, in, out);
    if (dim->parsed()) return cmd_dim(c, dim_epsilon, in, out);
    if (examples->parsed()) return cmd_examples(c, example_name, out);
  } catch (const InvalidInput& e) {
    return fail(out, err, c, "invalid_input", e.what(), kExitInvalid);
  } catch (const RetryExhausted& e) {
    return fail(out, err, c, "retry_exhausted", e.what(), kExitInvalid);
  } catch (const InternalInconsistency& e) {
    return fail(out, err, c, "internal_inconsistency", e.what(), kExitInternal);
  } catch (const std::exception& e) {
    return fail(out, err, c, "internal_error", e.what(), kExitInternal);
  }
  return fail(out, err, c, "usage", "no subcommand", kExitInvalid);
}

}  // namespace c0t::cli
