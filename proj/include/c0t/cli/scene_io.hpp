#pragma once

// JSON scene files and result documents.
//
// Every document carries "schema_version" (currently 1) and "kind". Exact
// scalars are written as strings ("p/q" or integers) and read from strings
// ("p/q", integers, decimals such as "-1.25" or "3e-2") or JSON integers.
// JSON floating-point numbers are rejected for exact fields. Unknown fields
// are rejected with their location, e.g. "$.A.cover.sets[2]".

#include "c0t/certify.hpp"
#include "c0t/linking.hpp"
#include "c0t/plcore.hpp"
#include "c0t/probe.hpp"
#include "c0t/refute.hpp"
#include "c0t/sakai2d.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace c0t::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parses text into JSON, checks schema_version, and returns the document.
/// Syntax errors report the byte offset in `source`.
Json parse_document(const std::string& text, const std::string& source);

/// The document's "kind".
std::string document_kind(const Json& doc);

/// Reads an object field by field; finish() rejects unread fields.
class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string where);

  const Json& required(const std::string& key);
  const Json* optional(const std::string& key);
  std::string path(const std::string& key) const { return where_ + "." + key; }
  const std::string& where() const { return where_; }
  void finish() const;

 private:
  const Json& j_;
  std::string where_;
  std::vector<std::string> seen_;
};

Rational read_rational(const Json& j, const std::string& where);
long read_integer(const Json& j, const std::string& where);
std::string read_string(const Json& j, const std::string& where);
/// Point with the given dimension (any dimension when dim is 0).
Point read_point(const Json& j, const std::string& where, std::size_t dim = 0);
std::vector<Point> read_points(const Json& j, const std::string& where, std::size_t dim = 0);

// ---------------------------------------------------------------------------
// Scenes

/// Complexes, maps and cycles shared by several commands. A complex's
/// vertex coordinates double as a map of the same name.
struct PlScene {
  std::size_t dim = 0;
  std::map<std::string, PLMap> maps;
  std::map<std::string, OrientedCycle> cycles;

  const PLMap& map(const std::string& name, const std::string& where) const;
  const OrientedCycle& cycle(const std::string& name, const std::string& where) const;
};

/// Reads "dim", "complexes", "maps" and "cycles" from `reader`.
PlScene read_pl_scene(ObjectReader& reader);

FlatChartScene read_certify_scene(const Json& doc);

struct LinkScene {
  PlScene pl;
  std::string first;
  std::string second;
  std::optional<std::uint64_t> seed;
};
LinkScene read_link_scene(const Json& doc);

struct ProbeScene {
  PLMap F;
  PLMap G;
  std::optional<Rational> delta;
  std::optional<std::size_t> trials;
  std::optional<FlatChartScene> chart;  // set when read from a certify scene
};
/// Accepts "probe" documents and "certify" documents (J_A against the disk).
ProbeScene read_probe_scene(const Json& doc);

struct SakaiScene {
  Polyline K;
  Polyline L;
  Point p;
  std::vector<Rational> radii;
  std::optional<Rational> squeeze_epsilon;
};
SakaiScene read_sakai_scene(const Json& doc);

struct RefuteScene {
  Rational delta;
  std::size_t n = 0;
  SampledMap A;
  SampledMap B;
  std::optional<std::uint64_t> seed;
};
RefuteScene read_refute_scene(const Json& doc);

struct DimScene {
  FiniteMetricSpace X;
  Rational epsilon;
};
DimScene read_dim_scene(const Json& doc);

// ---------------------------------------------------------------------------
// Results

/// Exact value as a string.
Json rational_json(const Rational& r);
/// Sets obj[key] (exact string) and obj[key + "_approx"] (double).
void put_rational(Json& obj, const std::string& key, const Rational& r);
Json point_json(const Point& p);
Json map_json(const PLMap& F);
Json polyline_json(const std::vector<Point>& pts);

Json certificate_json(const FlatChartScene& scene, const Certificate& cert);
Json linking_json(const LinkingResult& r);
Json probe_json(const ProbeReport& r);
Json sakai_json(const SakaiReport& r, const std::vector<std::optional<SqueezeResult>>& squeezes);
Json refutation_json(const RefutationWitness& w);
Json dim_json(const FiniteMetricSpace& X, const Rational& epsilon, const Cover& cover);

/// Error document written alongside a nonzero exit status.
Json error_json(const std::string& category, const std::string& message);

}  // namespace c0t::cli
