#include "c0t/probe.hpp"

#include "c0t/errors.hpp"
#include "c0t/random.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace c0t {

namespace {

constexpr int kGridBits = 16;
constexpr std::int64_t kGridTop = (std::int64_t{1} << kGridBits) - 1;

Rational grid_value(const Rational& delta, std::int64_t m) {
  return delta * ratio(static_cast<long>(m), std::int64_t{1} << kGridBits);
}

Point random_offset(Rng& rng, std::size_t dim, const Rational& delta, Strategy strategy) {
  std::vector<Rational> c(dim);
  for (std::size_t i = 0; i < dim; ++i) c[i] = grid_value(delta, rng.uniform_int(-kGridTop, kGridTop));
  if (strategy == Strategy::boundary && dim > 0) {
    const auto axis = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(dim) - 1));
    c[axis] = grid_value(delta, rng.uniform_int(0, 1) ? kGridTop : -kGridTop);
  }
  return Point(std::move(c));
}

PLMap perturb(const PLMap& F, const Rational& delta, Rng& rng, Strategy strategy) {
  if (delta == 0) return F;
  const std::size_t dim = F.ambient_dim();
  std::vector<Point> images;
  images.reserve(F.images().size());
  if (strategy == Strategy::directional) {
    // A boundary draw has one coordinate at the edge of the grid, so the
    // translation has Chebyshev norm just below delta.
    Point d = random_offset(rng, dim, delta, Strategy::boundary);
    for (const auto& p : F.images()) images.push_back(p + d);
    return F.with_images(std::move(images));
  }
  for (const auto& p : F.images()) images.push_back(p + random_offset(rng, dim, delta, strategy));
  return F.with_images(std::move(images));
}

struct TrialOutcome {
  bool intersects = true;
  std::optional<ProbeWitness> witness;
};

TrialOutcome run_trial(const PLMap& F, const PLMap& G, const Rational& delta, std::uint64_t seed, std::size_t t,
                       Strategy strategy, bool keep_witness) {
  Rng rng(derive_seed(seed, t));
  PLMap Ft = perturb(F, delta, rng, strategy);
  PLMap Gt = perturb(G, delta, rng, strategy);
  TrialOutcome out;
  out.intersects = images_intersect(Ft, Gt);
  if (!out.intersects && keep_witness) {
    ProbeWitness w;
    w.trial = t;
    w.dist_F = c0_distance(F, Ft);
    w.dist_G = c0_distance(G, Gt);
    w.F_tilde = std::move(Ft);
    w.G_tilde = std::move(Gt);
    out.witness = std::move(w);
  }
  return out;
}

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::uniform:
      return "uniform";
    case Strategy::boundary:
      return "boundary";
    case Strategy::directional:
      return "directional";
  }
  return "uniform";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "uniform") return Strategy::uniform;
  if (name == "boundary") return Strategy::boundary;
  if (name == "directional") return Strategy::directional;
  throw InvalidInput("unknown strategy '" + name + "' (expected uniform, boundary or directional)");
}

PLMap random_perturbation(const PLMap& F, const Rational& delta, std::uint64_t rng_seed, Strategy strategy) {
  if (delta < 0) throw InvalidInput("delta must be nonnegative");
  Rng rng(rng_seed);
  return perturb(F, delta, rng, strategy);
}

std::string ProbeReport::summary() const {
  if (witness) return "refuted (witness)";
  return "no witness found in " + std::to_string(trials) + " trials";
}

bool check_witness(const PLMap& F, const PLMap& G, const Rational& delta, const PLMap& F_tilde,
                   const PLMap& G_tilde) {
  if (!F.same_domain(F_tilde) || !G.same_domain(G_tilde)) return false;
  if (!(c0_distance(F, F_tilde) < delta) && !(delta == 0 && c0_distance(F, F_tilde) == 0)) return false;
  if (!(c0_distance(G, G_tilde) < delta) && !(delta == 0 && c0_distance(G, G_tilde) == 0)) return false;
  return !images_intersect(F_tilde, G_tilde);
}

ProbeReport probe_essential(const PLMap& F, const PLMap& G, const Rational& delta, std::size_t trials,
                            std::uint64_t rng_seed, Strategy strategy, unsigned threads) {
  if (F.ambient_dim() != G.ambient_dim()) throw InvalidInput("maps live in different ambient spaces");
  if (delta < 0) throw InvalidInput("delta must be nonnegative");
  ProbeReport report;
  report.trials = trials;
  report.delta = delta;
  report.seed = rng_seed;
  report.strategy = strategy;

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  std::vector<std::size_t> intersecting(threads, 0);
  std::vector<std::optional<ProbeWitness>> first(threads);
  auto worker = [&](unsigned id) {
    // Strided assignment; each worker keeps its lowest-index witness.
    for (std::size_t t = id; t < trials; t += threads) {
      TrialOutcome o = run_trial(F, G, delta, rng_seed, t, strategy, !first[id].has_value());
      if (o.intersects) {
        ++intersecting[id];
      } else if (o.witness) {
        first[id] = std::move(o.witness);
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }
  for (unsigned id = 0; id < threads; ++id) {
    report.intersecting += intersecting[id];
    if (first[id] && (!report.witness || first[id]->trial < report.witness->trial)) report.witness = std::move(first[id]);
  }
  if (report.witness && !check_witness(F, G, delta, report.witness->F_tilde, report.witness->G_tilde)) {
    throw InternalInconsistency("probe witness failed verification");
  }
  return report;
}

}  // namespace c0t
