#pragma once

#include "c0t/rational.hpp"

#include <cstdint>
#include <random>

namespace c0t {

/// Mixes a seed with a stream index into an independent 64-bit seed.
/// Used to derive per-trial substreams so results do not depend on the
/// order in which trials are executed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded generator with platform-independent integer draws (the standard
/// distributions are implementation-defined, mt19937_64 itself is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform draw from the grid {lo + (hi - lo) * j / 2^bits : 0 <= j <= 2^bits}.
  Rational uniform_grid(const Rational& lo, const Rational& hi, int bits = 20);

  /// Uniform double in [0, 1).
  double uniform01();

 private:
  std::mt19937_64 engine_;
};

}  // namespace c0t
