#pragma once

#include <cstdint>
#include <random>

namespace diffcat {

/// Deterministic generator. The integer and real mappings are written out
/// here instead of using <random> distributions so that draws are identical
/// across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform in [lo, hi).
  double uniform_real(double lo, double hi);
  bool coin() { return (next() >> 63) != 0; }

private:
  std::mt19937_64 engine_;
};

/// Sub-seed for batch `index` of a run seeded with `seed` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace diffcat
