#pragma once

#include <cstdint>
#include <random>

namespace superholonomy {

using Rng = std::mt19937_64;

/// Uniform double in [lo, hi) built from the raw engine output, so that a
/// seed gives identical streams on every standard library.
inline double uniform(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

/// Seed of sample i in a sweep started from `seed`.
inline std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed ^ (index + 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace superholonomy
