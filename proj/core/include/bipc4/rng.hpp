#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace bipc4 {

/// Deterministic random stream with portable output.
///
/// std::mt19937_64's raw output sequence is fully specified by the standard,
/// so we use it as the engine but avoid the standard distributions (whose
/// mappings are implementation-defined). The two mappings below are fixed
/// here and produce identical draws on every platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) using the top 53 bits.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) via masked rejection; bound must be >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
      std::uint64_t v = engine_() & mask;
      if (v < bound) return v;
    }
  }

  /// Decorrelated seed for the index-th sub-stream of a base seed.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace bipc4
