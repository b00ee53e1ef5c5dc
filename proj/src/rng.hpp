#pragma once

#include <cstdint>
#include <random>

namespace meecda {

// Seeded uniform stream. Values are derived from the raw 64-bit engine
// output instead of std distributions, so a given seed yields the same
// sequence on every standard library implementation.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace meecda
