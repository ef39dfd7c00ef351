#pragma once

#include <cstdint>

namespace warpmech {

// splitmix64. Every sampled point in checks and tests flows through this
// generator so that a fixed seed reproduces results bit-for-bit anywhere.
struct SplitMix64 {
  std::uint64_t state = 0x853c49e6748fea9bULL;

  explicit SplitMix64(std::uint64_t seed = 0x853c49e6748fea9bULL) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace warpmech
