#pragma once

#include <cstdint>

namespace rmx {

// Deterministic 64-bit generator (splitmix64). Used everywhere instead of
// std:: distributions so that reports are bit-identical across standard
// library implementations for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [a,b)
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Sub-generator with a decorrelated seed; lets suites hand out one
  // independent stream per sample index so results do not depend on
  // evaluation order.
  Rng fork(std::uint64_t tag) const {
    Rng mix(state_ ^ (0xd1b54a32d192ed03ULL * (tag + 1)));
    mix.next_u64();
    return mix;
  }

 private:
  std::uint64_t state_;
};

// FNV-1a; stable across platforms and standard libraries (std::hash is not).
inline std::uint64_t stable_hash(const char* s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (; *s; ++s) {
    h ^= static_cast<unsigned char>(*s);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace rmx
