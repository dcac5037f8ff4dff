#pragma once

#include <cstdint>

namespace cubiczeta {

// SplitMix64: the stable seeded generator used everywhere randomness is needed.
// Counter-keyed use (seed ^ golden-ratio mixing of an index) gives stateless,
// order-independent streams for parallel candidate generation.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // value in [0, n), n > 0; tiny modulo bias is acceptable (n is always small here)
  uint64_t below(uint64_t n) { return next() % n; }
};

inline uint64_t mix64(uint64_t a, uint64_t b) {
  SplitMix64 g(a ^ (b * 0x9e3779b97f4a7c15ULL + 0x165667b19e3779f9ULL));
  return g.next();
}

}  // namespace cubiczeta
