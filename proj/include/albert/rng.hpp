#pragma once

#include <cstdint>

namespace e6 {

/// Counter-based generator: sample i of a seeded run gets its own stream,
/// so sampled checks are reproducible and independent of thread count.
class SampleRng {
 public:
  SampleRng(uint64_t seed, uint64_t counter) : state_(mix(seed ^ (counter * 0x9E3779B97F4A7C15ull))) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform in [0, n) by rejection.
  unsigned below(unsigned n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return static_cast<unsigned>(v % n);
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  uint64_t state_;
};

}  // namespace e6
