#pragma once

#include <cstdint>

namespace edqc {

// Deterministic counter-based stream (splitmix64). The sequence depends only
// on the seed, so streams derived per work item can be consumed in any order
// across workers without changing results.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1]; never returns 0.
  double next_positive_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
  }

  // Uniform on [0, bound); bound >= 1. Rejection sampling keeps it unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t r;
    do {
      r = next_u64() & mask;
    } while (r >= bound);
    return r;
  }

 private:
  std::uint64_t state_;
};

// Seed of an independent child stream (one per diffusion source, sample, ...).
inline std::uint64_t derive_stream(std::uint64_t base_seed, std::uint64_t stream_id) {
  std::uint64_t z = base_seed ^ (0x9E3779B97F4A7C15ull * (stream_id + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace edqc
