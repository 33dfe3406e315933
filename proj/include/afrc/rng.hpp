#pragma once

#include <cstdint>

namespace afrc {

// Default seed for every seedable entry point. Fixed (not time-based) so that
// bare invocations replay exactly.
inline constexpr std::uint64_t kDefaultSeed = 0x5afe5eed2024ull;

// Platform-stable 64-bit PRNG: xorshift64* (Marsaglia 2003 / Vigna 2016).
//
// State update and output, exactly:
//   x ^= x >> 12;
//   x ^= x << 25;
//   x ^= x >> 27;
//   output = x * 0x2545F4914F6CDD1D
//
// The raw seed is expanded through one splitmix64 finalizer step so that
// small seeds (0, 1, 2, ...) start from well-mixed state. A zero state is
// remapped to a fixed nonzero constant; xorshift has no zero orbit.
//
// Bounded draws use rejection below the largest multiple of n so they are
// unbiased and reproducible across platforms:
//   limit = 2^64 - (2^64 mod n); draw r until r < limit; return r mod n.
//
// Doubles take the top 53 bits: (x >> 11) * 2^-53, uniform in [0, 1).
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) {
    // splitmix64 finalizer (Steele, Lea, Flood 2014).
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z = z ^ (z >> 31);
    state_ = z != 0 ? z : 0x1ull;
  }

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1Dull;
  }

  // Unbiased value in [0, n). n must be nonzero.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = ~0ull - ~0ull % n;
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return r % n;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

 private:
  std::uint64_t state_;
};

}  // namespace afrc
