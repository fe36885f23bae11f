#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace vlte {

// splitmix64 output mixer; also the core of the documented PRF and of
// seed derivation (docs/wire-format.md §5, §8).
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Counter-based split: outcomes depend only on (root, tag, counter),
// never on draw order elsewhere in the run.
inline uint64_t derive_seed(uint64_t root, std::string_view tag, uint64_t counter) {
  return mix64(root ^ fnv1a64(tag) ^ (counter * kGamma));
}

// Deterministic generator used everywhere instead of <random> engines,
// so frozen golden values do not depend on the standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += kGamma;
    return mix64(state_);
  }

  // Uniform in [0, 1) from the top 53 bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection-free scaling; bound > 0.
  uint64_t next_below(uint64_t bound) {
    return static_cast<uint64_t>(next_double() * static_cast<double>(bound));
  }

  char next_digit() { return static_cast<char>('0' + next_below(10)); }

  double next_gaussian(double mean, double sigma) {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 < 1e-300) u1 = 1e-300;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  uint64_t state_;
};

}  // namespace vlte
