#pragma once

#include <cmath>
#include <cstdint>

namespace pts::rng {

// SplitMix64 finalizer. All pipeline randomness flows through this so that
// seeded runs are byte-reproducible across platforms and thread counts;
// std::uniform_real_distribution makes no such guarantee.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Combine a seed with stream indices into an independent substream key.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = mix(seed ^ (0x9e3779b97f4a7c15ULL * (a + 1)));
  return mix(s ^ (0xd1b54a32d192ed03ULL * (b + 1)));
}

/// Counter-based stream: successive draws are mix(key + n).
class Stream {
 public:
  explicit Stream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Standard normal via Box-Muller (deterministic, no cached spare).
  double next_normal() {
    double u1 = next_unit();
    while (u1 <= 0.0) u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace pts::rng
