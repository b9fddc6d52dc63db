#pragma once

#include <cstdint>
#include <random>

namespace recgame {

// Deterministic uniform source. mt19937_64 has a standard-specified output
// sequence; the bit-to-value conversions below are spelled out explicitly
// (instead of std::uniform_*_distribution, whose algorithms are
// implementation-defined) so that a given seed produces identical streams on
// every toolchain.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : eng_(seed) {}

  // Uniform double in the open interval (0, 1).
  double next_unit() {
    double x;
    do {
      x = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    } while (x == 0.0);
    return x;
  }

  // Uniform integer in [0, n). Rejection keeps the draw unbiased.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform integer in [lo, hi] inclusive.
  long next_between(long lo, long hi) {
    return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Derives an independent, reproducible stream (used to give each parallel
  // chunk its own generator when splitting sampling work).
  static UniformRng for_chunk(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * (chunk + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return UniformRng(z ^ (z >> 31));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace recgame
