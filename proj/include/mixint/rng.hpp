#pragma once

#include <cstdint>

namespace mixint {

// Counter-based deterministic generator: the i-th output is a pure function
// of (seed, i), namely the SplitMix64 finalizer applied to
// seed + (i+1) * 0x9E3779B97F4A7C15 (the 64-bit golden-ratio increment).
// Constants are the standard SplitMix64 ones (Steele/Lea/Flood).
// Because outputs depend only on (seed, counter), parallel consumers can
// partition the counter space and reproduce any stream bit-exactly.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t start = 0)
      : seed_(seed), counter_(start) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // i-th raw output of the stream with the given seed.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t i) {
    return mix64(seed + (i + 1) * 0x9E3779B97F4A7C15ULL);
  }

  // Derives an independent stream seed, e.g. one per campaign trial.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return mix64(mix64(seed) ^ at(stream, 0));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64() { return at(seed_, counter_++); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace mixint
