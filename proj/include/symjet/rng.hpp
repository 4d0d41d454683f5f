#pragma once

// Deterministic seeded randomness. SplitMix64 is tiny, fast, and fully
// reproducible across platforms; every randomized operation takes an explicit
// stream so parallel trials never share state.

#include <cstdint>

namespace symjet {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], inclusive. The modulo bias is < 2^-32 for
  // every range used here (ranges are far below 2^32).
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

  // Independent child stream (for per-trial / per-task determinism).
  SplitMix64 fork() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace symjet
