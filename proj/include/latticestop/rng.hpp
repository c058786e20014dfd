#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace latticestop {

// SplitMix64 finalizer; used to derive per-trial seeds from a master seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for trial `index` of a run keyed by `master_seed`.
// Results of a multi-trial run depend only on (master_seed, index), never on
// how trials are scheduled across threads.
inline std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(master_seed) ^ (index + 1)));
}

// 53-bit uniform in [0, 1). Avoids std::uniform_real_distribution, whose
// output is implementation-defined; this mapping is reproducible everywhere.
inline double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  assert(bound > 0);
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) {
      return r % bound;
    }
  }
}

}  // namespace latticestop
