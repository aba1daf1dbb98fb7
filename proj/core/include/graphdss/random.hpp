#pragma once

#include <cstdint>
#include <random>

namespace graphdss {

/// Uniform draw in [0, bound) by rejection. std::uniform_int_distribution is
/// implementation-defined, this is not, so seeded runs match across
/// standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// Independent stream for (seed, index): results do not depend on the order
/// in which indices are processed.
inline std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace graphdss
