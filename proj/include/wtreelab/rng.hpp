#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace wtreelab {

/// Uniform draw from [lo, hi] via rejection sampling on mt19937_64 output.
/// std::uniform_int_distribution is implementation-defined; this one gives
/// the same stream on every platform, which seeded campaigns rely on.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());  // full 64-bit range
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % span);
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

}  // namespace wtreelab
