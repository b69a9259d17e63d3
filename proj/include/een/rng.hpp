#pragma once

// Seeded randomness with a fixed, documented mapping from mt19937_64 output so
// results do not depend on the standard library's distribution classes.

#include <cstdint>
#include <random>

namespace een {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection on the top of the 64-bit range.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    std::uint64_t x = rng();
    while (x > limit) x = rng();
    return x % bound;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [-1, 1).
inline double uniform_symmetric(Rng& rng) {
    return 2.0 * uniform_unit(rng) - 1.0;
}

}  // namespace een
