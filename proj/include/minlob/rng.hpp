#pragma once

#include <cstdint>
#include <random>

namespace minlob {

// std::uniform_*_distribution output is implementation-defined, so the
// seeded generators roll their own draws to stay byte-identical across
// standard libraries.

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform-ish integer in [0, bound); bound must be positive. The modulo
/// bias is irrelevant for instance generation and keeps draws portable.
inline int uniform_below(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

}  // namespace minlob
