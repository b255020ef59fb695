// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lecedit {

// All randomness in the project flows through these helpers so that outputs
// are reproducible byte for byte: mt19937_64's raw stream is pinned by the
// standard, while std::uniform_* distributions are not.

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t z = root + 0x9e3779b97f4a7c15ull * (a + 1) + 0xbf58476d1ce4e5b9ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [lo, hi], inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
    const double span = static_cast<double>(hi) - static_cast<double>(lo) + 1.0;
    return lo + static_cast<int>(uniform01(rng) * span);
}

/// One normal draw via Box-Muller (consumes two engine outputs).
inline double normal(Rng& rng, double mean = 0.0, double stddev = 1.0) {
    const double u1 = 1.0 - uniform01(rng);  // (0, 1]
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * M_PI * u2);
}

}  // namespace lecedit
