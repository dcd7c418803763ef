#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace testgen {

// Every random draw in the toolkit flows through an injected engine of this type.
using Rng = std::mt19937_64;

inline bool coin(Rng& rng, double probability)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < probability;
}

// Uniform index in [0, n); pre: n > 0.
inline std::size_t pick_index(Rng& rng, std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("pick_index on empty range");
    }
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace testgen
