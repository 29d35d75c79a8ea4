#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "mcps/rng.hpp"

namespace mcps::zobrist {

// Deterministic 64-bit feature tables. Every game instance regenerates the
// same tables from its fixed seed, so state keys agree across processes.
inline void fill(std::span<std::uint64_t> out, std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& v : out) v = splitmix64(s);
}

template <std::size_t N>
std::array<std::uint64_t, N> table(std::uint64_t seed) {
    std::array<std::uint64_t, N> t;
    fill(t, seed);
    return t;
}

}  // namespace mcps::zobrist
