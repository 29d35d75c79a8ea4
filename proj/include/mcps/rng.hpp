#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace mcps {

// SplitMix64 step. Used for table generation, seeding and seed mixing.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives one stream seed from a tuple such as (seed_base, game_seed, ply, seat).
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t s = 0x243f6a8885a308d3ULL;
    for (std::uint64_t p : parts) {
        std::uint64_t x = s ^ (p + 0x9e3779b97f4a7c15ULL);
        s = splitmix64(x);
    }
    return s;
}

// xoshiro256** by Blackman and Vigna. Portable and fast; every draw is a
// deterministic function of the seed, which the tournament protocol relies on.
class Xoshiro256 {
public:
    Xoshiro256() : Xoshiro256(0) {}

    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Multiply-shift bounded draw: exactly one next() per call, so streams stay
    // aligned no matter which branch consumed the draw.
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

}  // namespace mcps
