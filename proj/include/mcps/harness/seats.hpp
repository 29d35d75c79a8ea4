#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace mcps::harness {

// Seat permutation for one game: perm[seat] = agent sitting there. Two agents
// swap on odd seeds; three agents rotate by seed mod 3. Over any seed range
// whose length is a multiple of the player count every agent occupies every
// seat equally often.
inline std::array<int, 3> seat_assignment(std::uint64_t seed, int num_players) {
    if (num_players == 2)
        return seed % 2 == 0 ? std::array<int, 3>{0, 1, -1} : std::array<int, 3>{1, 0, -1};
    if (num_players == 3) {
        const int r = static_cast<int>(seed % 3);
        std::array<int, 3> perm{};
        for (int seat = 0; seat < 3; ++seat) perm[static_cast<std::size_t>(seat)] = (seat + r) % 3;
        return perm;
    }
    throw std::invalid_argument("seat_assignment: 2 or 3 players");
}

}  // namespace mcps::harness
