#pragma once

#include <array>
#include <cstdint>

namespace mcps::games {

inline constexpr int kMaxGoCells = 36;

// 0 = empty, 1 + player = stone of that player.
using GoCells = std::array<std::int8_t, kMaxGoCells>;

struct GoNeighbors {
    std::array<std::int8_t, 4> cell;
    int count = 0;
};

inline GoNeighbors go_neighbors(int size, int cell) {
    GoNeighbors out;
    const int r = cell / size;
    const int c = cell % size;
    if (r > 0) out.cell[static_cast<std::size_t>(out.count++)] = static_cast<std::int8_t>(cell - size);
    if (c > 0) out.cell[static_cast<std::size_t>(out.count++)] = static_cast<std::int8_t>(cell - 1);
    if (c + 1 < size) out.cell[static_cast<std::size_t>(out.count++)] = static_cast<std::int8_t>(cell + 1);
    if (r + 1 < size) out.cell[static_cast<std::size_t>(out.count++)] = static_cast<std::int8_t>(cell + size);
    return out;
}

// True if the group containing `cell` has at least one liberty.
inline bool group_has_liberty(const GoCells& cells, int size, int cell) {
    const std::int8_t color = cells[static_cast<std::size_t>(cell)];
    std::array<std::int8_t, kMaxGoCells> stack;
    std::array<bool, kMaxGoCells> seen{};
    int top = 0;
    stack[static_cast<std::size_t>(top++)] = static_cast<std::int8_t>(cell);
    seen[static_cast<std::size_t>(cell)] = true;
    while (top > 0) {
        const int cur = stack[static_cast<std::size_t>(--top)];
        const GoNeighbors nb = go_neighbors(size, cur);
        for (int k = 0; k < nb.count; ++k) {
            const int n = nb.cell[static_cast<std::size_t>(k)];
            const std::int8_t v = cells[static_cast<std::size_t>(n)];
            if (v == 0) return true;
            if (v == color && !seen[static_cast<std::size_t>(n)]) {
                seen[static_cast<std::size_t>(n)] = true;
                stack[static_cast<std::size_t>(top++)] = static_cast<std::int8_t>(n);
            }
        }
    }
    return false;
}

// With `cell` already filled by `stone`: true iff some adjacent enemy group is
// left without liberties.
inline bool captures_enemy(const GoCells& cells, int size, int cell, std::int8_t stone) {
    const GoNeighbors nb = go_neighbors(size, cell);
    for (int k = 0; k < nb.count; ++k) {
        const int n = nb.cell[static_cast<std::size_t>(k)];
        const std::int8_t v = cells[static_cast<std::size_t>(n)];
        if (v != 0 && v != stone && !group_has_liberty(cells, size, n)) return true;
    }
    return false;
}

// Suicides and captures both forbidden. Probes by placing and restoring.
inline bool nogo_placement_legal(GoCells& cells, int size, int cell, std::int8_t stone) {
    cells[static_cast<std::size_t>(cell)] = stone;
    const bool ok = !captures_enemy(cells, size, cell, stone) &&
                    group_has_liberty(cells, size, cell);
    cells[static_cast<std::size_t>(cell)] = 0;
    return ok;
}

// Capturing is legal and wins; a non-capturing placement must keep its own
// group alive (plain suicide is illegal, self-atari is fine).
inline bool atarigo_placement_legal(GoCells& cells, int size, int cell, std::int8_t stone) {
    cells[static_cast<std::size_t>(cell)] = stone;
    const bool ok = captures_enemy(cells, size, cell, stone) ||
                    group_has_liberty(cells, size, cell);
    cells[static_cast<std::size_t>(cell)] = 0;
    return ok;
}

}  // namespace mcps::games
