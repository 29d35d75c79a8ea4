#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcps/types.hpp"
#include "mcps/zobrist.hpp"

namespace mcps::games {

// Hex on a rhombic board with six-neighbour connectivity. Player 0 connects
// the top and bottom rows, player 1 the left and right columns. The pie rule
// is realized as a forced first move on cell (2,2) with no swap.
class Hex {
public:
    static constexpr int kMaxCells = 49;

    struct Move {
        std::int8_t cell = -1;
        bool operator==(const Move&) const = default;
    };

    struct State {
        std::array<std::int8_t, kMaxCells> cells{};  // 0 empty, 1 + player
        PlayerId to_move = 0;
        std::int16_t ply = 0;
        std::uint64_t key = 0;
        std::int8_t winner = -1;
    };

    explicit Hex(int size = 7) : size_(size) {
        if (size < 3 || size * size > kMaxCells)
            throw std::invalid_argument("Hex: unsupported board size");
        name_ = "hex" + std::to_string(size);
        forced_opening_ = static_cast<std::int8_t>(2 * size + 2);  // row 2, column 2
        std::uint64_t seed = 0x686578ULL * 2654435761ULL + static_cast<std::uint64_t>(size);
        for (auto& t : stone_tab_) zobrist::fill(t, splitmix64(seed));
        zobrist::fill(turn_tab_, splitmix64(seed));
    }

    std::string_view name() const { return name_; }
    int num_players() const { return 2; }
    int board_size() const { return size_; }

    State initial_state() const {
        State s;
        s.key = turn_tab_[0];
        return s;
    }

    bool is_terminal(const State& s) const { return s.winner >= 0; }

    RewardVector rewards(const State& s) const {
        if (!is_terminal(s)) throw std::logic_error("Hex: rewards of non-terminal state");
        return RewardVector::win(2, s.winner);
    }

    void legal_moves(const State& s, std::vector<Move>& out) const {
        if (is_terminal(s)) throw std::logic_error("Hex: legal_moves of terminal state");
        out.clear();
        if (s.ply == 0) {
            out.push_back(Move{forced_opening_});
            return;
        }
        const int cells = size_ * size_;
        for (int c = 0; c < cells; ++c)
            if (s.cells[static_cast<std::size_t>(c)] == 0)
                out.push_back(Move{static_cast<std::int8_t>(c)});
    }

    State apply(const State& s, Move m) const {
        if (is_terminal(s)) throw std::logic_error("Hex: apply on terminal state");
        const int cells = size_ * size_;
        if (m.cell < 0 || m.cell >= cells || s.cells[static_cast<std::size_t>(m.cell)] != 0 ||
            (s.ply == 0 && m.cell != forced_opening_))
            throw std::invalid_argument("Hex: illegal move");
        State r = s;
        r.cells[static_cast<std::size_t>(m.cell)] = static_cast<std::int8_t>(s.to_move + 1);
        r.key ^= stone_tab_[static_cast<std::size_t>(s.to_move)][static_cast<std::size_t>(m.cell)];
        r.ply = static_cast<std::int16_t>(s.ply + 1);
        if (group_spans(r, s.to_move, m.cell)) {
            r.winner = static_cast<std::int8_t>(s.to_move);
            return r;
        }
        const PlayerId next = 1 - s.to_move;
        r.key ^= turn_tab_[static_cast<std::size_t>(s.to_move)] ^ turn_tab_[static_cast<std::size_t>(next)];
        r.to_move = next;
        return r;
    }

    CodeId code(const State& s, Move m, CodeMode) const {
        return static_cast<CodeId>(s.to_move * size_ * size_ + m.cell);
    }

    std::int64_t code_universe(CodeMode) const { return 2 * size_ * size_; }

    bool has_mode(CodeMode m) const { return m != CodeMode::specific; }

    std::uint64_t state_key(const State& s) const { return s.key; }

    int max_game_length() const { return size_ * size_ + 1; }

    // Full connectivity query, independent of move history.
    bool connected(const State& s, PlayerId p) const {
        const int cells = size_ * size_;
        for (int c = 0; c < cells; ++c) {
            const bool on_first_edge = p == 0 ? (c / size_ == 0) : (c % size_ == 0);
            if (on_first_edge && s.cells[static_cast<std::size_t>(c)] == p + 1 &&
                group_spans(s, p, c))
                return true;
        }
        return false;
    }

private:
    // Flood-fills the group containing `cell` and reports whether it touches
    // both target edges of player p.
    bool group_spans(const State& s, PlayerId p, int cell) const {
        std::array<std::int8_t, kMaxCells> stack;
        std::array<bool, kMaxCells> seen{};
        const std::int8_t stone = static_cast<std::int8_t>(p + 1);
        bool low = false, high = false;
        int top = 0;
        stack[static_cast<std::size_t>(top++)] = static_cast<std::int8_t>(cell);
        seen[static_cast<std::size_t>(cell)] = true;
        while (top > 0) {
            const int cur = stack[static_cast<std::size_t>(--top)];
            const int r = cur / size_;
            const int c = cur % size_;
            const int line = p == 0 ? r : c;
            if (line == 0) low = true;
            if (line == size_ - 1) high = true;
            if (low && high) return true;
            static constexpr int dr[6] = {-1, -1, 0, 0, 1, 1};
            static constexpr int dc[6] = {0, 1, -1, 1, -1, 0};
            for (int k = 0; k < 6; ++k) {
                const int nr = r + dr[k];
                const int nc = c + dc[k];
                if (nr < 0 || nr >= size_ || nc < 0 || nc >= size_) continue;
                const int n = nr * size_ + nc;
                if (!seen[static_cast<std::size_t>(n)] &&
                    s.cells[static_cast<std::size_t>(n)] == stone) {
                    seen[static_cast<std::size_t>(n)] = true;
                    stack[static_cast<std::size_t>(top++)] = static_cast<std::int8_t>(n);
                }
            }
        }
        return false;
    }

    int size_;
    std::string name_;
    std::int8_t forced_opening_;
    std::array<std::array<std::uint64_t, kMaxCells>, 2> stone_tab_;
    std::array<std::uint64_t, 2> turn_tab_;
};

}  // namespace mcps::games
