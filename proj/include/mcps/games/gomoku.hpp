#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcps/types.hpp"
#include "mcps/zobrist.hpp"

namespace mcps::games {

// Freestyle Gomoku: five or more aligned stones win, a full board without a
// line is a draw worth 0.5 to each side.
class Gomoku {
public:
    static constexpr int kMaxCells = 81;

    struct Move {
        std::int8_t cell = -1;
        bool operator==(const Move&) const = default;
    };

    struct State {
        std::array<std::int8_t, kMaxCells> cells{};
        PlayerId to_move = 0;
        std::int16_t ply = 0;
        std::uint64_t key = 0;
        std::int8_t winner = -1;  // -1 ongoing, -2 draw, else winning player
    };

    explicit Gomoku(int size = 9) : size_(size) {
        if (size < 5 || size * size > kMaxCells)
            throw std::invalid_argument("Gomoku: unsupported board size");
        name_ = "gomoku" + std::to_string(size);
        std::uint64_t seed = 0x676f6d6fULL * 2654435761ULL + static_cast<std::uint64_t>(size);
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

    bool is_terminal(const State& s) const { return s.winner != -1; }

    RewardVector rewards(const State& s) const {
        if (!is_terminal(s)) throw std::logic_error("Gomoku: rewards of non-terminal state");
        if (s.winner == -2) return RewardVector::draw(2);
        return RewardVector::win(2, s.winner);
    }

    void legal_moves(const State& s, std::vector<Move>& out) const {
        if (is_terminal(s)) throw std::logic_error("Gomoku: legal_moves of terminal state");
        out.clear();
        const int cells = size_ * size_;
        for (int c = 0; c < cells; ++c)
            if (s.cells[static_cast<std::size_t>(c)] == 0)
                out.push_back(Move{static_cast<std::int8_t>(c)});
    }

    State apply(const State& s, Move m) const {
        if (is_terminal(s)) throw std::logic_error("Gomoku: apply on terminal state");
        const int cells = size_ * size_;
        if (m.cell < 0 || m.cell >= cells || s.cells[static_cast<std::size_t>(m.cell)] != 0)
            throw std::invalid_argument("Gomoku: illegal move");
        State r = s;
        r.cells[static_cast<std::size_t>(m.cell)] = static_cast<std::int8_t>(s.to_move + 1);
        r.key ^= stone_tab_[static_cast<std::size_t>(s.to_move)][static_cast<std::size_t>(m.cell)];
        r.ply = static_cast<std::int16_t>(s.ply + 1);
        if (line_through(r, m.cell) >= 5) {
            r.winner = static_cast<std::int8_t>(s.to_move);
            return r;
        }
        if (r.ply == cells) {
            r.winner = -2;
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

    // Longest alignment through `cell` in any of the four directions.
    int line_through(const State& s, int cell) const {
        const std::int8_t stone = s.cells[static_cast<std::size_t>(cell)];
        const int r0 = cell / size_;
        const int c0 = cell % size_;
        static constexpr int dr[4] = {0, 1, 1, 1};
        static constexpr int dc[4] = {1, 0, 1, -1};
        int longest = 0;
        for (int d = 0; d < 4; ++d) {
            int len = 1;
            for (int sgn : {1, -1}) {
                int r = r0 + sgn * dr[d];
                int c = c0 + sgn * dc[d];
                while (r >= 0 && r < size_ && c >= 0 && c < size_ &&
                       s.cells[static_cast<std::size_t>(r * size_ + c)] == stone) {
                    ++len;
                    r += sgn * dr[d];
                    c += sgn * dc[d];
                }
            }
            if (len > longest) longest = len;
        }
        return longest;
    }

private:
    int size_;
    std::string name_;
    std::array<std::array<std::uint64_t, kMaxCells>, 2> stone_tab_;
    std::array<std::uint64_t, 2> turn_tab_;
};

}  // namespace mcps::games
