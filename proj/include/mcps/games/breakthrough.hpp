#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcps/types.hpp"
#include "mcps/zobrist.hpp"

namespace mcps::games {

// Breakthrough: two rows of pawns each. A pawn steps straight or diagonally
// forward onto an empty cell, or captures diagonally forward. Reaching the
// opposite side wins; so does capturing the last enemy pawn.
class Breakthrough {
public:
    static constexpr int kMaxCells = 64;

    struct Move {
        std::int8_t from = -1;
        std::int8_t to = -1;
        bool operator==(const Move&) const = default;
    };

    struct State {
        std::array<std::int8_t, kMaxCells> cells{};
        std::array<std::int8_t, 2> pieces{};
        PlayerId to_move = 0;
        std::int16_t ply = 0;
        std::uint64_t key = 0;
        std::int8_t winner = -1;
    };

    explicit Breakthrough(int size = 8) : size_(size) {
        if (size < 4 || size * size > kMaxCells)
            throw std::invalid_argument("Breakthrough: unsupported board size");
        name_ = "breakthrough" + std::to_string(size);
        std::uint64_t seed = 0x62726b74ULL * 2654435761ULL + static_cast<std::uint64_t>(size);
        for (auto& t : piece_tab_) zobrist::fill(t, splitmix64(seed));
        zobrist::fill(turn_tab_, splitmix64(seed));
    }

    std::string_view name() const { return name_; }
    int num_players() const { return 2; }
    int board_size() const { return size_; }

    State initial_state() const {
        State s;
        for (int c = 0; c < 2 * size_; ++c) set_piece(s, c, 0);
        for (int c = (size_ - 2) * size_; c < size_ * size_; ++c) set_piece(s, c, 1);
        s.pieces = {static_cast<std::int8_t>(2 * size_), static_cast<std::int8_t>(2 * size_)};
        s.key ^= turn_tab_[0];
        return s;
    }

    bool is_terminal(const State& s) const { return s.winner >= 0; }

    RewardVector rewards(const State& s) const {
        if (!is_terminal(s)) throw std::logic_error("Breakthrough: rewards of non-terminal state");
        return RewardVector::win(2, s.winner);
    }

    void legal_moves(const State& s, std::vector<Move>& out) const {
        if (is_terminal(s)) throw std::logic_error("Breakthrough: legal_moves of terminal state");
        out.clear();
        const std::int8_t me = static_cast<std::int8_t>(s.to_move + 1);
        const int cells = size_ * size_;
        for (int from = 0; from < cells; ++from) {
            if (s.cells[static_cast<std::size_t>(from)] != me) continue;
            for (int to : targets(from, s.to_move)) {
                if (to < 0) continue;
                if (target_ok(s, from, to)) {
                    out.push_back(Move{static_cast<std::int8_t>(from), static_cast<std::int8_t>(to)});
                }
            }
        }
    }

    State apply(const State& s, Move m) const {
        if (is_terminal(s)) throw std::logic_error("Breakthrough: apply on terminal state");
        const std::int8_t me = static_cast<std::int8_t>(s.to_move + 1);
        bool shape_ok = m.from >= 0 && m.from < size_ * size_ &&
                        s.cells[static_cast<std::size_t>(m.from)] == me;
        if (shape_ok) {
            shape_ok = false;
            for (int to : targets(m.from, s.to_move)) shape_ok = shape_ok || to == m.to;
        }
        if (!shape_ok || !target_ok(s, m.from, m.to))
            throw std::invalid_argument("Breakthrough: illegal move");

        State r = s;
        const PlayerId them = 1 - s.to_move;
        clear_piece(r, m.from, s.to_move);
        if (r.cells[static_cast<std::size_t>(m.to)] != 0) {
            clear_piece(r, m.to, them);
            r.pieces[static_cast<std::size_t>(them)]--;
        }
        set_piece(r, m.to, s.to_move);
        r.ply = static_cast<std::int16_t>(s.ply + 1);
        const int to_row = m.to / size_;
        const int goal = s.to_move == 0 ? size_ - 1 : 0;
        if (to_row == goal || r.pieces[static_cast<std::size_t>(them)] == 0) {
            r.winner = static_cast<std::int8_t>(s.to_move);
            return r;
        }
        r.key ^= turn_tab_[static_cast<std::size_t>(s.to_move)] ^ turn_tab_[static_cast<std::size_t>(them)];
        r.to_move = them;
        return r;
    }

    CodeId code(const State& s, Move m, CodeMode) const {
        const int cells = size_ * size_;
        return static_cast<CodeId>((s.to_move * cells + m.from) * cells + m.to);
    }

    std::int64_t code_universe(CodeMode) const {
        const std::int64_t cells = size_ * size_;
        return 2 * cells * cells;
    }

    bool has_mode(CodeMode m) const { return m != CodeMode::specific; }

    std::uint64_t state_key(const State& s) const { return s.key; }

    int max_game_length() const { return 4 * size_ * (size_ - 1) + 2; }

private:
    // Forward targets in ascending cell order; -1 marks off-board entries.
    std::array<int, 3> targets(int from, PlayerId p) const {
        const int c = from % size_;
        const int fwd = p == 0 ? size_ : -size_;
        return {c > 0 ? from + fwd - 1 : -1, from + fwd, c + 1 < size_ ? from + fwd + 1 : -1};
    }

    bool target_ok(const State& s, int from, int to) const {
        if (to < 0 || to >= size_ * size_) return false;
        const std::int8_t me = s.cells[static_cast<std::size_t>(from)];
        const std::int8_t occ = s.cells[static_cast<std::size_t>(to)];
        const bool straight = to % size_ == from % size_;
        if (straight) return occ == 0;
        return occ != me;
    }

    void set_piece(State& s, int cell, PlayerId p) const {
        s.cells[static_cast<std::size_t>(cell)] = static_cast<std::int8_t>(p + 1);
        s.key ^= piece_tab_[static_cast<std::size_t>(p)][static_cast<std::size_t>(cell)];
    }

    void clear_piece(State& s, int cell, PlayerId p) const {
        s.cells[static_cast<std::size_t>(cell)] = 0;
        s.key ^= piece_tab_[static_cast<std::size_t>(p)][static_cast<std::size_t>(cell)];
    }

    int size_;
    std::string name_;
    std::array<std::array<std::uint64_t, kMaxCells>, 2> piece_tab_;
    std::array<std::uint64_t, 2> turn_tab_;
};

}  // namespace mcps::games
