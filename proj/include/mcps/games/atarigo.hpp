#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcps/games/go_common.hpp"
#include "mcps/types.hpp"
#include "mcps/zobrist.hpp"

namespace mcps::games {

// Atarigo: the first capture wins. Suicide is illegal, capturing takes
// precedence when a placement would do both. A player left without a legal
// placement at their turn loses.
class Atarigo {
public:
    struct Move {
        std::int8_t cell = -1;
        bool operator==(const Move&) const = default;
    };

    struct State {
        GoCells cells{};
        PlayerId to_move = 0;
        std::int16_t ply = 0;
        std::uint64_t key = 0;
        std::int8_t winner = -1;
    };

    explicit Atarigo(int size = 6) : size_(size) {
        if (size < 2 || size * size > kMaxGoCells)
            throw std::invalid_argument("Atarigo: unsupported board size");
        name_ = "atarigo" + std::to_string(size);
        std::uint64_t seed = 0x61746172ULL * 2654435761ULL + static_cast<std::uint64_t>(size);
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
        if (!is_terminal(s)) throw std::logic_error("Atarigo: rewards of non-terminal state");
        return RewardVector::win(2, s.winner);
    }

    void legal_moves(const State& s, std::vector<Move>& out) const {
        if (is_terminal(s)) throw std::logic_error("Atarigo: legal_moves of terminal state");
        out.clear();
        GoCells scratch = s.cells;
        const std::int8_t stone = static_cast<std::int8_t>(s.to_move + 1);
        const int cells = size_ * size_;
        for (int c = 0; c < cells; ++c)
            if (scratch[static_cast<std::size_t>(c)] == 0 &&
                atarigo_placement_legal(scratch, size_, c, stone))
                out.push_back(Move{static_cast<std::int8_t>(c)});
    }

    State apply(const State& s, Move m) const {
        if (is_terminal(s)) throw std::logic_error("Atarigo: apply on terminal state");
        const int cells = size_ * size_;
        if (m.cell < 0 || m.cell >= cells || s.cells[static_cast<std::size_t>(m.cell)] != 0)
            throw std::invalid_argument("Atarigo: illegal move");
        State r = s;
        const std::int8_t stone = static_cast<std::int8_t>(s.to_move + 1);
        if (!atarigo_placement_legal(r.cells, size_, m.cell, stone))
            throw std::invalid_argument("Atarigo: illegal move");
        r.cells[static_cast<std::size_t>(m.cell)] = stone;
        r.key ^= stone_tab_[static_cast<std::size_t>(s.to_move)][static_cast<std::size_t>(m.cell)];
        r.ply = static_cast<std::int16_t>(s.ply + 1);
        if (captures_enemy(r.cells, size_, m.cell, stone)) {
            r.winner = static_cast<std::int8_t>(s.to_move);
            return r;
        }
        const PlayerId next = 1 - s.to_move;
        r.key ^= turn_tab_[static_cast<std::size_t>(s.to_move)] ^ turn_tab_[static_cast<std::size_t>(next)];
        r.to_move = next;
        GoCells scratch = r.cells;
        const std::int8_t next_stone = static_cast<std::int8_t>(next + 1);
        bool any = false;
        for (int c = 0; c < cells && !any; ++c)
            any = scratch[static_cast<std::size_t>(c)] == 0 &&
                  atarigo_placement_legal(scratch, size_, c, next_stone);
        if (!any) r.winner = static_cast<std::int8_t>(s.to_move);
        return r;
    }

    CodeId code(const State& s, Move m, CodeMode) const {
        return static_cast<CodeId>(s.to_move * size_ * size_ + m.cell);
    }

    std::int64_t code_universe(CodeMode) const { return 2 * size_ * size_; }

    bool has_mode(CodeMode m) const { return m != CodeMode::specific; }

    std::uint64_t state_key(const State& s) const { return s.key; }

    int max_game_length() const { return size_ * size_ + 1; }

private:
    int size_;
    std::string name_;
    std::array<std::array<std::uint64_t, kMaxGoCells>, 2> stone_tab_;
    std::array<std::uint64_t, 2> turn_tab_;
};

}  // namespace mcps::games
