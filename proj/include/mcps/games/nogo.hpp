#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcps/games/go_common.hpp"
#include "mcps/types.hpp"
#include "mcps/zobrist.hpp"

namespace mcps::games {

// Nogo: suicides and captures are forbidden; a player stuck at their own turn
// has lost. Supports two and three players. With three players a stuck player
// is marked lost and passes from then on; the last player who is not lost wins
// alone.
class Nogo {
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
        std::uint8_t lost = 0;  // bit per player, set when stuck at own turn
        std::int8_t winner = -1;
    };

    explicit Nogo(int size = 5, int players = 2) : size_(size), players_(players) {
        if (size < 2 || size * size > kMaxGoCells)
            throw std::invalid_argument("Nogo: unsupported board size");
        if (players != 2 && players != 3)
            throw std::invalid_argument("Nogo: 2 or 3 players");
        name_ = "nogo" + std::to_string(size) + (players == 3 ? "-3p" : "");
        std::uint64_t seed = 0x6e6f676fULL * 2654435761ULL + static_cast<std::uint64_t>(size);
        for (auto& t : stone_tab_) zobrist::fill(t, splitmix64(seed));
        zobrist::fill(turn_tab_, splitmix64(seed));
        zobrist::fill(lost_tab_, splitmix64(seed));
    }

    std::string_view name() const { return name_; }
    int num_players() const { return players_; }
    int board_size() const { return size_; }

    State initial_state() const {
        State s;
        s.key = turn_tab_[0];
        return s;
    }

    bool is_terminal(const State& s) const { return s.winner >= 0; }

    RewardVector rewards(const State& s) const {
        if (!is_terminal(s)) throw std::logic_error("Nogo: rewards of non-terminal state");
        return RewardVector::win(players_, s.winner);
    }

    void legal_moves(const State& s, std::vector<Move>& out) const {
        if (is_terminal(s)) throw std::logic_error("Nogo: legal_moves of terminal state");
        out.clear();
        GoCells scratch = s.cells;
        const std::int8_t stone = static_cast<std::int8_t>(s.to_move + 1);
        const int cells = size_ * size_;
        for (int c = 0; c < cells; ++c)
            if (scratch[static_cast<std::size_t>(c)] == 0 &&
                nogo_placement_legal(scratch, size_, c, stone))
                out.push_back(Move{static_cast<std::int8_t>(c)});
    }

    State apply(const State& s, Move m) const {
        if (is_terminal(s)) throw std::logic_error("Nogo: apply on terminal state");
        const int cells = size_ * size_;
        if (m.cell < 0 || m.cell >= cells || s.cells[static_cast<std::size_t>(m.cell)] != 0)
            throw std::invalid_argument("Nogo: illegal move");
        State r = s;
        const std::int8_t stone = static_cast<std::int8_t>(s.to_move + 1);
        if (!nogo_placement_legal(r.cells, size_, m.cell, stone))
            throw std::invalid_argument("Nogo: illegal move");
        r.cells[static_cast<std::size_t>(m.cell)] = stone;
        r.key ^= stone_tab_[static_cast<std::size_t>(s.to_move)][static_cast<std::size_t>(m.cell)];
        r.ply = static_cast<std::int16_t>(s.ply + 1);
        advance_turn(r, s.to_move);
        return r;
    }

    CodeId code(const State& s, Move m, CodeMode) const {
        return static_cast<CodeId>(s.to_move * size_ * size_ + m.cell);
    }

    std::int64_t code_universe(CodeMode) const { return players_ * size_ * size_; }

    bool has_mode(CodeMode m) const { return m != CodeMode::specific; }

    std::uint64_t state_key(const State& s) const { return s.key; }

    int max_game_length() const { return size_ * size_ + 1; }

private:
    // Moves on to the next player that can act, marking stuck players as lost
    // on the way. When one unlost player remains, they win.
    void advance_turn(State& r, PlayerId mover) const {
        GoCells scratch = r.cells;
        for (int step = 1; step <= players_; ++step) {
            const PlayerId cand = (mover + step) % players_;
            if ((r.lost >> cand) & 1) continue;
            if (has_any_legal(scratch, cand)) {
                r.key ^= turn_tab_[static_cast<std::size_t>(r.to_move)] ^
                         turn_tab_[static_cast<std::size_t>(cand)];
                r.to_move = cand;
                return;
            }
            r.lost |= static_cast<std::uint8_t>(1u << cand);
            r.key ^= lost_tab_[static_cast<std::size_t>(cand)];
            if (std::popcount(static_cast<unsigned>(r.lost)) == players_ - 1) {
                for (PlayerId p = 0; p < players_; ++p)
                    if (!((r.lost >> p) & 1)) r.winner = static_cast<std::int8_t>(p);
                return;
            }
        }
        throw std::logic_error("Nogo: no player can act");
    }

    bool has_any_legal(GoCells& scratch, PlayerId p) const {
        const std::int8_t stone = static_cast<std::int8_t>(p + 1);
        const int cells = size_ * size_;
        for (int c = 0; c < cells; ++c)
            if (scratch[static_cast<std::size_t>(c)] == 0 &&
                nogo_placement_legal(scratch, size_, c, stone))
                return true;
        return false;
    }

    int size_;
    int players_;
    std::string name_;
    std::array<std::array<std::uint64_t, kMaxGoCells>, 3> stone_tab_;
    std::array<std::uint64_t, 3> turn_tab_;
    std::array<std::uint64_t, 3> lost_tab_;
};

}  // namespace mcps::games
