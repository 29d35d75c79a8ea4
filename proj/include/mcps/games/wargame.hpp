#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcps/types.hpp"
#include "mcps/zobrist.hpp"

namespace mcps::games {

// Target-selection wargame. The attack order is fixed: players alternate and
// each player's units act in index order, the cursor skipping dead units
// without consuming a turn. Each attack deals one damage; units start at 3
// health; the last army standing wins. The three-player variant rotates over
// three armies and allows targets in either opposing army.
class Wargame {
public:
    static constexpr int kMaxUnitsPerPlayer = 20;
    static constexpr int kMaxUnits = 60;

    struct Move {
        std::int8_t target_player = -1;
        std::int8_t target_unit = -1;
        bool operator==(const Move&) const = default;
    };

    struct State {
        std::array<std::int8_t, kMaxUnits> health{};
        std::array<std::int8_t, 3> cursor{};  // next acting unit per player, living
        std::array<std::int8_t, 3> alive{};
        PlayerId to_move = 0;
        std::int16_t ply = 0;
        std::uint64_t key = 0;
        std::int8_t winner = -1;
    };

    explicit Wargame(int units = 10, int players = 2) : units_(units), players_(players) {
        if (units < 1 || units > kMaxUnitsPerPlayer)
            throw std::invalid_argument("Wargame: unsupported unit count");
        if (players != 2 && players != 3)
            throw std::invalid_argument("Wargame: 2 or 3 players");
        if (players == 2)
            name_ = "wargame-" + std::to_string(units);
        else
            name_ = units == 10 ? std::string("wargame-3p") : "wargame-3p-" + std::to_string(units);
        std::uint64_t seed = 0x77617267ULL * 2654435761ULL +
                             static_cast<std::uint64_t>(units * 4 + players);
        for (auto& t : health_tab_) zobrist::fill(t, splitmix64(seed));
        for (auto& t : cursor_tab_) zobrist::fill(t, splitmix64(seed));
        zobrist::fill(turn_tab_, splitmix64(seed));
    }

    std::string_view name() const { return name_; }
    int num_players() const { return players_; }
    int units_per_player() const { return units_; }

    State initial_state() const {
        State s;
        for (int p = 0; p < players_; ++p) {
            for (int u = 0; u < units_; ++u) {
                const int g = p * units_ + u;
                s.health[static_cast<std::size_t>(g)] = 3;
                s.key ^= health_tab_[static_cast<std::size_t>(g)][3];
            }
            s.alive[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(units_);
            s.key ^= cursor_tab_[static_cast<std::size_t>(p)][0];
        }
        s.key ^= turn_tab_[0];
        return s;
    }

    bool is_terminal(const State& s) const { return s.winner >= 0; }

    RewardVector rewards(const State& s) const {
        if (!is_terminal(s)) throw std::logic_error("Wargame: rewards of non-terminal state");
        return RewardVector::win(players_, s.winner);
    }

    void legal_moves(const State& s, std::vector<Move>& out) const {
        if (is_terminal(s)) throw std::logic_error("Wargame: legal_moves of terminal state");
        out.clear();
        for (PlayerId tp = 0; tp < players_; ++tp) {
            if (tp == s.to_move) continue;
            for (int u = 0; u < units_; ++u)
                if (s.health[static_cast<std::size_t>(tp * units_ + u)] > 0)
                    out.push_back(Move{static_cast<std::int8_t>(tp), static_cast<std::int8_t>(u)});
        }
    }

    State apply(const State& s, Move m) const {
        if (is_terminal(s)) throw std::logic_error("Wargame: apply on terminal state");
        const bool ok = m.target_player >= 0 && m.target_player < players_ &&
                        m.target_player != s.to_move && m.target_unit >= 0 &&
                        m.target_unit < units_ &&
                        s.health[static_cast<std::size_t>(m.target_player * units_ + m.target_unit)] > 0;
        if (!ok) throw std::invalid_argument("Wargame: illegal move");

        State r = s;
        const int g = m.target_player * units_ + m.target_unit;
        const std::int8_t before = r.health[static_cast<std::size_t>(g)];
        r.health[static_cast<std::size_t>(g)] = static_cast<std::int8_t>(before - 1);
        r.key ^= health_tab_[static_cast<std::size_t>(g)][static_cast<std::size_t>(before)] ^
                 health_tab_[static_cast<std::size_t>(g)][static_cast<std::size_t>(before - 1)];
        if (before == 1) r.alive[static_cast<std::size_t>(m.target_player)]--;
        r.ply = static_cast<std::int16_t>(s.ply + 1);

        int standing = 0;
        for (PlayerId p = 0; p < players_; ++p)
            if (r.alive[static_cast<std::size_t>(p)] > 0) ++standing;
        if (standing == 1) {
            for (PlayerId p = 0; p < players_; ++p)
                if (r.alive[static_cast<std::size_t>(p)] > 0) r.winner = static_cast<std::int8_t>(p);
            return r;
        }

        advance_cursor(r, s.to_move);
        PlayerId next = s.to_move;
        do {
            next = (next + 1) % players_;
        } while (r.alive[static_cast<std::size_t>(next)] == 0);
        r.key ^= turn_tab_[static_cast<std::size_t>(s.to_move)] ^ turn_tab_[static_cast<std::size_t>(next)];
        r.to_move = next;
        canonicalize_cursor(r, next);
        return r;
    }

    CodeId code(const State& s, Move m, CodeMode mode) const {
        const int attacker = s.to_move * units_ + s.cursor[static_cast<std::size_t>(s.to_move)];
        int target;
        if (players_ == 2) {
            target = m.target_unit;  // the enemy army is implied
        } else {
            target = m.target_player * units_ + m.target_unit;
        }
        const int targets = players_ == 2 ? units_ : players_ * units_;
        const CodeId abstract = static_cast<CodeId>(attacker * targets + target);
        if (mode == CodeMode::abstract) return abstract;
        const int before =
            s.health[static_cast<std::size_t>(m.target_player * units_ + m.target_unit)];
        return static_cast<CodeId>(abstract * 3 + (before - 1));
    }

    std::int64_t code_universe(CodeMode mode) const {
        const std::int64_t attackers = players_ * units_;
        const std::int64_t targets = players_ == 2 ? units_ : players_ * units_;
        const std::int64_t abstract = attackers * targets;
        return mode == CodeMode::abstract ? abstract : abstract * 3;
    }

    bool has_mode(CodeMode m) const { return m != CodeMode::specific; }

    std::uint64_t state_key(const State& s) const { return s.key; }

    int max_game_length() const { return 3 * units_ * players_ + 1; }

private:
    // Steps player p's cursor one slot past the unit that just acted, then on
    // to the next living unit.
    void advance_cursor(State& r, PlayerId p) const {
        const int old = r.cursor[static_cast<std::size_t>(p)];
        int c = (old + 1) % units_;
        while (r.health[static_cast<std::size_t>(p * units_ + c)] == 0) c = (c + 1) % units_;
        r.key ^= cursor_tab_[static_cast<std::size_t>(p)][static_cast<std::size_t>(old)] ^
                 cursor_tab_[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)];
        r.cursor[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(c);
    }

    // Units can die between a player's turns; re-anchor the cursor on a living
    // unit when the turn comes back around.
    void canonicalize_cursor(State& r, PlayerId p) const {
        const int old = r.cursor[static_cast<std::size_t>(p)];
        int c = old;
        while (r.health[static_cast<std::size_t>(p * units_ + c)] == 0) c = (c + 1) % units_;
        if (c != old) {
            r.key ^= cursor_tab_[static_cast<std::size_t>(p)][static_cast<std::size_t>(old)] ^
                     cursor_tab_[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)];
            r.cursor[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(c);
        }
    }

    int units_;
    int players_;
    std::string name_;
    std::array<std::array<std::uint64_t, 4>, kMaxUnits> health_tab_;
    std::array<std::array<std::uint64_t, kMaxUnitsPerPlayer>, 3> cursor_tab_;
    std::array<std::uint64_t, 3> turn_tab_;
};

}  // namespace mcps::games
