#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcps/types.hpp"
#include "mcps/zobrist.hpp"

namespace mcps::games {

// Investment pair game. Teams alternate; within a team the cursor rotates over
// members in index order, passed members included (they must pass). A move
// produces one unit of wealth for a teammate whose pair is still undecided
// (oneself included). The member of a pair who first reaches wealth 3 wins the
// pair and silences the corresponding member of every other team. When all
// pairs are decided, the teams with the most pair wins share the reward.
class Investment {
public:
    static constexpr int kMaxMembers = 21;
    static constexpr int kMaxPlayers = 63;

    struct Move {
        std::int8_t recipient = -1;  // -1 is the forced pass
        bool operator==(const Move&) const = default;
    };

    struct State {
        std::array<std::int8_t, kMaxPlayers> wealth{};
        std::uint64_t passed = 0;   // bit per global player index
        std::uint32_t decided = 0;  // bit per pair index
        std::array<std::int8_t, 3> cursor{};
        std::array<std::int8_t, 3> wins{};
        PlayerId to_move = 0;
        std::int16_t ply = 0;
        std::uint64_t key = 0;
        bool over = false;
    };

    explicit Investment(int members = 11, int teams = 2) : members_(members), teams_(teams) {
        if (members < 1 || members > kMaxMembers)
            throw std::invalid_argument("Investment: unsupported team size");
        if (teams != 2 && teams != 3)
            throw std::invalid_argument("Investment: 2 or 3 teams");
        if (teams == 2)
            name_ = "invest-" + std::to_string(members);
        else
            name_ = members == 10 ? std::string("invest-3p") : "invest-3p-" + std::to_string(members);
        std::uint64_t seed = 0x696e7665ULL * 2654435761ULL +
                             static_cast<std::uint64_t>(members * 4 + teams);
        for (auto& t : wealth_tab_) zobrist::fill(t, splitmix64(seed));
        zobrist::fill(passed_tab_, splitmix64(seed));
        for (auto& t : cursor_tab_) zobrist::fill(t, splitmix64(seed));
        zobrist::fill(turn_tab_, splitmix64(seed));
    }

    std::string_view name() const { return name_; }
    int num_players() const { return teams_; }
    int members_per_team() const { return members_; }

    State initial_state() const {
        State s;
        for (int t = 0; t < teams_; ++t) {
            for (int j = 0; j < members_; ++j)
                s.key ^= wealth_tab_[static_cast<std::size_t>(t * members_ + j)][0];
            s.key ^= cursor_tab_[static_cast<std::size_t>(t)][0];
        }
        s.key ^= turn_tab_[0];
        return s;
    }

    bool is_terminal(const State& s) const { return s.over; }

    RewardVector rewards(const State& s) const {
        if (!s.over) throw std::logic_error("Investment: rewards of non-terminal state");
        int best = 0;
        for (int t = 0; t < teams_; ++t)
            if (s.wins[static_cast<std::size_t>(t)] > best) best = s.wins[static_cast<std::size_t>(t)];
        int tied = 0;
        for (int t = 0; t < teams_; ++t)
            if (s.wins[static_cast<std::size_t>(t)] == best) ++tied;
        RewardVector r(teams_);
        for (int t = 0; t < teams_; ++t)
            if (s.wins[static_cast<std::size_t>(t)] == best) r[t] = 1.0 / tied;
        return r;
    }

    void legal_moves(const State& s, std::vector<Move>& out) const {
        if (s.over) throw std::logic_error("Investment: legal_moves of terminal state");
        out.clear();
        const int actor = s.to_move * members_ + s.cursor[static_cast<std::size_t>(s.to_move)];
        if ((s.passed >> actor) & 1) {
            out.push_back(Move{-1});
            return;
        }
        for (int j = 0; j < members_; ++j)
            if (!((s.decided >> j) & 1)) out.push_back(Move{static_cast<std::int8_t>(j)});
    }

    State apply(const State& s, Move m) const {
        if (s.over) throw std::logic_error("Investment: apply on terminal state");
        const int cursor = s.cursor[static_cast<std::size_t>(s.to_move)];
        const int actor = s.to_move * members_ + cursor;
        const bool actor_passed = (s.passed >> actor) & 1;
        if (actor_passed) {
            if (m.recipient != -1) throw std::invalid_argument("Investment: must pass");
        } else {
            const bool ok = m.recipient >= 0 && m.recipient < members_ &&
                            !((s.decided >> m.recipient) & 1);
            if (!ok) throw std::invalid_argument("Investment: illegal move");
        }

        State r = s;
        r.ply = static_cast<std::int16_t>(s.ply + 1);
        if (!actor_passed) {
            const int g = s.to_move * members_ + m.recipient;
            const std::int8_t before = r.wealth[static_cast<std::size_t>(g)];
            r.wealth[static_cast<std::size_t>(g)] = static_cast<std::int8_t>(before + 1);
            r.key ^= wealth_tab_[static_cast<std::size_t>(g)][static_cast<std::size_t>(before)] ^
                     wealth_tab_[static_cast<std::size_t>(g)][static_cast<std::size_t>(before + 1)];
            if (before + 1 == 3) {
                r.decided |= 1u << m.recipient;
                r.wins[static_cast<std::size_t>(s.to_move)]++;
                for (int t = 0; t < teams_; ++t) {
                    if (t == s.to_move) continue;
                    const int loser = t * members_ + m.recipient;
                    r.passed |= std::uint64_t{1} << loser;
                    r.key ^= passed_tab_[static_cast<std::size_t>(loser)];
                }
                if (r.decided == (members_ == 32 ? ~0u : ((1u << members_) - 1))) {
                    r.over = true;
                    return r;
                }
            }
        }

        const int next_cursor = (cursor + 1) % members_;
        r.key ^= cursor_tab_[static_cast<std::size_t>(s.to_move)][static_cast<std::size_t>(cursor)] ^
                 cursor_tab_[static_cast<std::size_t>(s.to_move)][static_cast<std::size_t>(next_cursor)];
        r.cursor[static_cast<std::size_t>(s.to_move)] = static_cast<std::int8_t>(next_cursor);
        const PlayerId next = (s.to_move + 1) % teams_;
        r.key ^= turn_tab_[static_cast<std::size_t>(s.to_move)] ^ turn_tab_[static_cast<std::size_t>(next)];
        r.to_move = next;
        return r;
    }

    CodeId code(const State& s, Move m, CodeMode mode) const {
        const int actor = s.to_move * members_ + s.cursor[static_cast<std::size_t>(s.to_move)];
        const int gift_codes = teams_ * members_ * members_;
        if (m.recipient < 0) {
            const int base = mode == CodeMode::abstract ? gift_codes : 3 * gift_codes;
            return static_cast<CodeId>(base + actor);
        }
        const CodeId abstract = static_cast<CodeId>(actor * members_ + m.recipient);
        if (mode == CodeMode::abstract) return abstract;
        const int before =
            s.wealth[static_cast<std::size_t>(s.to_move * members_ + m.recipient)];
        return static_cast<CodeId>(abstract * 3 + before);
    }

    std::int64_t code_universe(CodeMode mode) const {
        const std::int64_t gift = static_cast<std::int64_t>(teams_) * members_ * members_;
        const std::int64_t pass = static_cast<std::int64_t>(teams_) * members_;
        return (mode == CodeMode::abstract ? gift : 3 * gift) + pass;
    }

    bool has_mode(CodeMode m) const { return m != CodeMode::specific; }

    std::uint64_t state_key(const State& s) const { return s.key; }

    // Every full rotation contains at least one gift while the game is live,
    // and total wealth is capped at (2T+1)M, so this bounds any playout.
    int max_game_length() const {
        return teams_ * members_ * ((2 * teams_ + 1) * members_ + 1) + 1;
    }

private:
    int members_;
    int teams_;
    std::string name_;
    std::array<std::array<std::uint64_t, 4>, kMaxPlayers> wealth_tab_;
    std::array<std::uint64_t, kMaxPlayers> passed_tab_;
    std::array<std::array<std::uint64_t, kMaxMembers>, 3> cursor_tab_;
    std::array<std::uint64_t, 3> turn_tab_;
};

}  // namespace mcps::games
