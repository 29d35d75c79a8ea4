#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcps/types.hpp"
#include "mcps/zobrist.hpp"

namespace mcps::games {

// Small tactical skirmish on a 5x5 grid. Two teams of ten agents start on the
// two rows nearest their edge. Teams alternate; within a team agents act in
// index order, skipping the dead. An agent either attacks one enemy within
// Chebyshev distance 1 (one damage, health starts at 3) or steps to an
// orthogonally adjacent empty cell; with neither available it passes. A team
// that loses every agent loses; at 400 plies the game is a draw.
class VideoGame {
public:
    static constexpr int kSize = 5;
    static constexpr int kCells = 25;
    static constexpr int kPerTeam = 10;
    static constexpr int kAgents = 20;
    static constexpr int kTurnCap = 400;

    // kind 0: attack enemy with index arg; kind 1: step in direction arg
    // (0 up, 1 left, 2 right, 3 down); kind 2: pass.
    struct Move {
        std::int8_t kind = 2;
        std::int8_t arg = 0;
        bool operator==(const Move&) const = default;
    };

    struct State {
        std::array<std::int8_t, kAgents> pos{};     // cell, or -1 when dead
        std::array<std::int8_t, kAgents> health{};  // 0..3
        std::array<std::int8_t, kCells> grid{};     // agent id + 1, 0 empty
        std::array<std::int8_t, 2> cursor{};
        std::array<std::int8_t, 2> alive{};
        PlayerId to_move = 0;
        std::int16_t ply = 0;
        std::uint64_t key = 0;
        std::int8_t winner = -1;  // -2 is the turn-cap draw
    };

    VideoGame() : name_("videogame") {
        std::uint64_t seed = 0x76696465ULL * 2654435761ULL;
        for (auto& t : pos_tab_) zobrist::fill(t, splitmix64(seed));
        for (auto& t : health_tab_) zobrist::fill(t, splitmix64(seed));
        for (auto& t : cursor_tab_) zobrist::fill(t, splitmix64(seed));
        zobrist::fill(turn_tab_, splitmix64(seed));
        zobrist::fill(ply_tab_, splitmix64(seed));
    }

    std::string_view name() const { return name_; }
    int num_players() const { return 2; }

    State initial_state() const {
        State s;
        // Front row first, so agent 0 stands on the row facing the enemy.
        for (int i = 0; i < kPerTeam; ++i) {
            const int cell0 = i < kSize ? kSize + i : i - kSize;            // rows 1 then 0
            const int cell1 = i < kSize ? 3 * kSize + i : 4 * kSize + i - kSize;  // rows 3 then 4
            place(s, i, cell0);
            place(s, kPerTeam + i, cell1);
        }
        for (int a = 0; a < kAgents; ++a) {
            s.health[static_cast<std::size_t>(a)] = 3;
            s.key ^= health_tab_[static_cast<std::size_t>(a)][3];
        }
        s.alive = {kPerTeam, kPerTeam};
        s.key ^= cursor_tab_[0][0] ^ cursor_tab_[1][0] ^ turn_tab_[0] ^ ply_tab_[0];
        return s;
    }

    bool is_terminal(const State& s) const { return s.winner != -1; }

    RewardVector rewards(const State& s) const {
        if (!is_terminal(s)) throw std::logic_error("VideoGame: rewards of non-terminal state");
        if (s.winner == -2) return RewardVector::draw(2);
        return RewardVector::win(2, s.winner);
    }

    void legal_moves(const State& s, std::vector<Move>& out) const {
        if (is_terminal(s)) throw std::logic_error("VideoGame: legal_moves of terminal state");
        out.clear();
        const int actor = s.to_move * kPerTeam + s.cursor[static_cast<std::size_t>(s.to_move)];
        const int cell = s.pos[static_cast<std::size_t>(actor)];
        const PlayerId them = 1 - s.to_move;
        for (int u = 0; u < kPerTeam; ++u) {
            const int e = them * kPerTeam + u;
            if (s.health[static_cast<std::size_t>(e)] > 0 &&
                in_range(cell, s.pos[static_cast<std::size_t>(e)]))
                out.push_back(Move{0, static_cast<std::int8_t>(u)});
        }
        for (int d = 0; d < 4; ++d) {
            const int to = step_target(cell, d);
            if (to >= 0 && s.grid[static_cast<std::size_t>(to)] == 0)
                out.push_back(Move{1, static_cast<std::int8_t>(d)});
        }
        if (out.empty()) out.push_back(Move{2, 0});
    }

    State apply(const State& s, Move m) const {
        if (is_terminal(s)) throw std::logic_error("VideoGame: apply on terminal state");
        const int actor = s.to_move * kPerTeam + s.cursor[static_cast<std::size_t>(s.to_move)];
        const int cell = s.pos[static_cast<std::size_t>(actor)];
        const PlayerId them = 1 - s.to_move;

        State r = s;
        if (m.kind == 0) {
            const int e = them * kPerTeam + m.arg;
            const bool ok = m.arg >= 0 && m.arg < kPerTeam &&
                            s.health[static_cast<std::size_t>(e)] > 0 &&
                            in_range(cell, s.pos[static_cast<std::size_t>(e)]);
            if (!ok) throw std::invalid_argument("VideoGame: illegal attack");
            const std::int8_t before = r.health[static_cast<std::size_t>(e)];
            r.health[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(before - 1);
            r.key ^= health_tab_[static_cast<std::size_t>(e)][static_cast<std::size_t>(before)] ^
                     health_tab_[static_cast<std::size_t>(e)][static_cast<std::size_t>(before - 1)];
            if (before == 1) {
                remove(r, e);
                r.alive[static_cast<std::size_t>(them)]--;
            }
        } else if (m.kind == 1) {
            const int to = step_target(cell, m.arg);
            const bool ok = m.arg >= 0 && m.arg < 4 && to >= 0 &&
                            s.grid[static_cast<std::size_t>(to)] == 0;
            if (!ok) throw std::invalid_argument("VideoGame: illegal step");
            remove(r, actor);
            place(r, actor, to);
        } else {
            std::vector<Move> check;
            legal_moves(s, check);
            if (!(check.size() == 1 && check[0] == Move{2, 0}))
                throw std::invalid_argument("VideoGame: pass with actions available");
        }

        r.key ^= ply_tab_[static_cast<std::size_t>(s.ply)] ^
                 ply_tab_[static_cast<std::size_t>(s.ply + 1)];
        r.ply = static_cast<std::int16_t>(s.ply + 1);
        if (r.alive[static_cast<std::size_t>(them)] == 0) {
            r.winner = static_cast<std::int8_t>(s.to_move);
            return r;
        }
        if (r.ply >= kTurnCap) {
            r.winner = -2;
            return r;
        }
        advance_cursor(r, s.to_move);
        r.key ^= turn_tab_[static_cast<std::size_t>(s.to_move)] ^
                 turn_tab_[static_cast<std::size_t>(them)];
        r.to_move = them;
        canonicalize_cursor(r, them);
        return r;
    }

    CodeId code(const State& s, Move m, CodeMode mode) const {
        const int actor = s.to_move * kPerTeam + s.cursor[static_cast<std::size_t>(s.to_move)];
        const int from = s.pos[static_cast<std::size_t>(actor)];
        const PlayerId them = 1 - s.to_move;
        switch (mode) {
            case CodeMode::abstract: {
                if (m.kind == 0) return static_cast<CodeId>(actor * kAgents + them * kPerTeam + m.arg);
                if (m.kind == 1) return static_cast<CodeId>(kAgents * kAgents + actor * 4 + m.arg);
                return static_cast<CodeId>(kAgents * kAgents + kAgents * 4 + actor);
            }
            case CodeMode::exact: {
                // Per (agent, cell) block: attacks by enemy index, direction and
                // target health, then the four steps, then pass.
                const int block = actor * kCells + from;
                int off;
                if (m.kind == 0) {
                    const int e = them * kPerTeam + m.arg;
                    const int d = dir8(from, s.pos[static_cast<std::size_t>(e)]);
                    off = m.arg * 24 + d * 3 + (s.health[static_cast<std::size_t>(e)] - 1);
                } else if (m.kind == 1) {
                    off = 240 + m.arg;
                } else {
                    off = 244;
                }
                return static_cast<CodeId>(block * 245 + off);
            }
            case CodeMode::specific: {
                // Arrival cell, action kind, target health and player.
                int arrival = from;
                int kind;
                int h = 0;
                if (m.kind == 0) {
                    const int e = them * kPerTeam + m.arg;
                    kind = dir8(from, s.pos[static_cast<std::size_t>(e)]);
                    h = s.health[static_cast<std::size_t>(e)];
                } else if (m.kind == 1) {
                    arrival = step_target(from, m.arg);
                    kind = 8 + m.arg;
                } else {
                    kind = 12;
                }
                return static_cast<CodeId>(((arrival * 13 + kind) * 4 + h) * 2 + s.to_move);
            }
        }
        return -1;
    }

    std::int64_t code_universe(CodeMode mode) const {
        switch (mode) {
            case CodeMode::abstract: return kAgents * kAgents + kAgents * 4 + kAgents;
            case CodeMode::exact: return static_cast<std::int64_t>(kAgents) * kCells * 245;
            case CodeMode::specific: return kCells * 13 * 4 * 2;
        }
        return 0;
    }

    bool has_mode(CodeMode) const { return true; }

    std::uint64_t state_key(const State& s) const { return s.key; }

    int max_game_length() const { return kTurnCap; }

private:
    static bool in_range(int a, int b) {
        const int dr = a / kSize - b / kSize;
        const int dc = a % kSize - b % kSize;
        return dr >= -1 && dr <= 1 && dc >= -1 && dc <= 1;
    }

    static int step_target(int cell, int dir) {
        const int r = cell / kSize;
        const int c = cell % kSize;
        switch (dir) {
            case 0: return r > 0 ? cell - kSize : -1;
            case 1: return c > 0 ? cell - 1 : -1;
            case 2: return c + 1 < kSize ? cell + 1 : -1;
            case 3: return r + 1 < kSize ? cell + kSize : -1;
        }
        return -1;
    }

    // Index of the (dr, dc) offset among the eight neighbours.
    static int dir8(int from, int to) {
        const int dr = to / kSize - from / kSize;
        const int dc = to % kSize - from % kSize;
        const int v = (dr + 1) * 3 + (dc + 1);
        return v > 4 ? v - 1 : v;
    }

    void place(State& s, int agent, int cell) const {
        s.pos[static_cast<std::size_t>(agent)] = static_cast<std::int8_t>(cell);
        s.grid[static_cast<std::size_t>(cell)] = static_cast<std::int8_t>(agent + 1);
        s.key ^= pos_tab_[static_cast<std::size_t>(agent)][static_cast<std::size_t>(cell)];
    }

    void remove(State& s, int agent) const {
        const int cell = s.pos[static_cast<std::size_t>(agent)];
        s.grid[static_cast<std::size_t>(cell)] = 0;
        s.pos[static_cast<std::size_t>(agent)] = -1;
        s.key ^= pos_tab_[static_cast<std::size_t>(agent)][static_cast<std::size_t>(cell)];
    }

    void advance_cursor(State& r, PlayerId p) const {
        const int old = r.cursor[static_cast<std::size_t>(p)];
        int c = (old + 1) % kPerTeam;
        while (r.health[static_cast<std::size_t>(p * kPerTeam + c)] == 0) c = (c + 1) % kPerTeam;
        if (c != old) {
            r.key ^= cursor_tab_[static_cast<std::size_t>(p)][static_cast<std::size_t>(old)] ^
                     cursor_tab_[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)];
            r.cursor[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(c);
        }
    }

    void canonicalize_cursor(State& r, PlayerId p) const {
        const int old = r.cursor[static_cast<std::size_t>(p)];
        int c = old;
        while (r.health[static_cast<std::size_t>(p * kPerTeam + c)] == 0) c = (c + 1) % kPerTeam;
        if (c != old) {
            r.key ^= cursor_tab_[static_cast<std::size_t>(p)][static_cast<std::size_t>(old)] ^
                     cursor_tab_[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)];
            r.cursor[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(c);
        }
    }

    std::string name_;
    std::array<std::array<std::uint64_t, kCells>, kAgents> pos_tab_;
    std::array<std::array<std::uint64_t, 4>, kAgents> health_tab_;
    std::array<std::array<std::uint64_t, kPerTeam>, 2> cursor_tab_;
    std::array<std::uint64_t, 2> turn_tab_;
    std::array<std::uint64_t, kTurnCap + 1> ply_tab_;
};

}  // namespace mcps::games
