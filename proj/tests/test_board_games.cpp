#include <set>
#include <vector>

#include <catch2/catch.hpp>

#include "mcps/game.hpp"
#include "mcps/games/registry.hpp"
#include "mcps/rng.hpp"

using namespace mcps;
using namespace mcps::games;

namespace {

template <GameRules G>
int opening_count(const G& g) {
    std::vector<typename G::Move> buf;
    g.legal_moves(g.initial_state(), buf);
    return static_cast<int>(buf.size());
}

// Random play exercise: termination within the move bound, legal-move
// determinism and ordering, code stability and injectivity, reward sanity.
template <GameRules G, typename RewardCheck>
void playability_suite(const G& g, int plays, RewardCheck&& reward_ok) {
    std::vector<typename G::Move> buf, buf2;
    for (int i = 0; i < plays; ++i) {
        Xoshiro256 rng(static_cast<std::uint64_t>(i) * 977 + 13);
        auto state = g.initial_state();
        int steps = 0;
        std::vector<CodeId> codes;
        std::vector<typename G::Move> moves;
        while (!g.is_terminal(state)) {
            REQUIRE(steps <= g.max_game_length());
            g.legal_moves(state, buf);
            REQUIRE_FALSE(buf.empty());
            g.legal_moves(state, buf2);
            REQUIRE(buf == buf2);  // deterministic generation
            std::set<CodeId> seen;
            CodeId prev = -1;
            for (const auto& m : buf) {
                const CodeId c = g.code(state, m, CodeMode::exact);
                REQUIRE(c >= 0);
                REQUIRE(c < g.code_universe(CodeMode::exact));
                REQUIRE(seen.insert(c).second);  // exact codes injective per state
                REQUIRE(c > prev);               // ascending exact-code order
                prev = c;
            }
            const auto& m = buf[rng.below(static_cast<std::uint32_t>(buf.size()))];
            codes.push_back(g.code(state, m, CodeMode::exact));
            moves.push_back(m);
            state = g.apply(state, m);
            ++steps;
        }
        const RewardVector r = g.rewards(state);
        REQUIRE(r.size() == g.num_players());
        for (int p = 0; p < g.num_players(); ++p) {
            REQUIRE(r[p] >= 0.0);
            REQUIRE(r[p] <= 1.0);
        }
        reward_ok(r);

        // Replaying the recorded moves reproduces the code sequence and key.
        auto replay = g.initial_state();
        for (std::size_t k = 0; k < moves.size(); ++k) {
            REQUIRE(g.code(replay, moves[k], CodeMode::exact) == codes[k]);
            replay = g.apply(replay, moves[k]);
        }
        REQUIRE(g.state_key(replay) == g.state_key(state));
        REQUIRE(g.is_terminal(replay));
    }
}

void two_player_win_loss(const RewardVector& r) {
    const bool p0 = r[0] == 1.0 && r[1] == 0.0;
    const bool p1 = r[0] == 0.0 && r[1] == 1.0;
    REQUIRE((p0 || p1));
}

}  // namespace

TEST_CASE("opening move counts") {
    CHECK(opening_count(Atarigo(6)) == 36);
    CHECK(opening_count(Breakthrough(8)) == 22);
    CHECK(opening_count(Gomoku(9)) == 81);
    CHECK(opening_count(Hex(7)) == 1);  // forced pie-rule move
    CHECK(opening_count(Knightthrough(8)) == 40);
    CHECK(opening_count(Nogo(5, 2)) == 25);
    CHECK(opening_count(Nogo(5, 3)) == 25);

    // The first state with an actual choice in Hex offers 48 moves.
    Hex hex(7);
    std::vector<Hex::Move> buf;
    auto s = hex.apply(hex.initial_state(), Hex::Move{16});
    hex.legal_moves(s, buf);
    CHECK(buf.size() == 48);
}

TEST_CASE("contract violations throw") {
    Hex hex(7);
    std::vector<Hex::Move> buf;
    auto s = hex.initial_state();
    CHECK_THROWS_AS(hex.rewards(s), std::logic_error);
    CHECK_THROWS_AS(hex.apply(s, Hex::Move{0}), std::invalid_argument);  // must be (2,2)
    Xoshiro256 rng(3);
    auto r = simulate_playout(hex, s, rng, buf, [](const auto&, const auto&) {});
    (void)r;
    // drive one playout to the end manually to get a terminal state
    auto t = s;
    while (!hex.is_terminal(t)) {
        hex.legal_moves(t, buf);
        t = hex.apply(t, buf[0]);
    }
    CHECK_THROWS_AS(hex.legal_moves(t, buf), std::logic_error);
    CHECK_THROWS_AS(hex.apply(t, Hex::Move{0}), std::logic_error);
}

TEST_CASE("nogo placement rules") {
    // Suicide: corner (0,0) with enemy stones on (0,1) and (1,0).
    GoCells cells{};
    cells[1] = 2;
    cells[5] = 2;  // (1,0) on a 5x5 board
    CHECK_FALSE(nogo_placement_legal(cells, 5, 0, 1));
    // Capture: filling the last liberty of the enemy corner stone.
    GoCells cap{};
    cap[0] = 2;  // enemy at (0,0)
    cap[5] = 1;  // own at (1,0)
    CHECK_FALSE(nogo_placement_legal(cap, 5, 1, 1));  // (0,1) would capture
    // Plain placement elsewhere is fine.
    CHECK(nogo_placement_legal(cap, 5, 12, 1));
    // Probing restores the board.
    CHECK(cap[12] == 0);

    Nogo g(5, 2);
    auto s = g.initial_state();
    std::vector<Nogo::Move> buf;
    g.legal_moves(s, buf);
    CHECK(buf.size() == 25);
    CHECK_THROWS_AS(g.apply(s, Nogo::Move{-1}), std::invalid_argument);
}

TEST_CASE("nogo playability and stuck-player loss") {
    playability_suite(Nogo(5, 2), 60, two_player_win_loss);
}

TEST_CASE("three player nogo ends with a single winner") {
    playability_suite(Nogo(5, 3), 60, [](const RewardVector& r) {
        int winners = 0;
        for (int p = 0; p < 3; ++p) {
            REQUIRE((r[p] == 0.0 || r[p] == 1.0));
            winners += r[p] == 1.0;
        }
        REQUIRE(winners == 1);
    });
}

TEST_CASE("atarigo capture ends the game") {
    Atarigo g(6);
    auto s = g.initial_state();
    s = g.apply(s, Atarigo::Move{0});   // p0 corner (0,0)
    s = g.apply(s, Atarigo::Move{6});   // p1 (1,0)
    s = g.apply(s, Atarigo::Move{20});  // p0 elsewhere
    REQUIRE_FALSE(g.is_terminal(s));
    // (0,1) fills the corner stone's last liberty: capture, p1 wins.
    auto t = g.apply(s, Atarigo::Move{1});
    REQUIRE(g.is_terminal(t));
    CHECK(g.rewards(t) == RewardVector::win(2, 1));

    // opening move captures nothing
    auto o = g.apply(g.initial_state(), Atarigo::Move{14});
    CHECK_FALSE(g.is_terminal(o));
}

TEST_CASE("atarigo self-atari is legal when it captures nothing") {
    GoCells cells{};
    // own stone at (0,1), enemies leaving (0,0) one liberty after placement
    cells[1] = 2;
    cells[6] = 2;  // (1,0) on 6x6
    // placing at (0,0): own group liberty count 0 -> illegal suicide
    CHECK_FALSE(atarigo_placement_legal(cells, 6, 0, 1));
    // self-atari: stone at (0,0) with one liberty left is legal
    GoCells sa{};
    sa[1] = 2;  // enemy at (0,1) only
    CHECK(atarigo_placement_legal(sa, 6, 0, 1));
    CHECK_FALSE(captures_enemy(sa, 6, 1, 2));
}

TEST_CASE("atarigo playability") {
    playability_suite(Atarigo(6), 60, two_player_win_loss);
}

TEST_CASE("hex forced opening and connection detection") {
    Hex g(7);
    auto s = g.initial_state();
    std::vector<Hex::Move> buf;
    g.legal_moves(s, buf);
    REQUIRE(buf.size() == 1);
    CHECK(buf[0].cell == 2 * 7 + 2);

    // player 0 filling row 0 edge to edge connects
    auto t = g.apply(s, buf[0]);
    CHECK_FALSE(g.connected(t, 0));
    CHECK_FALSE(g.connected(t, 1));

    // Build a straight top-bottom chain for p0 in column 0 (rows 0..6), with
    // p1 answering on harmless cells that never touch the left or right edge
    // columns together.
    auto chain = g.apply(g.initial_state(), Hex::Move{16});  // forced p0 move
    const int p0_cells[] = {0, 7, 14, 21, 28, 35, 42};
    const int p1_cells[] = {44, 45, 46, 47, 48, 39, 40};
    for (int k = 0; k < 7; ++k) {
        REQUIRE_FALSE(g.is_terminal(chain));
        chain = g.apply(chain, Hex::Move{static_cast<std::int8_t>(p1_cells[k])});
        REQUIRE_FALSE(g.is_terminal(chain));
        chain = g.apply(chain, Hex::Move{static_cast<std::int8_t>(p0_cells[k])});
    }
    REQUIRE(g.is_terminal(chain));
    CHECK(g.rewards(chain) == RewardVector::win(2, 0));
    CHECK(g.connected(chain, 0));
}

TEST_CASE("hex codes are player times 49 plus cell") {
    Hex g(7);
    const auto s0 = g.initial_state();
    CHECK(g.code(s0, Hex::Move{16}, CodeMode::exact) == 16);
    CHECK(g.code(s0, Hex::Move{16}, CodeMode::abstract) == 16);
    const auto s1 = g.apply(s0, Hex::Move{16});
    CHECK(g.code(s1, Hex::Move{3}, CodeMode::exact) == 49 + 3);
    CHECK(g.code_universe(CodeMode::exact) == 98);
}

TEST_CASE("gomoku: the 81st stone without a line is a draw") {
    // Striped tiling with runs of at most two in every direction: even rows
    // give player 0 columns {0,1} mod 4, odd rows columns {2,3} mod 4.
    Gomoku g(9);
    std::vector<int> p0_cells, p1_cells;
    for (int c = 0; c < 81; ++c) {
        const int row = c / 9;
        const int col = c % 9;
        const bool mine = row % 2 == 0 ? (col % 4 == 0 || col % 4 == 1)
                                       : (col % 4 == 2 || col % 4 == 3);
        (mine ? p0_cells : p1_cells).push_back(c);
    }
    REQUIRE(p0_cells.size() == 41);
    REQUIRE(p1_cells.size() == 40);
    auto s = g.initial_state();
    for (std::size_t i = 0; i < 40; ++i) {
        s = g.apply(s, Gomoku::Move{static_cast<std::int8_t>(p0_cells[i])});
        REQUIRE_FALSE(g.is_terminal(s));
        s = g.apply(s, Gomoku::Move{static_cast<std::int8_t>(p1_cells[i])});
        REQUIRE_FALSE(g.is_terminal(s));
    }
    s = g.apply(s, Gomoku::Move{static_cast<std::int8_t>(p0_cells[40])});
    REQUIRE(g.is_terminal(s));
    CHECK(s.ply == 81);
    CHECK(g.rewards(s) == RewardVector::draw(2));
}

TEST_CASE("hex full boards have exactly one winner") {
    Hex g(7);
    Xoshiro256 rng(17);
    for (int fill = 0; fill < 1000; ++fill) {
        Hex::State s{};
        // random full coloring, roughly balanced
        for (int c = 0; c < 49; ++c)
            s.cells[static_cast<std::size_t>(c)] = static_cast<std::int8_t>(1 + rng.below(2));
        const bool c0 = g.connected(s, 0);
        const bool c1 = g.connected(s, 1);
        REQUIRE(c0 != c1);
    }
}

TEST_CASE("hex playability: always a decisive result") {
    playability_suite(Hex(7), 60, two_player_win_loss);
}

TEST_CASE("gomoku lines and draws") {
    Gomoku g(9);
    auto s = g.initial_state();
    // p0 builds (0,0)..(0,4); p1 answers on row 8
    const int p0_cells[] = {0, 1, 2, 4, 5};
    const int p1_cells[] = {72, 73, 74, 76, 77};
    for (int i = 0; i < 5; ++i) {
        s = g.apply(s, Gomoku::Move{static_cast<std::int8_t>(p0_cells[i])});
        REQUIRE_FALSE(g.is_terminal(s));
        s = g.apply(s, Gomoku::Move{static_cast<std::int8_t>(p1_cells[i])});
        REQUIRE_FALSE(g.is_terminal(s));
    }
    // four in a row is not a win; completing the gap makes SIX, an overline win
    auto t = g.apply(s, Gomoku::Move{3});
    REQUIRE(g.is_terminal(t));
    CHECK(g.line_through(t, 3) == 6);
    CHECK(g.rewards(t) == RewardVector::win(2, 0));
}

TEST_CASE("gomoku playability with draw handling") {
    Gomoku g(9);
    playability_suite(g, 60, [](const RewardVector& r) {
        const bool win = (r[0] == 1.0 && r[1] == 0.0) || (r[0] == 0.0 && r[1] == 1.0);
        const bool draw = r[0] == 0.5 && r[1] == 0.5;
        REQUIRE((win || draw));
    });
    // direction-scan oracle on random terminals
    Xoshiro256 rng(5);
    std::vector<Gomoku::Move> buf;
    for (int i = 0; i < 40; ++i) {
        auto s = g.initial_state();
        Gomoku::Move last{};
        while (!g.is_terminal(s)) {
            g.legal_moves(s, buf);
            last = buf[rng.below(static_cast<std::uint32_t>(buf.size()))];
            s = g.apply(s, last);
        }
        if (g.rewards(s)[0] == 0.5) {
            CHECK(s.ply == 81);
            for (int c = 0; c < 81; ++c) REQUIRE(g.line_through(s, c) < 5);
        } else {
            REQUIRE(g.line_through(s, last.cell) >= 5);
        }
    }
}

TEST_CASE("breakthrough move generation") {
    Breakthrough g(8);
    auto s = g.initial_state();
    std::vector<Breakthrough::Move> buf;
    g.legal_moves(s, buf);
    CHECK(buf.size() == 22);

    // straight moves only to empty cells, diagonals may capture
    Breakthrough::State blocked{};
    blocked.cells[8 * 3 + 4] = 1;  // p0 pawn at (3,4)
    blocked.cells[8 * 4 + 4] = 2;  // enemy straight ahead
    blocked.cells[8 * 4 + 3] = 2;  // enemy on both diagonals
    blocked.cells[8 * 4 + 5] = 2;
    blocked.pieces = {1, 3};
    blocked.to_move = 0;
    g.legal_moves(blocked, buf);
    REQUIRE(buf.size() == 2);
    for (const auto& m : buf) CHECK(m.to % 8 != m.from % 8);

    // reaching the last row wins
    Breakthrough::State race{};
    race.cells[8 * 6 + 2] = 1;
    race.cells[8 * 1 + 6] = 2;
    race.pieces = {1, 1};
    race.to_move = 0;
    auto win = g.apply(race, Breakthrough::Move{8 * 6 + 2, 8 * 7 + 2});
    REQUIRE(g.is_terminal(win));
    CHECK(g.rewards(win) == RewardVector::win(2, 0));

    // capturing the last enemy pawn wins immediately
    Breakthrough::State last{};
    last.cells[8 * 3 + 3] = 1;
    last.cells[8 * 4 + 4] = 2;
    last.pieces = {1, 1};
    last.to_move = 0;
    auto capt = g.apply(last, Breakthrough::Move{8 * 3 + 3, 8 * 4 + 4});
    REQUIRE(g.is_terminal(capt));
    CHECK(g.rewards(capt) == RewardVector::win(2, 0));
}

TEST_CASE("breakthrough playability and the move-always-exists property") {
    playability_suite(Breakthrough(8), 60, two_player_win_loss);
}

TEST_CASE("knightthrough move generation") {
    Knightthrough g(8);
    auto s = g.initial_state();
    std::vector<Knightthrough::Move> buf;
    g.legal_moves(s, buf);
    CHECK(buf.size() == 40);

    // jumps are forward-only for both players
    Xoshiro256 rng(23);
    for (int i = 0; i < 200; ++i) {
        if (g.is_terminal(s)) s = g.initial_state();
        g.legal_moves(s, buf);
        for (const auto& m : buf) {
            const int dr = m.to / 8 - m.from / 8;
            if (s.to_move == 0)
                REQUIRE(dr >= 1);
            else
                REQUIRE(dr <= -1);
            REQUIRE((std::abs(dr) == 1 || std::abs(dr) == 2));
        }
        s = g.apply(s, buf[rng.below(static_cast<std::uint32_t>(buf.size()))]);
    }

    // a knight on the opponent's second row can win by jumping to the last row
    Knightthrough::State race{};
    race.cells[8 * 6 + 3] = 1;
    race.cells[8 * 0 + 7] = 2;
    race.pieces = {1, 1};
    race.to_move = 0;
    g.legal_moves(race, buf);
    bool winning = false;
    for (const auto& m : buf)
        if (m.to / 8 == 7) {
            auto t = g.apply(race, m);
            REQUIRE(g.is_terminal(t));
            CHECK(g.rewards(t) == RewardVector::win(2, 0));
            winning = true;
        }
    REQUIRE(winning);
}

TEST_CASE("knightthrough playability") {
    playability_suite(Knightthrough(8), 60, two_player_win_loss);
}

TEST_CASE("transpositions share keys, different positions do not") {
    Gomoku g(9);
    auto a = g.apply(g.apply(g.apply(g.initial_state(), Gomoku::Move{10}), Gomoku::Move{20}),
                     Gomoku::Move{30});
    auto b = g.apply(g.apply(g.apply(g.initial_state(), Gomoku::Move{30}), Gomoku::Move{20}),
                     Gomoku::Move{10});
    CHECK(g.state_key(a) == g.state_key(b));
    auto c = g.apply(g.apply(g.apply(g.initial_state(), Gomoku::Move{10}), Gomoku::Move{20}),
                     Gomoku::Move{31});
    CHECK(g.state_key(a) != g.state_key(c));

    Hex h(7);
    auto h1 = h.apply(h.initial_state(), Hex::Move{16});
    auto h2 = h.apply(h1, Hex::Move{3});
    CHECK(h.state_key(h1) != h.state_key(h2));
    CHECK(h.state_key(h1) != h.state_key(h.initial_state()));
}

TEST_CASE("state keys rarely collide across random play") {
    // Keys across thousands of distinct states: byte-level identity of
    // (position, to_move) is what separates them.
    Gomoku g(9);
    Xoshiro256 rng(31);
    std::vector<Gomoku::Move> buf;
    std::set<std::uint64_t> keys;
    std::set<std::pair<std::array<std::int8_t, 81>, int>> states;
    for (int i = 0; i < 60; ++i) {
        auto s = g.initial_state();
        while (!g.is_terminal(s)) {
            g.legal_moves(s, buf);
            s = g.apply(s, buf[rng.below(static_cast<std::uint32_t>(buf.size()))]);
            keys.insert(g.state_key(s));
            states.insert({s.cells, s.to_move});
        }
    }
    CHECK(keys.size() == states.size());
}
