#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mcps/rng.hpp"
#include "mcps/types.hpp"

namespace mcps {

// Contract every game implements. States are immutable values: apply() returns
// the successor and never touches its argument, which is what makes search
// instances freely movable across threads.
//
// legal_moves must fill `buf` in ascending exact-code order, never be empty for
// a non-terminal state, and both it and rewards() throw std::logic_error when
// called on the wrong side of is_terminal(). state_key() folds the position
// and the player to move into a 64-bit incremental hash.
template <typename G>
concept GameRules = requires(const G g, const typename G::State& s, typename G::Move m,
                             std::vector<typename G::Move>& buf, CodeMode mode) {
    requires std::copyable<typename G::State>;
    requires std::equality_comparable<typename G::Move>;
    { g.name() } -> std::convertible_to<std::string_view>;
    { g.num_players() } -> std::convertible_to<int>;
    { g.initial_state() } -> std::same_as<typename G::State>;
    { g.is_terminal(s) } -> std::same_as<bool>;
    { g.rewards(s) } -> std::same_as<RewardVector>;
    { g.legal_moves(s, buf) } -> std::same_as<void>;
    { g.apply(s, m) } -> std::same_as<typename G::State>;
    { g.code(s, m, mode) } -> std::same_as<CodeId>;
    { g.code_universe(mode) } -> std::convertible_to<std::int64_t>;
    { g.has_mode(mode) } -> std::same_as<bool>;
    { g.state_key(s) } -> std::same_as<std::uint64_t>;
    { g.max_game_length() } -> std::convertible_to<int>;
    { s.to_move } -> std::convertible_to<PlayerId>;
    { s.ply } -> std::convertible_to<int>;
};

// Uniform random playout. `on_move(state, move)` is invoked before each step;
// callers record whatever codes they need there. Throws if the game fails to
// terminate within its declared move bound.
template <GameRules G, typename OnMove>
RewardVector simulate_playout(const G& g, typename G::State state, Xoshiro256& rng,
                              std::vector<typename G::Move>& buf, OnMove&& on_move) {
    int guard = g.max_game_length() + 1;
    while (!g.is_terminal(state)) {
        if (--guard < 0) throw std::logic_error("simulate_playout: move bound exceeded");
        g.legal_moves(state, buf);
        const auto& m = buf[rng.below(static_cast<std::uint32_t>(buf.size()))];
        on_move(state, m);
        state = g.apply(state, m);
    }
    return g.rewards(state);
}

}  // namespace mcps
