#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "mcps/game.hpp"
#include "mcps/rng.hpp"
#include "mcps/types.hpp"

namespace mcps::harness {

struct ModeFrequency {
    // Mean distinct codes per playout divided by the universe of codes observed
    // across all sampled playouts.
    double frequency = 0.0;
    double mean_distinct = 0.0;
    std::int64_t universe_observed = 0;
};

struct CodeStatsReport {
    std::string game;
    int playouts = 0;
    std::uint64_t seed = 0;
    int opening_moves = 0;
    double mean_length = 0.0;
    ModeFrequency exact;
    ModeFrequency abstract_codes;
    std::optional<ModeFrequency> specific;
};

namespace detail {

struct ModeAccumulator {
    std::unordered_map<CodeId, int> containing;  // code -> number of playouts containing it
    double sum_distinct = 0.0;

    void add_playout(std::vector<CodeId>& codes) {
        std::sort(codes.begin(), codes.end());
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        for (CodeId c : codes) containing[c] += 1;
        sum_distinct += static_cast<double>(codes.size());
    }

    ModeFrequency finish(int playouts) const {
        ModeFrequency out;
        out.universe_observed = static_cast<std::int64_t>(containing.size());
        out.mean_distinct = sum_distinct / playouts;
        if (out.universe_observed > 0)
            out.frequency = out.mean_distinct / static_cast<double>(out.universe_observed);
        return out;
    }
};

}  // namespace detail

// Skips the forced prefix of a game: states offering exactly one legal move
// (such as a pie-rule opening) hold no statistics, so sampling starts where
// random choice does.
template <GameRules G>
typename G::State statistics_start_state(const G& g) {
    auto state = g.initial_state();
    std::vector<typename G::Move> buf;
    for (int guard = g.max_game_length(); guard > 0; --guard) {
        if (g.is_terminal(state)) break;
        g.legal_moves(state, buf);
        if (buf.size() != 1) break;
        state = g.apply(state, buf[0]);
    }
    return state;
}

// Uniform random playouts from the first state with a real choice; reports the
// mean playout length, the opening move count and per-mode code presence
// statistics.
template <GameRules G>
CodeStatsReport code_frequency_stats(const G& g, int playouts, std::uint64_t seed) {
    if (playouts <= 0) throw std::invalid_argument("code_frequency_stats: playouts must be > 0");
    CodeStatsReport rep;
    rep.game = std::string(g.name());
    rep.playouts = playouts;
    rep.seed = seed;

    const auto start = statistics_start_state(g);
    std::vector<typename G::Move> buf;
    g.legal_moves(start, buf);
    rep.opening_moves = static_cast<int>(buf.size());

    const bool has_specific = g.has_mode(CodeMode::specific);
    detail::ModeAccumulator exact, abstract_codes, specific;
    Xoshiro256 rng(mix_seed({seed, 0x636f6465ULL}));
    std::vector<CodeId> ex, ab, sp;
    double total_length = 0.0;
    for (int i = 0; i < playouts; ++i) {
        ex.clear();
        ab.clear();
        sp.clear();
        int length = 0;
        simulate_playout(g, start, rng, buf,
                         [&](const typename G::State& s, const typename G::Move& m) {
                             ++length;
                             ex.push_back(g.code(s, m, CodeMode::exact));
                             ab.push_back(g.code(s, m, CodeMode::abstract));
                             if (has_specific) sp.push_back(g.code(s, m, CodeMode::specific));
                         });
        total_length += length;
        exact.add_playout(ex);
        abstract_codes.add_playout(ab);
        if (has_specific) specific.add_playout(sp);
    }
    rep.mean_length = total_length / playouts;
    rep.exact = exact.finish(playouts);
    rep.abstract_codes = abstract_codes.finish(playouts);
    if (has_specific) rep.specific = specific.finish(playouts);
    return rep;
}

inline nlohmann::json codestats_json(const CodeStatsReport& rep) {
    auto mode = [](const ModeFrequency& m) {
        return nlohmann::json{{"frequency", m.frequency},
                              {"mean_distinct", m.mean_distinct},
                              {"universe_observed", m.universe_observed}};
    };
    nlohmann::json j{{"game", rep.game},
                     {"playouts", rep.playouts},
                     {"seed", rep.seed},
                     {"opening_moves", rep.opening_moves},
                     {"mean_length", rep.mean_length},
                     {"exact", mode(rep.exact)},
                     {"abstract", mode(rep.abstract_codes)}};
    if (rep.specific) j["specific"] = mode(*rep.specific);
    return j;
}

}  // namespace mcps::harness
