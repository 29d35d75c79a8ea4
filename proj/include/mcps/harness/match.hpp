#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mcps/game.hpp"
#include "mcps/harness/seats.hpp"
#include "mcps/harness/stats.hpp"
#include "mcps/rng.hpp"
#include "mcps/search.hpp"

namespace mcps::harness {

struct AgentSpec {
    Algorithm algorithm = Algorithm::mcps;
    int ref = 50;
    double bias = 1e-5;
    int playouts = 0;  // 0 inherits the match-wide budget
    bool use_archive = true;
};

struct MatchConfig {
    std::string game;
    std::vector<AgentSpec> agents;  // one per seat role
    int games = 2;
    int playouts = 1000;
    std::uint64_t seed_base = 0;
    int workers = 1;
    CodeMode code_mode = CodeMode::exact;
};

struct GameResult {
    std::uint64_t seed = 0;
    std::array<int, 3> seat_perm{-1, -1, -1};  // seat -> agent
    RewardVector agent_rewards;                // indexed by agent
    int winner = -1;                           // agent with the unique top reward, -1 if shared
    int plies = 0;
    std::int64_t millis = 0;
};

struct AgentReport {
    double mean_reward = 0.0;
    double ci_half_width = 0.0;
    std::array<double, 3> seat_mean{};
    std::array<int, 3> seat_games{};
};

struct MatchReport {
    int num_players = 0;
    std::vector<GameResult> results;
    std::vector<AgentReport> agents;
};

// Thrown when a worker fails; carries whatever games had finished so the
// caller can flush a partial results file.
struct MatchFailure : std::runtime_error {
    MatchFailure(const std::string& msg, MatchReport p)
        : std::runtime_error(msg), partial(std::move(p)) {}
    MatchReport partial;
};

inline SearchConfig agent_search_config(const AgentSpec& spec, const MatchConfig& cfg) {
    SearchConfig sc;
    sc.algorithm = spec.algorithm;
    sc.playouts = spec.playouts > 0 ? spec.playouts : cfg.playouts;
    sc.ref = spec.ref;
    sc.bias = spec.bias;
    sc.code_mode = cfg.code_mode;
    sc.use_archive = spec.use_archive;
    return sc;
}

template <GameRules G>
class SearchAgent {
public:
    SearchAgent(const G& g, SearchConfig cfg) : search_(g, cfg) {}

    typename G::Move operator()(const typename G::State& s, std::uint64_t seed) {
        return search_.run(s, seed);
    }

private:
    Search<G> search_;
};

// Plays one full game. Fully deterministic given (config, seed): the agent at
// each ply draws its RNG stream from hash(seed_base, seed, ply, seat).
template <GameRules G, typename Agent>
GameResult play_game(const G& g, const MatchConfig& cfg, std::vector<Agent>& agents,
                     std::uint64_t seed) {
    const int players = g.num_players();
    const auto perm = seat_assignment(seed, players);
    const auto t0 = std::chrono::steady_clock::now();
    auto state = g.initial_state();
    int plies = 0;
    while (!g.is_terminal(state)) {
        const int seat = state.to_move;
        const int agent = perm[static_cast<std::size_t>(seat)];
        const std::uint64_t move_seed =
            mix_seed({cfg.seed_base, seed, static_cast<std::uint64_t>(plies),
                      static_cast<std::uint64_t>(seat)});
        const auto move = agents[static_cast<std::size_t>(agent)](state, move_seed);
        state = g.apply(state, move);
        ++plies;
    }
    const RewardVector seat_rewards = g.rewards(state);

    GameResult res;
    res.seed = seed;
    res.seat_perm = perm;
    res.plies = plies;
    res.agent_rewards = RewardVector(players);
    for (int seat = 0; seat < players; ++seat)
        res.agent_rewards[perm[static_cast<std::size_t>(seat)]] = seat_rewards[seat];
    double best = -1.0;
    for (int a = 0; a < players; ++a)
        if (res.agent_rewards[a] > best) best = res.agent_rewards[a];
    int top = 0;
    for (int a = 0; a < players; ++a)
        if (res.agent_rewards[a] == best) ++top;
    if (top == 1)
        for (int a = 0; a < players; ++a)
            if (res.agent_rewards[a] == best) res.winner = a;
    res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return res;
}

// Dispatches seeds seed_base .. seed_base+games-1 over a worker pool.
// `make_agent(index)` builds one agent; each worker owns a private set, so
// nothing is shared between games and the report does not depend on
// scheduling. Seat statistics and means aggregate in seed order.
template <GameRules G, typename AgentMaker>
MatchReport run_match(const G& g, const MatchConfig& cfg, AgentMaker&& make_agent) {
    if (cfg.games <= 0) throw std::invalid_argument("run_match: games must be > 0");
    const int players = g.num_players();
    std::vector<std::optional<GameResult>> slots(static_cast<std::size_t>(cfg.games));
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::mutex err_mutex;
    std::string error;

    auto work = [&]() {
        using AgentT = std::decay_t<decltype(make_agent(0))>;
        std::vector<AgentT> agents;
        agents.reserve(static_cast<std::size_t>(players));
        for (int a = 0; a < players; ++a) agents.push_back(make_agent(a));
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= cfg.games || failed.load()) break;
            try {
                slots[static_cast<std::size_t>(i)] =
                    play_game(g, cfg, agents, cfg.seed_base + static_cast<std::uint64_t>(i));
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(err_mutex);
                error = e.what();
                failed.store(true);
                break;
            }
        }
    };

    const int workers = std::max(1, std::min(cfg.workers, cfg.games));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    MatchReport rep;
    rep.num_players = players;
    for (auto& s : slots)
        if (s) rep.results.push_back(*s);
    rep.agents.assign(static_cast<std::size_t>(players), AgentReport{});
    if (!rep.results.empty()) {
        for (const GameResult& r : rep.results) {
            for (int seat = 0; seat < players; ++seat) {
                const int a = r.seat_perm[static_cast<std::size_t>(seat)];
                rep.agents[static_cast<std::size_t>(a)].mean_reward += r.agent_rewards[a];
                rep.agents[static_cast<std::size_t>(a)].seat_mean[static_cast<std::size_t>(seat)] +=
                    r.agent_rewards[a];
                rep.agents[static_cast<std::size_t>(a)].seat_games[static_cast<std::size_t>(seat)]++;
            }
        }
        const auto games = static_cast<double>(rep.results.size());
        for (AgentReport& a : rep.agents) {
            a.mean_reward /= games;
            a.ci_half_width = ci_half_width(a.mean_reward, static_cast<std::int64_t>(rep.results.size()));
            for (int seat = 0; seat < players; ++seat)
                if (a.seat_games[static_cast<std::size_t>(seat)] > 0)
                    a.seat_mean[static_cast<std::size_t>(seat)] /=
                        a.seat_games[static_cast<std::size_t>(seat)];
        }
    }
    if (failed.load()) throw MatchFailure(error, std::move(rep));
    return rep;
}

// Standard pairing: every agent is a Search configured from its AgentSpec.
template <GameRules G>
MatchReport run_search_match(const G& g, const MatchConfig& cfg) {
    if (static_cast<int>(cfg.agents.size()) != g.num_players())
        throw std::invalid_argument("run_match: agent count must equal the game's player count");
    return run_match(g, cfg, [&](int a) {
        return SearchAgent<G>(g, agent_search_config(cfg.agents[static_cast<std::size_t>(a)], cfg));
    });
}

inline std::string format_reward(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string csv_header(int players) {
    std::string h = "seed,seat_perm,winner,reward_0,reward_1";
    if (players == 3) h += ",reward_2";
    h += ",plies,millis";
    return h;
}

// One row per game, agent-indexed rewards. `winner` is the agent with the
// unique highest reward, -1 when the top reward is shared.
inline void write_csv(std::ostream& os, const MatchReport& rep) {
    os << csv_header(rep.num_players) << "\n";
    for (const GameResult& r : rep.results) {
        os << r.seed << ",";
        for (int seat = 0; seat < rep.num_players; ++seat)
            os << r.seat_perm[static_cast<std::size_t>(seat)];
        os << "," << r.winner;
        for (int a = 0; a < rep.num_players; ++a) os << "," << format_reward(r.agent_rewards[a]);
        os << "," << r.plies << "," << r.millis << "\n";
    }
}

// Timing-free summary; byte-identical across runs and worker counts.
inline nlohmann::json summary_json(const MatchConfig& cfg, const MatchReport& rep) {
    nlohmann::json agents = nlohmann::json::array();
    for (std::size_t a = 0; a < rep.agents.size(); ++a) {
        nlohmann::json j;
        if (a < cfg.agents.size()) {
            j["algorithm"] = std::string(to_string(cfg.agents[a].algorithm));
            j["ref"] = cfg.agents[a].ref;
            if (cfg.agents[a].algorithm == Algorithm::grave) j["bias"] = cfg.agents[a].bias;
            j["playouts"] = cfg.agents[a].playouts > 0 ? cfg.agents[a].playouts : cfg.playouts;
        }
        j["mean_reward"] = rep.agents[a].mean_reward;
        j["ci95_half_width"] = rep.agents[a].ci_half_width;
        nlohmann::json seats = nlohmann::json::array();
        for (int seat = 0; seat < rep.num_players; ++seat)
            seats.push_back({{"seat", seat},
                             {"games", rep.agents[a].seat_games[static_cast<std::size_t>(seat)]},
                             {"mean_reward", rep.agents[a].seat_mean[static_cast<std::size_t>(seat)]}});
        j["per_seat"] = seats;
        agents.push_back(j);
    }
    return nlohmann::json{{"game", cfg.game},
                          {"games", rep.results.size()},
                          {"playouts", cfg.playouts},
                          {"seed_base", cfg.seed_base},
                          {"code_mode", std::string(to_string(cfg.code_mode))},
                          {"agents", agents}};
}

}  // namespace mcps::harness
