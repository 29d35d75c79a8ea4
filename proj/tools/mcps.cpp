// Command-line front end: deterministic matches between configured agents and
// code-presence statistics over uniform random playouts.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mcps/games/registry.hpp"
#include "mcps/harness/codestats.hpp"
#include "mcps/harness/match.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

// Agent syntax: "mcps:ref=50" or "grave:ref=50,bias=1e-5,playouts=2000".
bool parse_agent(const std::string& text, mcps::harness::AgentSpec& spec, std::string& err) {
    std::string algo = text;
    std::string params;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        algo = text.substr(0, colon);
        params = text.substr(colon + 1);
    }
    if (!mcps::parse_algorithm(algo, spec.algorithm)) {
        err = "unknown algorithm '" + algo + "' (expected mcps or grave)";
        return false;
    }
    std::size_t pos = 0;
    while (pos < params.size()) {
        auto comma = params.find(',', pos);
        if (comma == std::string::npos) comma = params.size();
        const std::string kv = params.substr(pos, comma - pos);
        pos = comma + 1;
        if (kv.empty()) continue;
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            err = "expected key=value in agent parameter '" + kv + "'";
            return false;
        }
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        try {
            if (key == "ref")
                spec.ref = std::stoi(value);
            else if (key == "bias")
                spec.bias = std::stod(value);
            else if (key == "playouts")
                spec.playouts = std::stoi(value);
            else if (key == "archive")
                spec.use_archive = value == "on" || value == "true" || value == "1";
            else {
                err = "unknown agent parameter '" + key + "'";
                return false;
            }
        } catch (const std::exception&) {
            err = "bad value for agent parameter '" + key + "'";
            return false;
        }
    }
    return true;
}

void print_match_summary(const mcps::harness::MatchConfig& cfg,
                         const mcps::harness::MatchReport& rep) {
    std::printf("game=%s games=%zu playouts=%d code_mode=%s\n", cfg.game.c_str(),
                rep.results.size(), cfg.playouts, std::string(to_string(cfg.code_mode)).c_str());
    for (std::size_t a = 0; a < rep.agents.size(); ++a) {
        const auto& ar = rep.agents[a];
        std::string label = a < cfg.agents.size()
                                ? std::string(to_string(cfg.agents[a].algorithm)) +
                                      ":ref=" + std::to_string(cfg.agents[a].ref)
                                : "agent";
        std::printf("agent %zu (%s): %.2f%% +- %.2f%%  seats:", a, label.c_str(),
                    100.0 * ar.mean_reward, 100.0 * ar.ci_half_width);
        for (int seat = 0; seat < rep.num_players; ++seat)
            std::printf(" [%d] %.2f%% (%d games)", seat,
                        100.0 * ar.seat_mean[static_cast<std::size_t>(seat)],
                        ar.seat_games[static_cast<std::size_t>(seat)]);
        std::printf("\n");
    }
}

bool write_output(const std::string& path, const std::string& format,
                  const mcps::harness::MatchConfig& cfg, const mcps::harness::MatchReport& rep,
                  std::string& err) {
    std::ofstream os(path);
    if (!os) {
        err = "cannot open output file '" + path + "'";
        return false;
    }
    if (format == "csv")
        mcps::harness::write_csv(os, rep);
    else
        os << mcps::harness::summary_json(cfg, rep).dump(2) << "\n";
    return static_cast<bool>(os);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo tree-search laboratory: GRAVE and MCPS agents over a common game suite"};
    app.require_subcommand(1);

    auto* match = app.add_subcommand("match", "Run a deterministic agent-vs-agent tournament");
    std::string game;
    std::vector<std::string> agent_texts;
    mcps::harness::MatchConfig mcfg;
    std::string code_mode = "exact";
    std::string out_path;
    std::string format = "csv";
    mcfg.workers = static_cast<int>(std::thread::hardware_concurrency());
    if (mcfg.workers < 1) mcfg.workers = 1;
    match->add_option("--game", game, "Game name (e.g. hex7, nogo5, wargame-10)")->required();
    match->add_option("--agent", agent_texts,
                      "Agent spec per seat role: mcps:ref=50 or grave:ref=50,bias=1e-5")
        ->required();
    match->add_option("--playouts", mcfg.playouts, "Tree walks per move (default 1000)");
    match->add_option("--games", mcfg.games, "Number of games")->required();
    match->add_option("--seed-base", mcfg.seed_base, "First seed; seeds run seed_base..seed_base+games-1");
    match->add_option("--code-mode", code_mode, "exact|abstract|specific")
        ->check(CLI::IsMember({"exact", "abstract", "specific"}));
    match->add_option("--workers", mcfg.workers, "Parallel games (default: hardware threads)");
    match->add_option("--out", out_path, "Results file");
    match->add_option("--format", format, "csv (per game) or json (summary)")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* codestats = app.add_subcommand("codestats", "Code presence statistics over random playouts");
    std::string cs_game;
    int cs_playouts = 10000;
    std::uint64_t cs_seed = 0;
    std::string cs_out;
    codestats->add_option("--game", cs_game, "Game name")->required();
    codestats->add_option("--playouts", cs_playouts, "Number of playouts (default 10000)");
    codestats->add_option("--seed", cs_seed, "RNG seed");
    codestats->add_option("--out", cs_out, "JSON report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitConfig;
    }

    try {
        if (match->parsed()) {
            mcfg.game = game;
            mcps::parse_code_mode(code_mode, mcfg.code_mode);
            for (const std::string& text : agent_texts) {
                mcps::harness::AgentSpec spec;
                std::string err;
                if (!parse_agent(text, spec, err)) {
                    std::fprintf(stderr, "error: %s\n", err.c_str());
                    return kExitConfig;
                }
                mcfg.agents.push_back(spec);
            }
            int rc = 0;
            const bool known = mcps::games::with_game(game, [&](const auto& g) {
                if (static_cast<int>(mcfg.agents.size()) != g.num_players()) {
                    std::fprintf(stderr, "error: %s needs %d agents, got %zu\n", game.c_str(),
                                 g.num_players(), mcfg.agents.size());
                    rc = kExitConfig;
                    return;
                }
                if (!g.has_mode(mcfg.code_mode)) {
                    std::fprintf(stderr, "error: %s has no '%s' code mode\n", game.c_str(),
                                 code_mode.c_str());
                    rc = kExitConfig;
                    return;
                }
                try {
                    const auto rep = run_search_match(g, mcfg);
                    print_match_summary(mcfg, rep);
                    std::string err;
                    if (!out_path.empty() && !write_output(out_path, format, mcfg, rep, err)) {
                        std::fprintf(stderr, "error: %s\n", err.c_str());
                        rc = kExitRuntime;
                    }
                } catch (const mcps::harness::MatchFailure& f) {
                    std::fprintf(stderr, "error: match aborted: %s\n", f.what());
                    if (!out_path.empty()) {
                        std::string err;
                        if (write_output(out_path, format, mcfg, f.partial, err))
                            std::fprintf(stderr, "partial results (%zu games) written to %s\n",
                                         f.partial.results.size(), out_path.c_str());
                        else
                            std::fprintf(stderr, "error: %s\n", err.c_str());
                    }
                    rc = kExitRuntime;
                }
            });
            if (!known) {
                std::fprintf(stderr, "error: unknown game '%s'; known games:", game.c_str());
                for (auto n : mcps::games::game_names())
                    std::fprintf(stderr, " %s", std::string(n).c_str());
                std::fprintf(stderr, "\n");
                return kExitConfig;
            }
            return rc;
        }

        if (codestats->parsed()) {
            int rc = 0;
            const bool known = mcps::games::with_game(cs_game, [&](const auto& g) {
                const auto rep = mcps::harness::code_frequency_stats(g, cs_playouts, cs_seed);
                const auto j = mcps::harness::codestats_json(rep);
                std::cout << j.dump(2) << "\n";
                if (!cs_out.empty()) {
                    std::ofstream os(cs_out);
                    if (!os) {
                        std::fprintf(stderr, "error: cannot open output file '%s'\n",
                                     cs_out.c_str());
                        rc = kExitRuntime;
                        return;
                    }
                    os << j.dump(2) << "\n";
                }
            });
            if (!known) {
                std::fprintf(stderr, "error: unknown game '%s'\n", cs_game.c_str());
                return kExitConfig;
            }
            return rc;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
    return 0;
}
