#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mcps/archive.hpp"
#include "mcps/bitset.hpp"
#include "mcps/game.hpp"
#include "mcps/node.hpp"
#include "mcps/rng.hpp"
#include "mcps/types.hpp"
#include "mcps/weights.hpp"

namespace mcps {

enum class Algorithm { grave, mcps };

inline std::string_view to_string(Algorithm a) {
    return a == Algorithm::grave ? "grave" : "mcps";
}

inline bool parse_algorithm(std::string_view s, Algorithm& out) {
    if (s == "grave") { out = Algorithm::grave; return true; }
    if (s == "mcps") { out = Algorithm::mcps; return true; }
    return false;
}

struct SearchConfig {
    Algorithm algorithm = Algorithm::mcps;
    int playouts = 1000;      // tree walks per decision; also the archive capacity
    int ref = 50;             // visit threshold selecting the AMAF reference ancestor
    double bias = 1e-5;       // GRAVE only; MCPS has no bias term
    CodeMode code_mode = CodeMode::exact;
    std::uint64_t seed = 0;
    bool use_archive = true;  // MCPS only; false forces the permutation term to zero
};

template <GameRules G>
struct SearchNode {
    int visits = 0;
    int last_processed = 0;  // archive prefix already folded into the perm stats
    bool terminal = false;
    RewardVector terminal_rewards;
    std::vector<typename G::Move> moves;  // legal moves, ascending exact code
    std::vector<CodeId> codes;            // per-move code in the search's mode
    CodeStatTable stats;
};

// One search instance owns its transposition table, archive and RNG stream and
// is strictly single-threaded; run concurrent searches on separate instances.
// The tree and the archive are cleared at the start of every run().
template <GameRules G>
class Search {
public:
    using State = typename G::State;
    using Move = typename G::Move;
    using Node = SearchNode<G>;

    Search(const G& game, SearchConfig cfg) : game_(&game), cfg_(cfg) {
        if (cfg_.playouts < 1) throw std::invalid_argument("Search: playouts must be >= 1");
        if (cfg_.ref < 0) throw std::invalid_argument("Search: ref must be >= 0");
        if (!game.has_mode(cfg_.code_mode))
            throw std::invalid_argument("Search: game does not provide this code mode");
    }

    Move run(const State& root, std::uint64_t seed) {
        cfg_.seed = seed;
        return run(root);
    }

    Move run(const State& root) {
        if (game_->is_terminal(root)) throw std::logic_error("Search: root is terminal");
        const bool with_archive = cfg_.algorithm == Algorithm::mcps && cfg_.use_archive;
        tree_.clear();
        archive_.reset(with_archive ? cfg_.playouts : 0);
        mask_.reset(with_archive ? cfg_.playouts : 0);
        rng_ = Xoshiro256(cfg_.seed);
        const std::uint64_t root_key = game_->state_key(root);
        make_node(root_key, root);
        for (int i = 0; i < cfg_.playouts; ++i) walk(root, root_key, with_archive);
        return choose_root_move(root, root_key);
    }

    const SearchConfig& config() const { return cfg_; }
    const PlayoutArchive& archive() const { return archive_; }
    std::size_t tree_size() const { return tree_.size(); }

    const Node* find_node(std::uint64_t key) const {
        auto it = tree_.find(key);
        return it == tree_.end() ? nullptr : &it->second;
    }

    template <typename Fn>
    void for_each_node(Fn&& fn) const {
        for (const auto& [key, node] : tree_) fn(key, node);
    }

    // Test hooks. on_perm_update fires after a node's permutation statistics
    // were brought up to date, with the descent mask and the codes of the path
    // leading to the node. on_archive_insert fires before a record is archived.
    std::function<void(const Node&, const PlayoutBitset&, std::span<const CodeId>, int)>
        on_perm_update;
    std::function<void(std::span<const CodeId>, const RewardVector&)> on_archive_insert;

private:
    void walk(const State& root, std::uint64_t root_key, bool with_archive) {
        const int players = game_->num_players();
        if (with_archive) mask_.fill_first(archive_.count());

        State state = root;
        Node* node = &tree_.at(root_key);
        Node* ref_node = node;
        path_.clear();
        record_.clear();
        RewardVector result;
        bool resolved = false;

        for (;;) {
            path_.push_back(node);
            if (node->terminal) {
                result = node->terminal_rewards;
                resolved = true;
                break;
            }
            if (node->visits > cfg_.ref) ref_node = node;
            if (with_archive) update_perm(*node);
            const int pick = select(*node, state, *ref_node);
            const CodeId code = node->codes[static_cast<std::size_t>(pick)];
            record_.push_back(code);
            if (with_archive) mask_refine(mask_, archive_, code);
            state = game_->apply(state, node->moves[static_cast<std::size_t>(pick)]);
            const std::uint64_t key = game_->state_key(state);
            auto it = tree_.find(key);
            if (it == tree_.end()) {
                Node& leaf = make_node(key, state);
                path_.push_back(&leaf);
                if (leaf.terminal) {
                    result = leaf.terminal_rewards;
                    resolved = true;
                }
                break;
            }
            node = &it->second;
        }

        if (!resolved) {
            result = simulate_playout(*game_, state, rng_, move_buf_,
                                      [&](const State& s, const Move& m) {
                                          record_.push_back(game_->code(s, m, cfg_.code_mode));
                                      });
        }
        backpropagate(result, players);
        if (with_archive) {
            if (on_archive_insert) on_archive_insert(record_, result);
            archive_.insert(record_, result);
        }
    }

    Node& make_node(std::uint64_t key, const State& s) {
        Node& nd = tree_[key];
        nd.terminal = game_->is_terminal(s);
        if (nd.terminal) {
            nd.terminal_rewards = game_->rewards(s);
            return nd;
        }
        game_->legal_moves(s, nd.moves);
        nd.codes.clear();
        nd.codes.reserve(nd.moves.size());
        for (const Move& m : nd.moves) nd.codes.push_back(game_->code(s, m, cfg_.code_mode));
        return nd;
    }

    void update_perm(Node& node) {
        const int total = archive_.count();
        if (node.last_processed < total) {
            const int players = game_->num_players();
            for (CodeId c : node.codes) {
                StatEntry& e = node.stats.at(c);
                accumulate_matches(archive_, mask_, c, node.last_processed, total, players,
                                   e.perm_n, e.perm_w);
            }
            node.last_processed = total;
        }
        if (on_perm_update) on_perm_update(node, mask_, record_, total);
    }

    // Argmax of the blended values. A code with no statistics at all gets the
    // first-play-urgency value; ties among such untried moves break uniformly
    // at random, every other tie keeps the first move in legal order.
    int select(Node& node, const State& state, Node& ref_node) {
        const PlayerId mover = state.to_move;
        const bool is_grave = cfg_.algorithm == Algorithm::grave;
        const bool with_archive = !is_grave && cfg_.use_archive;
        const double bias = is_grave ? cfg_.bias : 0.0;
        const int m = static_cast<int>(node.codes.size());
        values_.resize(static_cast<std::size_t>(m));
        untried_.resize(static_cast<std::size_t>(m));
        double best = -1.0;
        for (int i = 0; i < m; ++i) {
            const CodeId c = node.codes[static_cast<std::size_t>(i)];
            const StatEntry* own = node.stats.find(c);
            const StatEntry* ref = (&node == &ref_node) ? own : ref_node.stats.find(c);
            const std::int32_t n = own ? own->n : 0;
            const std::int32_t an = ref ? ref->amaf_n : 0;
            const std::int32_t pn = (with_archive && own) ? own->perm_n : 0;
            double v;
            bool fresh = n == 0 && an == 0 && pn == 0;
            if (fresh) {
                v = kFirstPlayUrgency;
            } else {
                const double q = n > 0 ? own->w[static_cast<std::size_t>(mover)] / n : 0.0;
                const double aq = an > 0 ? ref->amaf_w[static_cast<std::size_t>(mover)] / an : 0.0;
                if (pn == 0) {
                    // GRAVE blend; also the n_hat == 0 limit of the MCPS blend,
                    // evaluated with the same expression so that MCPS without an
                    // archive plays move-for-move like GRAVE with bias 0.
                    const double beta = grave_beta(an, n, bias);
                    v = (1.0 - beta) * q + beta * aq;
                } else {
                    const double pq = own->perm_w[static_cast<std::size_t>(mover)] / pn;
                    const Weights wt = mcps_weights(n, an, pn);
                    v = wt.alpha * q + wt.beta * aq + wt.gamma * pq;
                }
            }
            values_[static_cast<std::size_t>(i)] = v;
            untried_[static_cast<std::size_t>(i)] = fresh ? 1 : 0;
            if (v > best) best = v;
        }
        int first = -1;
        int tied = 0;
        bool all_untried = true;
        for (int i = 0; i < m; ++i) {
            if (values_[static_cast<std::size_t>(i)] != best) continue;
            if (first < 0) first = i;
            ++tied;
            all_untried = all_untried && untried_[static_cast<std::size_t>(i)] != 0;
        }
        if (tied > 1 && all_untried) {
            std::uint32_t k = rng_.below(static_cast<std::uint32_t>(tied));
            for (int i = 0; i < m; ++i) {
                if (values_[static_cast<std::size_t>(i)] != best) continue;
                if (k == 0) return i;
                --k;
            }
        }
        return first;
    }

    // Every node on the path gets one more visit. The node at depth d credits
    // the move chosen there (record_[d]) and, for the AMAF tables, every
    // distinct code from depth d to the end of the playout.
    void backpropagate(const RewardVector& r, int players) {
        for (Node* nd : path_) nd->visits += 1;
        const std::size_t limit = std::min(path_.size(), record_.size());
        for (std::size_t d = 0; d < limit; ++d) {
            StatEntry& e = path_[d]->stats.at(record_[d]);
            e.n += 1;
            for (int p = 0; p < players; ++p) e.w[static_cast<std::size_t>(p)] += r[p];
        }
        amaf_seen_.clear();
        for (int i = static_cast<int>(record_.size()) - 1; i >= 0; --i) {
            amaf_seen_.insert(record_[static_cast<std::size_t>(i)]);
            if (i < static_cast<int>(path_.size())) {
                Node* nd = path_[static_cast<std::size_t>(i)];
                for (CodeId c : amaf_seen_.items()) {
                    StatEntry& e = nd->stats.at(c);
                    e.amaf_n += 1;
                    for (int p = 0; p < players; ++p)
                        e.amaf_w[static_cast<std::size_t>(p)] += r[p];
                }
            }
        }
    }

    // Most-visited root move; ties by higher mean, then by lower code, then by
    // legal-move order.
    Move choose_root_move(const State& root, std::uint64_t root_key) const {
        const Node& rn = tree_.at(root_key);
        const PlayerId mover = root.to_move;
        int best_i = -1;
        std::int32_t best_n = 0;
        double best_q = -1.0;
        CodeId best_c = 0;
        for (std::size_t i = 0; i < rn.codes.size(); ++i) {
            const CodeId c = rn.codes[i];
            const StatEntry* e = rn.stats.find(c);
            const std::int32_t n = e ? e->n : 0;
            if (n == 0) continue;
            const double q = e->w[static_cast<std::size_t>(mover)] / n;
            const bool better =
                best_i < 0 || n > best_n ||
                (n == best_n && (q > best_q || (q == best_q && c < best_c)));
            if (better) {
                best_i = static_cast<int>(i);
                best_n = n;
                best_q = q;
                best_c = c;
            }
        }
        if (best_i < 0) throw std::logic_error("Search: no visited root move");
        return rn.moves[static_cast<std::size_t>(best_i)];
    }

    const G* game_;
    SearchConfig cfg_;
    std::unordered_map<std::uint64_t, Node> tree_;
    PlayoutArchive archive_;
    PlayoutBitset mask_;
    Xoshiro256 rng_;

    std::vector<Node*> path_;
    std::vector<CodeId> record_;
    std::vector<Move> move_buf_;
    std::vector<double> values_;
    std::vector<std::uint8_t> untried_;
    CodeSet amaf_seen_;
};

}  // namespace mcps
