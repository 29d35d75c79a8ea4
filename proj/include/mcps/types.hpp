#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace mcps {

using PlayerId = int;
using CodeId = std::int32_t;

inline constexpr int kMaxPlayers = 3;

// Move codes come in up to three granularities. `exact` is injective over the
// move as played, `abstract` deliberately merges moves that share their key
// features, `specific` is an intermediate granularity some games provide.
enum class CodeMode { exact, abstract, specific };

inline std::string_view to_string(CodeMode m) {
    switch (m) {
        case CodeMode::exact: return "exact";
        case CodeMode::abstract: return "abstract";
        case CodeMode::specific: return "specific";
    }
    return "?";
}

inline bool parse_code_mode(std::string_view s, CodeMode& out) {
    if (s == "exact") { out = CodeMode::exact; return true; }
    if (s == "abstract") { out = CodeMode::abstract; return true; }
    if (s == "specific") { out = CodeMode::specific; return true; }
    return false;
}

// Per-player terminal reward, each entry in [0, 1].
class RewardVector {
public:
    RewardVector() = default;

    explicit RewardVector(int players) : n_(players) {
        if (players < 1 || players > kMaxPlayers)
            throw std::invalid_argument("RewardVector: bad player count");
    }

    static RewardVector win(int players, PlayerId winner) {
        RewardVector r(players);
        r.v_[static_cast<std::size_t>(winner)] = 1.0;
        return r;
    }

    static RewardVector draw(int players) {
        RewardVector r(players);
        for (int p = 0; p < players; ++p) r.v_[static_cast<std::size_t>(p)] = 0.5;
        return r;
    }

    double operator[](PlayerId p) const { return v_[static_cast<std::size_t>(p)]; }
    double& operator[](PlayerId p) { return v_[static_cast<std::size_t>(p)]; }
    int size() const { return n_; }

    bool operator==(const RewardVector&) const = default;

private:
    std::array<double, kMaxPlayers> v_{};
    int n_ = 0;
};

// Mixing weights over move, AMAF and permutation statistics.
struct Weights {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

}  // namespace mcps
