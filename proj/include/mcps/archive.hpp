#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mcps/bitset.hpp"
#include "mcps/types.hpp"

namespace mcps {

// One finished simulation: every move code from the root to the terminal
// state, in order, plus the terminal reward of each player.
struct PlayoutRecord {
    std::vector<CodeId> codes;
    RewardVector rewards;
    int index = 0;
};

// Column-per-playout membership index. Bit (code, i) is set iff playout i
// contains the code at least once. Bitsets are allocated lazily on the first
// appearance of a code, sized to the archive capacity.
class PlayoutArchive {
public:
    PlayoutArchive() = default;

    explicit PlayoutArchive(int capacity) { reset(capacity); }

    void reset(int capacity) {
        capacity_ = capacity;
        count_ = 0;
        rewards_.clear();
        rewards_.reserve(static_cast<std::size_t>(capacity));
        membership_.clear();
    }

    int count() const { return count_; }
    int capacity() const { return capacity_; }

    // Duplicate codes in one record are idempotent: the bit is just set twice.
    void insert(std::span<const CodeId> codes, const RewardVector& rewards) {
        if (count_ >= capacity_)
            throw std::logic_error("PlayoutArchive: capacity exceeded");
        const int index = count_;
        for (CodeId c : codes) {
            auto [it, fresh] = membership_.try_emplace(c);
            if (fresh) it->second.reset(capacity_);
            it->second.set(index);
        }
        rewards_.push_back(rewards);
        ++count_;
    }

    const PlayoutBitset* membership(CodeId code) const {
        auto it = membership_.find(code);
        return it == membership_.end() ? nullptr : &it->second;
    }

    const RewardVector& rewards_of(int playout) const {
        return rewards_[static_cast<std::size_t>(playout)];
    }

private:
    int capacity_ = 0;
    int count_ = 0;
    std::vector<RewardVector> rewards_;
    std::unordered_map<CodeId, PlayoutBitset> membership_;
};

// Narrows a descent mask to the playouts that also contain `code`. A code that
// never appeared in any archived playout empties the mask.
inline void mask_refine(PlayoutBitset& mask, const PlayoutArchive& archive, CodeId code) {
    if (const PlayoutBitset* m = archive.membership(code)) {
        mask.and_with(*m);
    } else {
        mask.clear();
    }
}

// Folds playouts with index in [from, to) that are both in `mask` and contain
// `code` into (n, w). Playouts are visited in increasing index order, so
// incremental accumulation reproduces a from-scratch pass bit for bit.
inline void accumulate_matches(const PlayoutArchive& archive, const PlayoutBitset& mask,
                               CodeId code, int from, int to, int players,
                               std::int32_t& n, std::array<double, 3>& w) {
    if (from >= to) return;
    const PlayoutBitset* mem = archive.membership(code);
    if (mem == nullptr) return;
    const auto mask_words = mask.words();
    const auto mem_words = mem->words();
    const std::size_t w0 = static_cast<std::size_t>(from) >> 6;
    const std::size_t w1 = static_cast<std::size_t>(to - 1) >> 6;
    for (std::size_t wi = w0; wi <= w1; ++wi) {
        std::uint64_t bits = mask_words[wi] & mem_words[wi];
        if (wi == w0 && (from & 63)) bits &= ~std::uint64_t{0} << (from & 63);
        if (wi == w1 && (to & 63)) bits &= (std::uint64_t{1} << (to & 63)) - 1;
        while (bits) {
            const int i = static_cast<int>(wi << 6) + std::countr_zero(bits);
            bits &= bits - 1;
            const RewardVector& r = archive.rewards_of(i);
            ++n;
            for (int p = 0; p < players; ++p) w[static_cast<std::size_t>(p)] += r[p];
        }
    }
}

}  // namespace mcps
