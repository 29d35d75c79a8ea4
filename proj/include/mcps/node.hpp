#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "mcps/types.hpp"

namespace mcps {

// Per-code statistics held by one tree node. `n/w` count playouts that start
// with the code at this node, `amaf_n/amaf_w` playouts below the node that
// contain it anywhere, `perm_n/perm_w` archived playouts that contain it
// together with every code on the path to the node. Reward sums are stored per
// player so selection can read the mean for whoever is to move.
struct StatEntry {
    std::int32_t n = 0;
    std::int32_t amaf_n = 0;
    std::int32_t perm_n = 0;
    std::array<double, 3> w{};
    std::array<double, 3> amaf_w{};
    std::array<double, 3> perm_w{};
};

// Open-addressing map from code to StatEntry. Codes are non-negative; -1 marks
// an empty slot. Nodes near the root accumulate a few hundred entries, deep
// nodes a handful, so linear probing beats std::unordered_map by a wide margin
// in both memory and lookup cost.
class CodeStatTable {
public:
    StatEntry& at(CodeId code) {
        if (slots_.empty() || size_ * 4 >= slots_.size() * 3) grow();
        std::size_t i = probe(code);
        if (slots_[i].code != code) {
            slots_[i].code = code;
            slots_[i].entry = StatEntry{};
            ++size_;
        }
        return slots_[i].entry;
    }

    const StatEntry* find(CodeId code) const {
        if (slots_.empty()) return nullptr;
        const std::size_t mask = slots_.size() - 1;
        std::size_t i = hash(code) & mask;
        while (slots_[i].code != kEmpty) {
            if (slots_[i].code == code) return &slots_[i].entry;
            i = (i + 1) & mask;
        }
        return nullptr;
    }

    std::size_t size() const { return size_; }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const Slot& s : slots_)
            if (s.code != kEmpty) fn(s.code, s.entry);
    }

private:
    static constexpr CodeId kEmpty = -1;

    struct Slot {
        CodeId code = kEmpty;
        StatEntry entry;
    };

    static std::size_t hash(CodeId code) {
        std::uint64_t z = static_cast<std::uint64_t>(code) * 0x9e3779b97f4a7c15ULL;
        return static_cast<std::size_t>(z >> 32);
    }

    std::size_t probe(CodeId code) const {
        const std::size_t mask = slots_.size() - 1;
        std::size_t i = hash(code) & mask;
        while (slots_[i].code != kEmpty && slots_[i].code != code) i = (i + 1) & mask;
        return i;
    }

    void grow() {
        std::vector<Slot> old = std::move(slots_);
        slots_.assign(old.empty() ? 16 : old.size() * 2, Slot{});
        for (Slot& s : old) {
            if (s.code == kEmpty) continue;
            std::size_t i = probe(s.code);
            slots_[i] = std::move(s);
        }
    }

    std::vector<Slot> slots_;
    std::size_t size_ = 0;
};

// Small insert-only code set with iteration, reused across playouts.
class CodeSet {
public:
    void clear() {
        std::fill(table_.begin(), table_.end(), kEmpty);
        list_.clear();
    }

    // Returns true when the code was not yet present.
    bool insert(CodeId code) {
        if (table_.empty() || (list_.size() + 1) * 4 >= table_.size() * 3) grow();
        std::size_t i = slot_of(code);
        if (table_[i] == code) return false;
        table_[i] = code;
        list_.push_back(code);
        return true;
    }

    const std::vector<CodeId>& items() const { return list_; }

private:
    static constexpr CodeId kEmpty = -1;

    std::size_t slot_of(CodeId code) const {
        const std::size_t mask = table_.size() - 1;
        std::uint64_t z = static_cast<std::uint64_t>(code) * 0x9e3779b97f4a7c15ULL;
        std::size_t i = static_cast<std::size_t>(z >> 32) & mask;
        while (table_[i] != kEmpty && table_[i] != code) i = (i + 1) & mask;
        return i;
    }

    void grow() {
        std::size_t cap = table_.empty() ? 32 : table_.size() * 2;
        table_.assign(cap, kEmpty);
        for (CodeId c : list_) table_[slot_of(c)] = c;
    }

    std::vector<CodeId> table_;
    std::vector<CodeId> list_;
};

}  // namespace mcps
