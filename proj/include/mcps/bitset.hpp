#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace mcps {

// Fixed-capacity bitset over playout indices. Capacity is the simulation
// budget, so one extra word per code is the whole memory story.
class PlayoutBitset {
public:
    PlayoutBitset() = default;

    explicit PlayoutBitset(int capacity_bits) { reset(capacity_bits); }

    void reset(int capacity_bits) {
        bits_ = capacity_bits;
        words_.assign(word_count(capacity_bits), 0);
    }

    void clear() { std::fill(words_.begin(), words_.end(), std::uint64_t{0}); }

    // Sets bits [0, count) and clears the rest.
    void fill_first(int count) {
        assert(count <= bits_);
        const int full = count >> 6;
        const int rem = count & 63;
        std::size_t i = 0;
        for (; i < static_cast<std::size_t>(full); ++i) words_[i] = ~std::uint64_t{0};
        if (i < words_.size()) {
            words_[i] = rem ? ((std::uint64_t{1} << rem) - 1) : 0;
            ++i;
        }
        for (; i < words_.size(); ++i) words_[i] = 0;
    }

    void set(int i) {
        assert(i >= 0 && i < bits_);
        words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    bool test(int i) const {
        assert(i >= 0 && i < bits_);
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
    }

    void and_with(const PlayoutBitset& o) {
        assert(o.bits_ == bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    int capacity() const { return bits_; }

    std::span<const std::uint64_t> words() const { return words_; }

    static std::size_t word_count(int bits) {
        return static_cast<std::size_t>((bits + 63) / 64);
    }

private:
    std::vector<std::uint64_t> words_;
    int bits_ = 0;
};

}  // namespace mcps
