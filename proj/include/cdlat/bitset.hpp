#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cdlat {

// Dense bit set over element indices 0..n-1. Element sets and subgroup members
// are always stored this way; the universe size is fixed at construction.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe)
        : n_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    Bitset operator|(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // Canonical order used for lattice ids: at the first differing element
    // index, the set that contains it sorts first.
    static bool lex_less(const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return (a.words_[i] & low) != 0;
            }
        }
        return false;
    }

    // Visit set bits in ascending index order.
    template <typename F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t w : words_) {
            h ^= static_cast<std::size_t>(w);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace cdlat
