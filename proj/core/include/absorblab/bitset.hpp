#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace absorblab {

// Fixed-universe bit set over element indices 0..size-1.
// Carriers up to 64 elements use a single word; larger carriers grow the
// word vector, so the corpus cap is not a hard limit of the representation.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t universe)
        : size_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool operator==(const Bitset& o) const {
        return size_ == o.size_ && words_ == o.words_;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // Numeric order: the set interpreted as a big integer with bit i worth 2^i.
    // Used for deterministic lattice sorting and map keys.
    bool operator<(const Bitset& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        for (std::size_t k = words_.size(); k-- > 0;) {
            if (words_[k] != o.words_[k]) return words_[k] < o.words_[k];
        }
        return false;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(size_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
        return r;
    }
    Bitset operator|(const Bitset& o) const {
        Bitset r(size_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | o.words_[k];
        return r;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    bool subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & ~o.words_[k]) return false;
        }
        return true;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int b = __builtin_ctzll(w);
                out.push_back(static_cast<int>(k * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int b = __builtin_ctzll(w);
                fn(static_cast<int>(k * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    static Bitset singleton(std::size_t universe, std::size_t i) {
        Bitset b(universe);
        b.set(i);
        return b;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace absorblab
