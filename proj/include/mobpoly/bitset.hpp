#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mobpoly {

// Dynamic set of small non-negative integers, stored as 64-bit words.
// Always kept trimmed (no trailing zero words), so equality and hashing
// are plain word comparisons.
class Bitset {
public:
    Bitset() = default;

    static Bitset from_mask(std::uint64_t mask) {
        Bitset b;
        if (mask) b.w_.push_back(mask);
        return b;
    }

    static Bitset singleton(std::size_t i) {
        Bitset b;
        b.set(i);
        return b;
    }

    bool test(std::size_t i) const {
        std::size_t w = i >> 6;
        return w < w_.size() && ((w_[w] >> (i & 63)) & 1u);
    }

    void set(std::size_t i) {
        std::size_t w = i >> 6;
        if (w >= w_.size()) w_.resize(w + 1, 0);
        w_[w] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        std::size_t w = i >> 6;
        if (w < w_.size()) {
            w_[w] &= ~(std::uint64_t{1} << (i & 63));
            trim();
        }
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const { return w_.empty(); }

    friend Bitset operator|(const Bitset& a, const Bitset& b) {
        const Bitset& big = a.w_.size() >= b.w_.size() ? a : b;
        const Bitset& small = a.w_.size() >= b.w_.size() ? b : a;
        Bitset r = big;
        for (std::size_t i = 0; i < small.w_.size(); ++i) r.w_[i] |= small.w_[i];
        return r;
    }

    friend Bitset operator&(const Bitset& a, const Bitset& b) {
        Bitset r;
        std::size_t n = a.w_.size() < b.w_.size() ? a.w_.size() : b.w_.size();
        r.w_.resize(n);
        for (std::size_t i = 0; i < n; ++i) r.w_[i] = a.w_[i] & b.w_[i];
        r.trim();
        return r;
    }

    // Set difference: elements of a not in b.
    friend Bitset minus(const Bitset& a, const Bitset& b) {
        Bitset r = a;
        std::size_t n = a.w_.size() < b.w_.size() ? a.w_.size() : b.w_.size();
        for (std::size_t i = 0; i < n; ++i) r.w_[i] &= ~b.w_[i];
        r.trim();
        return r;
    }

    bool is_subset_of(const Bitset& other) const {
        if (w_.size() > other.w_.size()) {
            for (std::size_t i = other.w_.size(); i < w_.size(); ++i)
                if (w_[i]) return false;
        }
        std::size_t n = w_.size() < other.w_.size() ? w_.size() : other.w_.size();
        for (std::size_t i = 0; i < n; ++i)
            if (w_[i] & ~other.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        std::size_t n = w_.size() < other.w_.size() ? w_.size() : other.w_.size();
        for (std::size_t i = 0; i < n; ++i)
            if (w_[i] & other.w_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& other) const = default;

    // Ascending list of member positions.
    std::vector<int> bits() const {
        std::vector<int> out;
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each_bit(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(static_cast<std::size_t>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    struct Hash {
        std::size_t operator()(const Bitset& b) const {
            std::uint64_t h = 0x9e3779b97f4a7c15ull;
            for (std::uint64_t w : b.w_) {
                h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

    // Numeric-value comparison (most significant word first).
    friend std::strong_ordering value_order(const Bitset& a, const Bitset& b) {
        if (a.w_.size() != b.w_.size())
            return a.w_.size() <=> b.w_.size();
        for (std::size_t i = a.w_.size(); i-- > 0;) {
            if (a.w_[i] != b.w_[i]) return a.w_[i] <=> b.w_[i];
        }
        return std::strong_ordering::equal;
    }

private:
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    std::vector<std::uint64_t> w_;
};

// Canonical order used everywhere sets are listed: by cardinality,
// then by numeric value. A linear extension of subset order.
struct CanonicalLess {
    bool operator()(const Bitset& a, const Bitset& b) const {
        std::size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return value_order(a, b) == std::strong_ordering::less;
    }
};

} // namespace mobpoly
