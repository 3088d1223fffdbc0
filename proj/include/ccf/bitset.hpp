#ifndef CCF_BITSET_HPP
#define CCF_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace ccf {

// Fixed-size bit set over ids [0, size). Backs adjacency rows and clique
// membership tests; everything here is branch-light on purpose.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // every set bit except `skip` is also set in o
    bool is_subset_of_except(const Bitset& o, int skip) const {
        const std::size_t skip_word = static_cast<std::size_t>(skip) >> 6;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t stray = words_[i] & ~o.words_[i];
            if (i == skip_word) stray &= ~(std::uint64_t{1} << (skip & 63));
            if (stray) return false;
        }
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    bool operator==(const Bitset&) const = default;

    // Lowest set bit, -1 if none.
    int first() const { return scan(0); }
    // Lowest set bit strictly above i, -1 if none.
    int next(int i) const { return scan(i + 1); }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for (int i = first(); i != -1; i = next(i)) v.push_back(i);
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int scan(int from) const {
        if (from >= size_) return -1;
        std::size_t w = static_cast<std::size_t>(from) >> 6;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (bits) return static_cast<int>(w * 64) + std::countr_zero(bits);
            if (++w >= words_.size()) return -1;
            bits = words_[w];
        }
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ccf

#endif
