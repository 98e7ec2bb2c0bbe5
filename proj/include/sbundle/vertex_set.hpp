#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sbundle {

// Set of vertex ids drawn from a fixed universe {0, ..., n-1}.
// O(1) membership, bitwise set algebra, iteration in ascending id order.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.words_[word(v)] |= bit(v);
        s.count_ = universe;
        return s;
    }

    int universe() const { return n_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int v) const {
        check(v);
        return (words_[word(v)] & bit(v)) != 0;
    }

    void insert(int v) {
        check(v);
        if (!(words_[word(v)] & bit(v))) {
            words_[word(v)] |= bit(v);
            ++count_;
        }
    }

    void erase(int v) {
        check(v);
        if (words_[word(v)] & bit(v)) {
            words_[word(v)] &= ~bit(v);
            --count_;
        }
    }

    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
        count_ = 0;
    }

    // Lowest id in the set, or -1 if empty.
    int first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<int>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count_));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        count_ = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= o.words_[w];
            count_ += std::popcount(words_[w]);
        }
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        count_ = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] |= o.words_[w];
            count_ += std::popcount(words_[w]);
        }
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        check_universe(o);
        count_ = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= ~o.words_[w];
            count_ += std::popcount(words_[w]);
        }
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const = default;

private:
    static std::size_t word(int v) { return static_cast<std::size_t>(v) >> 6; }
    static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: id outside universe");
    }
    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace sbundle
