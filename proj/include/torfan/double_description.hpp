#pragma once

#include "torfan/linalg.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace torfan {

/// Extreme rays (modulo lineality) and a lineality basis of {x : A x >= 0, E x = 0}.
/// Raw output: vectors are primitive but not canonically ordered or reduced.
struct RawGenerators {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};

/// Double description with lexicographic insertion order of the inequalities and the
/// combinatorial adjacency test. Equations are eliminated first.
RawGenerators double_description(std::size_t dim, std::span<const IntVector> inequalities,
                                 std::span<const IntVector> equations);

/// Fixed-capacity bitset over constraint indices.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set_first(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) set(i);
    }
    [[nodiscard]] bool subset_of(const Bitset& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }
    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    friend Bitset operator&(const Bitset& a, const Bitset& b) {
        Bitset r = a;
        for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] &= b.words_[w];
        return r;
    }
    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace torfan
