#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "balcube/binomial.hpp"
#include "balcube/vertex.hpp"

namespace balcube {

// Offsets 0..63 whose popcount is even; the same pattern decides vertex
// parity inside a 64-bit block of the cube (vertex parity = word-index
// parity XOR offset parity).
inline constexpr std::uint64_t kEvenOffsets = 0x9669699669969669ull;

// Dense indicator over all 2^n vertices of Q_n, keyed by the vertex word.
//
// The neighborhood of a set is the union of n images under "XOR every
// position with 2^(i-1)"; for i > 6 that permutation is a plain word swap
// and below it is an in-word delta swap, so N(S) costs n linear passes.
class CubeBitset {
public:
    explicit CubeBitset(int n);

    int ground() const { return n_; }
    std::uint64_t universe() const { return 1ull << n_; }

    bool test(std::uint64_t v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(std::uint64_t v) { words_[v >> 6] |= 1ull << (v & 63); }
    bool test_and_set(std::uint64_t v) {
        std::uint64_t& w = words_[v >> 6];
        const std::uint64_t bit = 1ull << (v & 63);
        const bool had = w & bit;
        w |= bit;
        return had;
    }

    Count count() const;
    void clear();

    // out |= N(src), optionally restricted to the members of src with the
    // given popcount parity (-1 = all of src). `out` may not alias `src`.
    static void accumulate_neighborhood(CubeBitset& out, const CubeBitset& src, int parity = -1);

    // member count per layer (= per popcount of the vertex word)
    std::array<Count, 65> layer_counts() const;

    // members of even / odd popcount
    std::pair<Count, Count> parity_counts() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    // valid positions of word w (only the last word of a small cube is partial)
    std::uint64_t word_mask(std::size_t w) const;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace balcube
