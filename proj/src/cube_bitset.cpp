#include "balcube/cube_bitset.hpp"

#include <bit>
#include <stdexcept>

namespace balcube {

namespace {

// positions whose bit i is clear, i = 0..5; delta-swapping with these
// realizes "XOR all positions with 2^i" inside one word
constexpr std::array<std::uint64_t, 6> kDelta = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

constexpr std::uint64_t delta_swap(std::uint64_t w, int i) {
    const int s = 1 << i;
    return ((w & kDelta[i]) << s) | ((w >> s) & kDelta[i]);
}

// offsets 0..63 with popcount j
constexpr auto build_offset_layers() {
    std::array<std::uint64_t, 7> t{};
    for (int o = 0; o < 64; ++o) t[std::popcount(static_cast<unsigned>(o))] |= 1ull << o;
    return t;
}
constexpr auto kOffsetLayers = build_offset_layers();

static_assert(kOffsetLayers[0] + kOffsetLayers[2] + kOffsetLayers[4] + kOffsetLayers[6] == kEvenOffsets);

// mask selecting the positions of word `w` whose vertices have `parity`
constexpr std::uint64_t parity_select(std::size_t word_index, int parity) {
    if (parity < 0) return ~0ull;
    const int word_parity = std::popcount(word_index) & 1;
    return (word_parity ^ parity) ? ~kEvenOffsets : kEvenOffsets;
}

}  // namespace

CubeBitset::CubeBitset(int n) : n_(n) {
    if (n < 1 || n > 30) throw std::out_of_range("CubeBitset: ground size outside [1,30]");
    const std::uint64_t bits = 1ull << n;
    words_.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
}

Count CubeBitset::count() const {
    Count total = 0;
    for (std::uint64_t w : words_) total += static_cast<Count>(std::popcount(w));
    return total;
}

void CubeBitset::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::uint64_t CubeBitset::word_mask(std::size_t) const {
    return n_ >= 6 ? ~0ull : ground_mask(1 << n_);
}

void CubeBitset::accumulate_neighborhood(CubeBitset& out, const CubeBitset& src, int parity) {
    if (out.n_ != src.n_) throw std::invalid_argument("accumulate_neighborhood: mismatched ground sizes");
    if (&out == &src) throw std::invalid_argument("accumulate_neighborhood: output must not alias input");
    const int n = src.n_;
    const std::size_t nwords = src.words_.size();
    for (int b = 0; b < n; ++b) {
        if (b < 6) {
            for (std::size_t w = 0; w < nwords; ++w) {
                const std::uint64_t v = src.words_[w] & parity_select(w, parity);
                out.words_[w] |= delta_swap(v, b);
            }
        } else {
            const std::size_t word_xor = std::size_t{1} << (b - 6);
            for (std::size_t w = 0; w < nwords; ++w) {
                const std::size_t sw = w ^ word_xor;
                out.words_[w] |= src.words_[sw] & parity_select(sw, parity);
            }
        }
    }
}

std::array<Count, 65> CubeBitset::layer_counts() const {
    std::array<Count, 65> counts{};
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const std::uint64_t v = words_[w];
        if (v == 0) continue;
        const int base = std::popcount(w);
        for (int j = 0; j < 7; ++j) {
            const int c = std::popcount(v & kOffsetLayers[j]);
            if (c) counts[base + j] += static_cast<Count>(c);
        }
    }
    return counts;
}

std::pair<Count, Count> CubeBitset::parity_counts() const {
    Count even = 0, odd = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const std::uint64_t v = words_[w];
        if (v == 0) continue;
        const Count e = static_cast<Count>(std::popcount(v & parity_select(w, 0)));
        even += e;
        odd += static_cast<Count>(std::popcount(v)) - e;
    }
    return {even, odd};
}

}  // namespace balcube
