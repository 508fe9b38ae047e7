#pragma once

#include <compare>
#include <stdexcept>

#include "balcube/binomial.hpp"
#include "balcube/vertex.hpp"

namespace balcube {

// Simplicial order: x < y iff |x| < |y|, or the sizes tie and the smallest
// element of the symmetric difference lies in x (lex, small elements first).
// Never compare the raw words numerically; that is a different order.
constexpr std::strong_ordering simplicial_cmp(VertexSet x, VertexSet y) {
    if (x.size() != y.size()) return x.size() <=> y.size();
    const std::uint64_t diff = x.bits ^ y.bits;
    if (diff == 0) return std::strong_ordering::equal;
    const std::uint64_t lowest = diff & (0 - diff);
    return (x.bits & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

constexpr bool simplicial_less(VertexSet x, VertexSet y) {
    return simplicial_cmp(x, y) == std::strong_ordering::less;
}

// Both parity classes of Q_n have exactly 2^(n-1) vertices.
constexpr Count parity_class_size(int n) {
    if (n < 1 || n > 64) throw std::out_of_range("parity_class_size: n outside [1,64]");
    return 1ull << (n - 1);
}

// 0-based position of x among the |x|-subsets of [n] in lex order, by the
// closed-form summation over skipped elements (no enumeration).
constexpr Count layer_rank(VertexSet x, int n) {
    if (n < 0 || n > 64) throw std::out_of_range("layer_rank: n outside [0,64]");
    if (!x.fits(n)) throw std::invalid_argument("layer_rank: vertex has elements beyond ground size");
    const int k = x.size();
    Count rank = 0;
    int placed = 0;
    for (int e = 1; e <= n && placed < k; ++e) {
        if (x.contains(e))
            ++placed;
        else
            rank += binomial(n - e, k - placed - 1);
    }
    return rank;
}

// Inverse of layer_rank within layer r of [n].
constexpr VertexSet layer_unrank(int n, int r, Count k) {
    if (n < 0 || n > 64) throw std::out_of_range("layer_unrank: n outside [0,64]");
    if (r < 0 || r > n) throw std::out_of_range("layer_unrank: layer outside [0,n]");
    if (k >= binomial(n, r)) throw std::out_of_range("layer_unrank: rank beyond layer size");
    VertexSet out{};
    int remaining = r;
    for (int e = 1; remaining > 0; ++e) {
        const Count with_e = binomial(n - e, remaining - 1);
        if (k < with_e) {
            out.bits |= 1ull << (e - 1);
            --remaining;
        } else {
            k -= with_e;
        }
    }
    return out;
}

// Position of x within its parity class under the simplicial order: all
// same-parity layers below |x|, then the lex rank inside the layer.
constexpr Count parity_rank(VertexSet x, int n) {
    Count rank = layer_rank(x, n);
    for (int j = x.parity(); j < x.size(); j += 2) rank = checked_add(rank, binomial(n, j));
    return rank;
}

// Inverse of parity_rank over the class of the given parity.
constexpr VertexSet parity_unrank(int n, int parity, Count k) {
    if (parity != 0 && parity != 1) throw std::invalid_argument("parity_unrank: parity must be 0 or 1");
    if (k >= parity_class_size(n)) throw std::out_of_range("parity_unrank: rank beyond class size");
    for (int j = parity; j <= n; j += 2) {
        const Count layer = binomial(n, j);
        if (k < layer) return layer_unrank(n, j, k);
        k -= layer;
    }
    throw std::logic_error("parity_unrank: unreachable");
}

// Lex-first r-subset of [n]: the lowest r elements.
constexpr VertexSet layer_first(int n, int r) {
    if (r < 0 || r > n) throw std::out_of_range("layer_first: layer outside [0,n]");
    return VertexSet{ground_mask(r)};
}

// Advance x to its lex successor within its layer; false at the last subset.
// The successor lifts the highest non-top-packed element and re-packs the
// tail right above it.
constexpr bool next_in_layer(VertexSet& x, int n) {
    const std::uint64_t vacant = ~x.bits & ground_mask(n);
    if (vacant == 0) return false;  // full layer has a single subset
    const int highest_vacant = 63 - std::countl_zero(vacant);
    const std::uint64_t below = x.bits & (highest_vacant == 0 ? 0 : (1ull << highest_vacant) - 1);
    if (below == 0) return false;  // everything packed at the top: last subset
    const int pivot = 63 - std::countl_zero(below);
    const int packed = highest_vacant >= 63 ? 0 : std::popcount(x.bits >> (highest_vacant + 1));
    x.bits = (x.bits & ((1ull << pivot) - 1)) | (((1ull << (packed + 1)) - 1) << (pivot + 1));
    return true;
}

}  // namespace balcube
