#pragma once

#include <functional>

#include "balcube/family.hpp"
#include "balcube/report.hpp"

namespace balcube {

// Exact size of the largest balanced independent set in Q_n:
//   2^(n-1) - 2*C(n-2,(n-2)/2)  for even n,
//   2^(n-1) -   C(n-1,(n-1)/2)  for odd n.
Count extremal_size(int n);  // 1 <= n <= 63

// { prefix ∪ x : x ⊆ {start,...,n}, |x| = r }. Requires max(prefix) < start
// and r <= n - start + 1; r < 0 names an empty layer and yields the empty
// family.
Family prefix_layer(VertexSet prefix, int start, int n, int r);

// The constructed extremal pair: an even-side family and an odd-side family
// whose union is a maximum balanced independent set. The shape depends on
// n mod 4.
struct ExtremalPair {
    int n = 0;
    int residue = 0;  // n mod 4
    int k = 0;        // n = 4k + residue
    Family even_half;  // serialized as "A"
    Family odd_half;   // serialized as "B"

    Count size() const { return even_half.size() + odd_half.size(); }
};

// Materializes both halves; capped at n <= 30 because the halves grow like
// 2^(n-2). Size checks for larger n go through pair_counts instead.
ExtremalPair construct_pair(int n);

// Streaming view of the same pair for consumers that must not hold both
// halves in memory (the CLI at large n). Members arrive in simplicial order.
class PairStream {
public:
    explicit PairStream(int n);  // 1 <= n <= 30

    int n() const { return n_; }
    int residue() const { return n_ % 4; }
    Count even_count() const { return even_count_; }
    Count odd_count() const { return odd_count_; }

    template <class Fn>
    void each_even(Fn&& fn) const {
        walk(0, [&](std::uint64_t w) { fn(VertexSet{w}); });
    }
    template <class Fn>
    void each_odd(Fn&& fn) const {
        walk(1, [&](std::uint64_t w) { fn(VertexSet{w}); });
    }

private:
    void walk(int side, const std::function<void(std::uint64_t)>& emit) const;

    int n_;
    Count even_count_ = 0;
    Count odd_count_ = 0;
};

// Count-only sizes of the two halves by pure binomial arithmetic; n <= 63.
struct PairCounts {
    Count even_half = 0;
    Count odd_half = 0;
};
PairCounts pair_counts(int n);

// Checks the constructed pair for one n without materializing members:
//   sizes_equal        |A| = |B|
//   size_formula       |A| + |B| = extremal_size(n)
//   independent        no edge inside A ∪ B
//   balanced           equal counts on the two parity classes
//   segment_structure  A initial in the even class, B terminal in the odd
//   co_neighborhood    B = (odd class) \ N(A)
//   maximal            every vertex outside A ∪ B has a neighbor inside
// For n <= 2 the extremal size is 0 and the pair is empty; co_neighborhood
// and maximal are recorded as passing by convention there (an empty set
// cannot dominate the cube).
VerificationReport verify_pair(int n);  // 1 <= n <= 30

}  // namespace balcube
