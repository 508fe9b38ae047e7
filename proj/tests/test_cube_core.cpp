#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "balcube/binomial.hpp"
#include "balcube/simplicial.hpp"
#include "balcube/vertex.hpp"

using namespace balcube;

namespace {

VertexSet vs(std::initializer_list<int> elements) { return VertexSet::of(elements); }

// independent Pascal-recurrence oracle, kept apart from the library table
std::vector<std::vector<std::uint64_t>> pascal_oracle(int max_m) {
    std::vector<std::vector<std::uint64_t>> t(max_m + 1);
    for (int m = 0; m <= max_m; ++m) {
        t[m].assign(m + 1, 1);
        for (int r = 1; r < m; ++r) t[m][r] = t[m - 1][r - 1] + t[m - 1][r];
    }
    return t;
}

std::vector<int> elements_of(VertexSet x, int n) {
    std::vector<int> out;
    for (int e = 1; e <= n; ++e)
        if (x.contains(e)) out.push_back(e);
    return out;
}

std::vector<std::uint64_t> all_words(int n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t w = 0; w < (1ull << n); ++w) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("vertex text forms") {
    CHECK(to_string(vs({})) == "{}");
    CHECK(to_string(vs({1, 3, 4})) == "{1,3,4}");
    CHECK(to_hex(vs({1, 3, 4})) == "0xD");
    CHECK(to_hex(vs({})) == "0x0");
    CHECK(to_hex(VertexSet{0x123ABCull}) == "0x123ABC");
}

TEST_CASE("binomial matches the stated examples") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(6, 3) == 20);
    CHECK_THROWS_AS(binomial(65, 1), std::out_of_range);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(binomial(3, -2), std::invalid_argument);
    CHECK(binomial_or_zero(3, -2) == 0);
    CHECK(binomial_or_zero(3, 2) == 3);
}

TEST_CASE("binomial agrees with an independent Pascal recurrence") {
    const auto oracle = pascal_oracle(64);
    for (int m = 0; m <= 64; ++m)
        for (int r = 0; r <= m; ++r) REQUIRE(binomial(m, r) == oracle[m][r]);
}

TEST_CASE("binomial identities: Pascal, symmetry, row sums") {
    for (int m = 1; m <= 64; ++m)
        for (int r = 1; r <= m; ++r) REQUIRE(binomial(m, r) == binomial(m - 1, r - 1) + binomial(m - 1, r));
    for (int m = 0; m <= 64; ++m)
        for (int r = 0; r <= m; ++r) REQUIRE(binomial(m, r) == binomial(m, m - r));
    for (int m = 0; m <= 63; ++m) {
        Count sum = 0;
        for (int r = 0; r <= m; ++r) sum += binomial(m, r);
        REQUIRE(sum == pow2(m));
    }
}

TEST_CASE("checked arithmetic refuses to wrap") {
    CHECK(checked_add(3, 4) == 7);
    CHECK_THROWS_AS(checked_add(~0ull, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_sub(3, 4), std::overflow_error);
    CHECK_THROWS_AS(pow2(64), std::out_of_range);
}

TEST_CASE("simplicial comparison on the stated examples") {
    CHECK(simplicial_cmp(vs({}), vs({1})) == std::strong_ordering::less);
    CHECK(simplicial_cmp(vs({1, 2}), vs({1, 3})) == std::strong_ordering::less);
    CHECK(simplicial_cmp(vs({1, 4}), vs({2, 3})) == std::strong_ordering::less);
    CHECK(simplicial_cmp(vs({2, 3}), vs({1, 4})) == std::strong_ordering::greater);
    CHECK(simplicial_cmp(vs({1, 4}), vs({1, 4})) == std::strong_ordering::equal);
}

TEST_CASE("simplicial order is a total order agreeing with sorted element lists") {
    for (int n = 1; n <= 5; ++n) {
        const auto words = all_words(n);
        for (std::uint64_t a : words) {
            for (std::uint64_t b : words) {
                const VertexSet x{a}, y{b};
                const auto cmp = simplicial_cmp(x, y);
                REQUIRE(((cmp == std::strong_ordering::equal) == (a == b)));
                REQUIRE(simplicial_cmp(y, x) == (0 <=> cmp));
                if (x.size() == y.size() && a != b) {
                    const bool lex_less = elements_of(x, n) < elements_of(y, n);
                    REQUIRE(((cmp == std::strong_ordering::less) == lex_less));
                }
            }
        }
        // transitivity via a full sort: every earlier element is below every later one
        auto sorted = words;
        std::sort(sorted.begin(), sorted.end(),
                  [](std::uint64_t a, std::uint64_t b) { return simplicial_less(VertexSet{a}, VertexSet{b}); });
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            for (std::size_t j = i + 1; j < sorted.size(); ++j)
                REQUIRE(simplicial_less(VertexSet{sorted[i]}, VertexSet{sorted[j]}));
    }
}

TEST_CASE("layer_rank on the stated examples") {
    CHECK(layer_rank(vs({1, 2}), 4) == 0);
    CHECK(layer_rank(vs({2, 3}), 4) == 3);
    CHECK(layer_rank(vs({3, 4}), 4) == 5);
    CHECK(layer_rank(vs({}), 7) == 0);
}

TEST_CASE("layer_unrank on the stated examples") {
    CHECK(layer_unrank(4, 2, 0) == vs({1, 2}));
    CHECK(layer_unrank(4, 2, 3) == vs({2, 3}));
    CHECK(layer_unrank(4, 0, 0) == vs({}));
    CHECK_THROWS_AS(layer_unrank(4, 2, 6), std::out_of_range);
}

TEST_CASE("layer walk, ranks and unranks agree exhaustively") {
    for (int n = 0; n <= 10; ++n) {
        for (int r = 0; r <= n; ++r) {
            VertexSet x = layer_first(n, r);
            Count index = 0;
            VertexSet previous = x;
            do {
                REQUIRE(x.size() == r);
                REQUIRE(layer_rank(x, n) == index);
                REQUIRE(layer_unrank(n, r, index) == x);
                if (index > 0)  // the walk ascends in simplicial order
                    REQUIRE(simplicial_less(previous, x));
                previous = x;
                ++index;
            } while (next_in_layer(x, n));
            REQUIRE(index == binomial(n, r));
        }
    }
}

TEST_CASE("parity_rank on the stated examples") {
    CHECK(parity_rank(vs({}), 3) == 0);
    CHECK(parity_rank(vs({1, 3}), 3) == 2);
    CHECK(parity_rank(vs({1, 2, 3}), 3) == 3);
}

TEST_CASE("parity_unrank on the stated examples") {
    CHECK(parity_unrank(3, 1, 3) == vs({1, 2, 3}));
    CHECK(parity_unrank(3, 0, 0) == vs({}));
    CHECK(parity_unrank(4, 1, 7) == vs({2, 3, 4}));
    CHECK_THROWS_AS(parity_unrank(3, 0, 4), std::out_of_range);
    CHECK_THROWS_AS(parity_unrank(3, 2, 0), std::invalid_argument);
}

TEST_CASE("the parity classes enumerate in the documented order") {
    // even class of Q_3: {}, 12, 13, 23
    const std::vector<VertexSet> even3 = {vs({}), vs({1, 2}), vs({1, 3}), vs({2, 3})};
    for (Count i = 0; i < even3.size(); ++i) CHECK(parity_unrank(3, 0, i) == even3[i]);
    // odd class of Q_4: 1, 2, 3, 4, 123, 124, 134, 234
    const std::vector<VertexSet> odd4 = {vs({1}),       vs({2}),       vs({3}),       vs({4}),
                                         vs({1, 2, 3}), vs({1, 2, 4}), vs({1, 3, 4}), vs({2, 3, 4})};
    for (Count i = 0; i < odd4.size(); ++i) CHECK(parity_unrank(4, 1, i) == odd4[i]);
}

TEST_CASE("parity rank round-trips exhaustively") {
    for (int n = 1; n <= 10; ++n) {
        for (std::uint64_t w = 0; w < (1ull << n); ++w) {
            const VertexSet x{w};
            const Count rank = parity_rank(x, n);
            REQUIRE(rank < parity_class_size(n));
            REQUIRE(parity_unrank(n, x.parity(), rank) == x);
        }
        for (int parity = 0; parity <= 1; ++parity)
            for (Count k = 0; k < parity_class_size(n); ++k) {
                const VertexSet x = parity_unrank(n, parity, k);
                REQUIRE(x.parity() == parity);
                REQUIRE(parity_rank(x, n) == k);
            }
    }
}

TEST_CASE("parity_class_size on the stated examples") {
    CHECK(parity_class_size(1) == 1);
    CHECK(parity_class_size(3) == 4);
    CHECK(parity_class_size(10) == 512);
    CHECK(parity_class_size(64) == 1ull << 63);
    CHECK_THROWS_AS(parity_class_size(0), std::out_of_range);
    CHECK_THROWS_AS(parity_class_size(65), std::out_of_range);

    // n = 3 by enumeration, n = 10 by summing the even binomials
    Count even3 = 0;
    for (std::uint64_t w = 0; w < 8; ++w)
        if (VertexSet{w}.parity() == 0) ++even3;
    CHECK(parity_class_size(3) == even3);
    Count even10 = 0;
    for (int r = 0; r <= 10; r += 2) even10 += binomial(10, r);
    CHECK(parity_class_size(10) == even10);
}
