#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "balcube/family.hpp"
#include "balcube/rng.hpp"
#include "balcube/serialize.hpp"

using namespace balcube;

namespace {

VertexSet vs(std::initializer_list<int> elements) { return VertexSet::of(elements); }

Family fam(int n, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<VertexSet> members;
    for (const auto& s : sets) members.push_back(VertexSet::of(s));
    return Family(n, std::move(members));
}

// one parity class as a Family
Family parity_class(int n, int parity) {
    std::vector<VertexSet> members;
    for (Count k = 0; k < parity_class_size(n); ++k) members.push_back(parity_unrank(n, parity, k));
    return Family(n, std::move(members));
}

// family from a bitmask over the parity ranks of one class
Family class_subset(int n, int parity, std::uint32_t mask) {
    std::vector<VertexSet> members;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) members.push_back(parity_unrank(n, parity, i));
    return Family(n, std::move(members));
}

// maximal independent set grown greedily along a seeded random vertex order
Family random_maximal_independent(int n, std::uint64_t seed) {
    std::vector<std::uint64_t> order;
    for (std::uint64_t w = 0; w < (1ull << n); ++w) order.push_back(w);
    SplitMix64 rng(seed);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<VertexSet> chosen;
    auto adjacent_to_chosen = [&](std::uint64_t w) {
        for (const VertexSet c : chosen)
            if (std::popcount(c.bits ^ w) == 1) return true;
        return false;
    };
    for (std::uint64_t w : order)
        if (!adjacent_to_chosen(w)) chosen.push_back(VertexSet{w});
    return Family(n, std::move(chosen));
}

}  // namespace

TEST_CASE("construction sorts, deduplicates, and ignores insertion order") {
    const Family a(4, {vs({2, 3}), vs({}), vs({1, 2}), vs({2, 3}), vs({})});
    CHECK(a.size() == 3);
    CHECK(a.members() == std::vector<VertexSet>{vs({}), vs({1, 2}), vs({2, 3})});
    const Family b(4, {vs({1, 2}), vs({2, 3}), vs({})});
    CHECK(a == b);
    CHECK(a.contains(vs({2, 3})));
    CHECK_FALSE(a.contains(vs({1, 3})));
    CHECK_THROWS_AS(Family(3, {vs({4})}), std::invalid_argument);
}

TEST_CASE("neighborhood on the stated examples") {
    CHECK(neighborhood(fam(3, {{}})) == fam(3, {{1}, {2}, {3}}));
    CHECK(neighborhood(fam(3, {{1, 2}})) == fam(3, {{1}, {2}, {1, 2, 3}}));
    CHECK(neighborhood(fam(4, {{}, {1, 2}})) == fam(4, {{1}, {2}, {3}, {4}, {1, 2, 3}, {1, 2, 4}}));
}

TEST_CASE("co_neighborhood on the stated examples") {
    CHECK(co_neighborhood(fam(3, {{}})) == fam(3, {{1, 2, 3}}));
    CHECK(co_neighborhood(fam(4, {{}, {1, 2}})) == fam(4, {{1, 3, 4}, {2, 3, 4}}));
    CHECK(co_neighborhood(Family(3)) == parity_class(3, 1));  // empty family counts as even-sided
    CHECK_THROWS_AS(co_neighborhood(fam(3, {{}, {1}})), std::invalid_argument);
}

TEST_CASE("segment on the stated examples") {
    CHECK(segment({4, 0, SegmentSpec::Kind::initial, 2}) == fam(4, {{}, {1, 2}}));
    CHECK(segment({4, 1, SegmentSpec::Kind::terminal, 2}) == fam(4, {{1, 3, 4}, {2, 3, 4}}));
    CHECK(segment({3, 0, SegmentSpec::Kind::initial, 0}) == Family(3));
    CHECK_THROWS_AS(segment({3, 0, SegmentSpec::Kind::initial, 5}), std::out_of_range);
}

TEST_CASE("segments nest") {
    for (int n = 1; n <= 10; ++n)
        for (int parity = 0; parity <= 1; ++parity) {
            const Family whole = segment({n, parity, SegmentSpec::Kind::initial, parity_class_size(n)});
            for (Count m = 0; m <= parity_class_size(n); ++m) {
                const Family part = segment({n, parity, SegmentSpec::Kind::initial, m});
                REQUIRE(part.size() == m);
                REQUIRE(std::equal(part.begin(), part.end(), whole.begin()));
            }
        }
}

TEST_CASE("is_independent on the stated examples") {
    CHECK(is_independent(fam(3, {{}, {1, 2, 3}})));
    CHECK_FALSE(is_independent(fam(3, {{}, {1}})));
    CHECK(is_independent(parity_class(4, 0)));
}

TEST_CASE("is_balanced on the stated examples") {
    CHECK(is_balanced(Family(3)));
    CHECK(is_balanced(fam(3, {{}, {1, 2, 3}})));
    CHECK_FALSE(is_balanced(fam(3, {{}, {1, 2}})));
}

TEST_CASE("is_maximal_independent on small cases") {
    CHECK(is_maximal_independent(parity_class(3, 0)));
    // {} ∪ {1,2,3} dominates Q_3: singletons touch {}, pairs touch {1,2,3}
    CHECK(is_maximal_independent(fam(3, {{}, {1, 2, 3}})));
    CHECK_FALSE(is_maximal_independent(fam(3, {{}})));        // {1,2,3} has no neighbor inside
    CHECK_FALSE(is_maximal_independent(fam(3, {{1, 2}})));    // {} has no neighbor inside
    CHECK(is_maximal_independent(fam(1, {{}})));
    CHECK_THROWS_AS(is_maximal_independent(fam(3, {{}, {1}})), std::invalid_argument);
}

TEST_CASE("is_terminal_segment on the stated examples") {
    CHECK(is_terminal_segment(fam(4, {{1, 3, 4}, {2, 3, 4}})));
    CHECK_FALSE(is_terminal_segment(fam(4, {{1}, {2, 3, 4}})));
    CHECK(is_terminal_segment(Family(4)));
    CHECK_THROWS_AS(is_terminal_segment(fam(4, {{}, {1}})), std::invalid_argument);
}

TEST_CASE("one-sided neighborhoods flip parity and never shrink") {
    for (int n = 1; n <= 4; ++n) {
        const Count class_size = parity_class_size(n);
        for (int parity = 0; parity <= 1; ++parity)
            for (std::uint32_t mask = 0; mask < (1u << class_size); ++mask) {
                const Family a = class_subset(n, parity, mask);
                const Family nbhd = neighborhood(a);
                for (VertexSet x : nbhd) REQUIRE(x.parity() == 1 - parity);
                REQUIRE(nbhd.size() >= a.size());
            }
    }
    // n = 5 exhaustively for the parity flip, sampled up to n = 10 for the size bound
    for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
        const Family a = class_subset(5, 0, mask);
        for (VertexSet x : neighborhood(a)) REQUIRE(x.parity() == 1);
    }
    SplitMix64 rng(2024);
    for (int n = 5; n <= 10; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            const int parity = static_cast<int>(rng.below(2));
            const Count size = rng.below(parity_class_size(n)) + 1;
            auto ranks = sample_distinct(rng, parity_class_size(n), size);
            std::vector<VertexSet> members;
            for (std::uint64_t r : ranks) members.push_back(parity_unrank(n, parity, r));
            const Family a(n, std::move(members));
            const Family nbhd = neighborhood(a);
            for (VertexSet x : nbhd) REQUIRE(x.parity() == 1 - parity);
            REQUIRE(nbhd.size() >= a.size());
        }
}

TEST_CASE("co_neighborhood is insensitive to duplicates and input order") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(5));
        const int parity = static_cast<int>(rng.below(2));
        const Count size = rng.below(parity_class_size(n) + 1);
        auto ranks = sample_distinct(rng, parity_class_size(n), size);
        std::vector<VertexSet> members;
        for (std::uint64_t r : ranks) members.push_back(parity_unrank(n, parity, r));
        std::vector<VertexSet> noisy = members;
        for (std::size_t i = 0; i < members.size(); i += 2) noisy.push_back(members[i]);  // duplicates
        for (std::size_t i = noisy.size(); i > 1; --i) std::swap(noisy[i - 1], noisy[rng.below(i)]);
        REQUIRE(co_neighborhood(Family(n, members)) == co_neighborhood(Family(n, noisy)));
    }
}

TEST_CASE("maximal independent sets decompose through the even side") {
    // exhaustively for n <= 3: every independent family
    for (int n = 1; n <= 3; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << (1 << n)); ++mask) {
            std::vector<VertexSet> members;
            for (int v = 0; v < (1 << n); ++v)
                if (mask & (1u << v)) members.push_back(VertexSet{static_cast<std::uint64_t>(v)});
            const Family s(n, std::move(members));
            if (!is_independent(s)) continue;
            if (!is_maximal_independent(s)) continue;
            std::vector<VertexSet> even_side;
            for (VertexSet x : s)
                if (x.parity() == 0) even_side.push_back(x);
            const Family a(n, std::move(even_side));
            std::vector<VertexSet> rebuilt(a.begin(), a.end());
            const Family complement = co_neighborhood(a);
            rebuilt.insert(rebuilt.end(), complement.begin(), complement.end());
            REQUIRE(s == Family(n, std::move(rebuilt)));
        }
    }
    // randomized maximal sets up to n = 8
    for (int n = 2; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Family s = random_maximal_independent(n, seed * 977 + n);
            REQUIRE(is_maximal_independent(s));
            std::vector<VertexSet> even_side;
            for (VertexSet x : s)
                if (x.parity() == 0) even_side.push_back(x);
            const Family a(n, std::move(even_side));
            std::vector<VertexSet> rebuilt(a.begin(), a.end());
            const Family complement = co_neighborhood(a);
            rebuilt.insert(rebuilt.end(), complement.begin(), complement.end());
            REQUIRE(s == Family(n, std::move(rebuilt)));
        }
}

TEST_CASE("family JSON round-trips through both forms") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(12));
        const Count size = rng.below(std::min<Count>(64, pow2(n)) + 1);
        std::vector<VertexSet> members;
        for (Count i = 0; i < size; ++i) members.push_back(VertexSet{rng.below(pow2(n))});
        const Family f(n, std::move(members));
        REQUIRE(family_from_json(family_to_json(f, false)) == f);
        REQUIRE(family_from_json(family_to_json(f, true)) == f);
        // serialized members appear in simplicial order
        const Json j = family_to_json(f);
        REQUIRE(j.at("n").get<int>() == n);
        REQUIRE(j.at("sets").size() == f.size());
    }
    CHECK_THROWS_AS(family_from_json(Json{{"n", 3}}), std::invalid_argument);
}
