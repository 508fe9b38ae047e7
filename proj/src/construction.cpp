#include "balcube/construction.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "balcube/cube_bitset.hpp"

namespace balcube {

namespace {

// One prefix-shifted layer { prefix ∪ x : x ⊆ {start..n}, |x| = r }.
// r outside [0, n-start+1] names an empty term (the small-n degenerations).
struct Chunk {
    std::uint64_t prefix = 0;
    int start = 1;
    int r = 0;
};

// Paper-shaped description of one half of the pair: complete layers plus
// prefix-shifted chunks, all chunks sharing one boundary layer. Emitting
// full layers and chunks by ascending layer, chunks in listed order, yields
// simplicial order (the chunk lists are lex-contiguous runs).
struct HalfPlan {
    std::vector<int> full_layers;
    std::vector<Chunk> chunks;
    int chunk_layer = -1;
};

Count chunk_count(const Chunk& c, int n) {
    return binomial_or_zero(n - c.start + 1, c.r);
}

Count plan_count(const HalfPlan& p, int n) {
    Count total = 0;
    for (int layer : p.full_layers) total = checked_add(total, binomial(n, layer));
    for (const Chunk& c : p.chunks) total = checked_add(total, chunk_count(c, n));
    return total;
}

std::vector<int> layer_range(int from, int to) {
    std::vector<int> layers;
    for (int j = from; j <= to; j += 2) layers.push_back(j);
    return layers;
}

std::pair<HalfPlan, HalfPlan> make_plans(int n) {
    const int k = n / 4;
    HalfPlan a, b;
    switch (n % 4) {
        case 0:
            a.full_layers = layer_range(0, 2 * k - 2);
            a.chunks = {{VertexSet::of({1, 2}).bits, 3, 2 * k - 2}};
            a.chunk_layer = 2 * k;
            b.chunks = {{VertexSet::of({1}).bits, 3, 2 * k}, {0, 2, 2 * k + 1}};
            b.chunk_layer = 2 * k + 1;
            b.full_layers = layer_range(2 * k + 3, n - 1);
            break;
        case 1:
            a.full_layers = layer_range(0, 2 * k - 2);
            a.chunks = {{VertexSet::of({1}).bits, 2, 2 * k - 1}};
            a.chunk_layer = 2 * k;
            b.chunks = {{0, 2, 2 * k + 1}};
            b.chunk_layer = 2 * k + 1;
            b.full_layers = layer_range(2 * k + 3, n);
            break;
        case 2:
            a.full_layers = layer_range(0, 2 * k - 2);
            a.chunks = {{VertexSet::of({1}).bits, 2, 2 * k - 1}, {VertexSet::of({2}).bits, 3, 2 * k - 1}};
            a.chunk_layer = 2 * k;
            b.chunks = {{0, 3, 2 * k + 1}};
            b.chunk_layer = 2 * k + 1;
            b.full_layers = layer_range(2 * k + 3, n - 1);
            break;
        default:  // n = 4k + 3
            a.full_layers = layer_range(0, 2 * k);
            b.full_layers = layer_range(2 * k + 3, n);
            break;
    }
    return {std::move(a), std::move(b)};
}

// Emits every member of one half in simplicial order.
template <class Fn>
void for_each_member(const HalfPlan& p, int n, Fn&& emit) {
    std::size_t next_full = 0;
    for (int layer = 0; layer <= n; ++layer) {
        if (next_full < p.full_layers.size() && p.full_layers[next_full] == layer) {
            ++next_full;
            VertexSet x = layer_first(n, layer);
            do {
                emit(x.bits);
            } while (next_in_layer(x, n));
            continue;
        }
        if (layer != p.chunk_layer) continue;
        for (const Chunk& c : p.chunks) {
            const int tail = n - c.start + 1;
            if (c.r < 0 || c.r > tail) continue;  // empty term
            VertexSet t = layer_first(tail, c.r);
            do {
                emit(c.prefix | (t.bits << (c.start - 1)));
            } while (next_in_layer(t, tail));
        }
    }
}

Family materialize(const HalfPlan& p, int n) {
    std::vector<VertexSet> members;
    members.reserve(static_cast<std::size_t>(plan_count(p, n)));
    for_each_member(p, n, [&](std::uint64_t w) { members.push_back(VertexSet{w}); });
    return Family::from_sorted_unique(n, std::move(members));
}

// offsets with popcount j, as in cube_bitset.cpp
constexpr auto build_offset_layers() {
    std::array<std::uint64_t, 7> t{};
    for (int o = 0; o < 64; ++o) t[std::popcount(static_cast<unsigned>(o))] |= 1ull << o;
    return t;
}
constexpr auto kOffsetLayers = build_offset_layers();

// Paints every member of the half into `out` with one sequential pass per
// part: a full layer j touches the offsets of popcount j - popcount(W) in
// word W, and a chunk additionally pins the low bits below its start to the
// prefix. Returns the number of fresh bits.
Count fill_dense(const HalfPlan& p, int n, CubeBitset& out) {
    auto words = out.words();
    const std::uint64_t valid = out.word_mask(0);
    Count fresh = 0;

    auto paint = [&](const std::array<std::uint64_t, 7>& by_excess, int member_size) {
        for (std::size_t w = 0; w < words.size(); ++w) {
            const int excess = member_size - std::popcount(w);
            if (excess < 0 || excess > 6) continue;
            const std::uint64_t add = by_excess[excess] & valid & ~words[w];
            if (add) {
                fresh += static_cast<Count>(std::popcount(add));
                words[w] |= add;
            }
        }
    };

    for (int layer : p.full_layers) paint(kOffsetLayers, layer);
    for (const Chunk& c : p.chunks) {
        const int tail = n - c.start + 1;
        if (c.r < 0 || c.r > tail) continue;  // empty term
        const int shift = c.start - 1;        // always 1 or 2 here, well below 6
        std::array<std::uint64_t, 7> by_excess{};
        for (int o = 0; o < 64; ++o) {
            if ((static_cast<std::uint64_t>(o) & ground_mask(shift)) != c.prefix) continue;
            const int pc = std::popcount(static_cast<unsigned>(o >> shift));
            if (pc <= 6) by_excess[pc] |= 1ull << o;
        }
        paint(by_excess, c.r);  // tail popcount above the word boundary is popcount(W)
    }
    return fresh;
}

// x exceeds `bound` in the shared layer iff the lowest differing element
// belongs to bound
constexpr bool beyond_lex_bound(std::uint64_t x, std::uint64_t bound) {
    const std::uint64_t diff = x ^ bound;
    return diff != 0 && ((diff & (0 - diff)) & bound) != 0;
}

// Verifies that the marked vertices of one parity class form an initial
// segment of the simplicial order: complete low layers, then a lex prefix of
// the first partial layer, nothing above it. `complement` checks the unmarked
// side of the class instead (a terminal segment of the marked side).
bool dense_initial_segment(const CubeBitset& members, int n, int parity, const std::array<Count, 65>& counts,
                           bool complement, std::string* witness) {
    const auto words = members.words();
    const std::uint64_t valid = members.word_mask(0);
    bool boundary_seen = false;
    for (int j = parity; j <= n; j += 2) {
        const Count layer_total = binomial(n, j);
        const Count have = complement ? layer_total - counts[j] : counts[j];
        if (!boundary_seen) {
            if (have == layer_total) continue;
            boundary_seen = true;
            if (have == 0) continue;
            const VertexSet bound = layer_unrank(n, j, have - 1);
            for (std::size_t w = 0; w < words.size(); ++w) {
                const int excess = j - std::popcount(w);
                if (excess < 0 || excess > 6) continue;
                const std::uint64_t source = complement ? ~words[w] : words[w];
                std::uint64_t bits = source & kOffsetLayers[excess] & valid;
                for (; bits != 0; bits &= bits - 1) {
                    const std::uint64_t v =
                        (static_cast<std::uint64_t>(w) << 6) + static_cast<std::uint64_t>(std::countr_zero(bits));
                    if (beyond_lex_bound(v, bound.bits)) {
                        if (witness) *witness = to_string(VertexSet{v});
                        return false;
                    }
                }
            }
        } else if (have != 0) {
            if (witness) *witness = "layer " + std::to_string(j) + " populated beyond the boundary";
            return false;
        }
    }
    return true;
}

}  // namespace

Count extremal_size(int n) {
    if (n < 1 || n > 63) throw std::out_of_range("extremal_size: n outside [1,63]");
    if (n % 2 == 0) {
        const Count middle = binomial(n - 2, (n - 2) / 2);
        return checked_sub(pow2(n - 1), checked_add(middle, middle));
    }
    return checked_sub(pow2(n - 1), binomial(n - 1, (n - 1) / 2));
}

Family prefix_layer(VertexSet prefix, int start, int n, int r) {
    if (n < 1 || n > 64) throw std::out_of_range("prefix_layer: n outside [1,64]");
    if (start < 1 || start > n + 1) throw std::invalid_argument("prefix_layer: start outside [1,n+1]");
    if (!prefix.fits(n)) throw std::invalid_argument("prefix_layer: prefix exceeds ground size");
    if (prefix.max_element() >= start) throw std::invalid_argument("prefix_layer: prefix must lie below start");
    if (r < 0) return Family(n);  // empty layer by convention
    const int tail = n - start + 1;
    if (r > tail) throw std::invalid_argument("prefix_layer: layer size exceeds tail interval");
    std::vector<VertexSet> members;
    members.reserve(static_cast<std::size_t>(binomial(tail, r)));
    VertexSet t = layer_first(tail, r);
    do {
        members.push_back(VertexSet{prefix.bits | (t.bits << (start - 1))});
    } while (next_in_layer(t, tail));
    return Family::from_sorted_unique(n, std::move(members));
}

ExtremalPair construct_pair(int n) {
    if (n < 1 || n > 30) throw std::out_of_range("construct_pair: n outside [1,30]");
    const auto [pa, pb] = make_plans(n);
    ExtremalPair pair;
    pair.n = n;
    pair.residue = n % 4;
    pair.k = n / 4;
    pair.even_half = materialize(pa, n);
    pair.odd_half = materialize(pb, n);
    assert(pair.even_half.size() == plan_count(pa, n));
    assert(pair.odd_half.size() == plan_count(pb, n));
    return pair;
}

PairStream::PairStream(int n) : n_(n) {
    if (n < 1 || n > 30) throw std::out_of_range("PairStream: n outside [1,30]");
    const auto [pa, pb] = make_plans(n);
    even_count_ = plan_count(pa, n);
    odd_count_ = plan_count(pb, n);
}

void PairStream::walk(int side, const std::function<void(std::uint64_t)>& emit) const {
    const auto [pa, pb] = make_plans(n_);
    for_each_member(side == 0 ? pa : pb, n_, emit);
}

PairCounts pair_counts(int n) {
    if (n < 1 || n > 63) throw std::out_of_range("pair_counts: n outside [1,63]");
    const auto [pa, pb] = make_plans(n);
    return {plan_count(pa, n), plan_count(pb, n)};
}

VerificationReport verify_pair(int n) {
    if (n < 1 || n > 30) throw std::out_of_range("verify_pair: n outside [1,30]");
    const auto [pa, pb] = make_plans(n);
    VerificationReport report;
    report.subject = "verify_pair n=" + std::to_string(n);

    // dense membership indicator over the whole cube; counts of fresh bits
    // are the half sizes (the plans never collide)
    CubeBitset members(n);
    const Count size_a = fill_dense(pa, n, members);
    const Count size_b = fill_dense(pb, n, members);

    const Count formula = extremal_size(n);
    const bool degenerate = formula == 0;

    report.checks.push_back({"sizes_equal", size_a == size_b, std::nullopt, size_a, size_b, "", ""});
    report.checks.push_back(
        {"size_formula", size_a + size_b == formula, std::nullopt, size_a + size_b, formula, "", ""});

    // independence and maximality both come from N(A ∪ B); the co-neighborhood
    // identity needs N(A) alone, so that one is measured first and the buffer
    // is reused afterwards
    CubeBitset scratch(n);
    CubeBitset::accumulate_neighborhood(scratch, members, 0);  // N(A)

    CheckResult co{"co_neighborhood", true, std::nullopt, std::nullopt, std::nullopt, "", ""};
    if (degenerate) {
        co.detail = "empty pair; pass by convention";
    } else {
        const auto member_words = members.words();
        const auto na_words = scratch.words();
        for (std::size_t w = 0; w < member_words.size() && co.pass; ++w) {
            const std::uint64_t odd_positions =
                (std::popcount(w) & 1 ? kEvenOffsets : ~kEvenOffsets) & members.word_mask(w);
            const std::uint64_t want = odd_positions & ~na_words[w];
            const std::uint64_t have = member_words[w] & odd_positions;
            if (want != have) {
                co.pass = false;
                const std::uint64_t bad = want ^ have;
                co.witness = to_string(VertexSet{(static_cast<std::uint64_t>(w) << 6) +
                                                 static_cast<std::uint64_t>(std::countr_zero(bad))});
            }
        }
    }

    scratch.clear();
    CubeBitset::accumulate_neighborhood(scratch, members, -1);  // N(A ∪ B)

    CheckResult independent{"independent", true, std::nullopt, std::nullopt, std::nullopt, "", ""};
    {
        const auto member_words = members.words();
        const auto ns_words = scratch.words();
        for (std::size_t w = 0; w < member_words.size() && independent.pass; ++w) {
            const std::uint64_t clash = member_words[w] & ns_words[w];
            if (clash != 0) {
                independent.pass = false;
                independent.witness = to_string(VertexSet{
                    (static_cast<std::uint64_t>(w) << 6) + static_cast<std::uint64_t>(std::countr_zero(clash))});
            }
        }
    }
    report.checks.push_back(std::move(independent));

    {
        const auto [even_count, odd_count] = members.parity_counts();
        report.checks.push_back({"balanced", even_count == odd_count, std::nullopt, even_count, odd_count, "", ""});
    }

    {
        CheckResult check{"segment_structure", true, std::nullopt, std::nullopt, std::nullopt, "", ""};
        const auto counts = members.layer_counts();
        std::string witness;
        if (!dense_initial_segment(members, n, 0, counts, false, &witness)) {
            check.pass = false;
            check.detail = "even half is not an initial segment";
            check.witness = witness;
        } else if (!dense_initial_segment(members, n, 1, counts, true, &witness)) {
            // the odd half is terminal iff its in-class complement is initial
            check.pass = false;
            check.detail = "odd half is not a terminal segment";
            check.witness = witness;
        }
        report.checks.push_back(std::move(check));
    }

    report.checks.push_back(std::move(co));

    {
        CheckResult check{"maximal", true, std::nullopt, std::nullopt, std::nullopt, "", ""};
        if (degenerate) {
            check.detail = "empty pair; pass by convention";
        } else {
            const auto member_words = members.words();
            const auto ns_words = scratch.words();
            for (std::size_t w = 0; w < member_words.size() && check.pass; ++w) {
                const std::uint64_t uncovered = members.word_mask(w) & ~(member_words[w] | ns_words[w]);
                if (uncovered != 0) {
                    check.pass = false;
                    check.witness = to_string(VertexSet{
                        (static_cast<std::uint64_t>(w) << 6) +
                        static_cast<std::uint64_t>(std::countr_zero(uncovered))});
                }
            }
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

}  // namespace balcube
