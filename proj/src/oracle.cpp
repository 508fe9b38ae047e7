#include "balcube/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

#include "balcube/cube_bitset.hpp"
#include "balcube/rng.hpp"

namespace balcube {

namespace {

int resolve_jobs(int jobs) {
    if (jobs < 0) throw std::invalid_argument("jobs must be >= 0");
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// worker(chunk_index, lo, hi) over [0, total) split into `jobs` ranges;
// callers merge per-chunk results in index order, so scheduling cannot leak
// into the output
template <class Fn>
void run_chunked(Count total, int jobs, Fn&& worker) {
    const int used = total == 0 ? 1 : static_cast<int>(std::min<Count>(jobs, total));
    const Count chunk = (total + used - 1) / used;
    std::vector<std::thread> threads;
    threads.reserve(used);
    for (int c = 0; c < used; ++c) {
        const Count lo = std::min<Count>(total, c * chunk);
        const Count hi = std::min<Count>(total, lo + chunk);
        threads.emplace_back([&worker, c, lo, hi] { worker(c, lo, hi); });
    }
    for (auto& t : threads) t.join();
}

// members of one parity class in simplicial order; index = parity rank
std::vector<std::uint64_t> class_members(int n, int parity) {
    std::vector<std::uint64_t> out;
    out.reserve(parity_class_size(n));
    for (int layer = parity; layer <= n; layer += 2) {
        VertexSet x = layer_first(n, layer);
        do {
            out.push_back(x.bits);
        } while (next_in_layer(x, n));
    }
    return out;
}

// neighbor set of each even-class member as a mask over odd-class ranks
// (only usable while the classes fit in a machine word, i.e. n <= 5)
std::vector<std::uint32_t> rank_neighbor_masks(int n) {
    const auto even = class_members(n, 0);
    std::vector<std::uint32_t> masks(even.size(), 0);
    for (std::size_t i = 0; i < even.size(); ++i)
        for (int e = 1; e <= n; ++e)
            masks[i] |= 1u << parity_rank(VertexSet{even[i] ^ (1ull << (e - 1))}, n);
    return masks;
}

// the simplicially-first `keep` members named by the rank mask
Family family_of_ranks(int n, const std::vector<std::uint64_t>& members, std::uint32_t rank_mask, Count keep) {
    std::vector<VertexSet> out;
    out.reserve(keep);
    for (std::uint32_t bits = rank_mask; bits != 0 && out.size() < keep; bits &= bits - 1)
        out.push_back(VertexSet{members[std::countr_zero(bits)]});
    return Family::from_sorted_unique(n, std::move(out));
}

// |N(initial segment of length m)| by a prefix sweep
Count segment_neighborhood_size(int n, Count m) {
    CubeBitset covered(n);
    Count covered_count = 0;
    Count added = 0;
    for (int layer = 0; layer <= n && added < m; layer += 2) {
        VertexSet x = layer_first(n, layer);
        do {
            ++added;
            for (int e = 1; e <= n; ++e)
                if (!covered.test_and_set(x.bits ^ (1ull << (e - 1)))) ++covered_count;
        } while (added < m && next_in_layer(x, n));
    }
    return covered_count;
}

std::string family_text(const Family& f) {
    std::string out = "{";
    bool first = true;
    for (VertexSet x : f) {
        if (!first) out += ' ';
        out += to_string(x);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace

SearchResult max_balanced_exhaustive(int n, int jobs) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("max_balanced_exhaustive: n must be in [1,5]; the search space is 2^(2^(n-1))");
    const int workers = resolve_jobs(jobs);
    const auto even = class_members(n, 0);
    const auto odd = class_members(n, 1);
    const auto nb = rank_neighbor_masks(n);
    const int class_count = static_cast<int>(even.size());
    const Count total = 1ull << class_count;

    struct Best {
        Count value = 0;
        std::uint64_t mask = 0;
    };
    std::vector<Best> partial(workers);

    run_chunked(total, workers, [&](int chunk, Count lo, Count hi) {
        Best best;  // seed mask 0 scores 0, so any chunk result beats "nothing"
        for (Count mask = lo; mask < hi; ++mask) {
            std::uint32_t neighbors = 0;
            for (std::uint32_t bits = static_cast<std::uint32_t>(mask); bits != 0; bits &= bits - 1)
                neighbors |= nb[std::countr_zero(bits)];
            const Count seed = static_cast<Count>(std::popcount(mask));
            const Count free_odd = static_cast<Count>(class_count - std::popcount(neighbors));
            const Count value = std::min(seed, free_odd);
            if (value > best.value) best = {value, mask};
        }
        partial[chunk] = best;
    });

    Best best;
    for (const Best& b : partial)
        if (b.value > best.value || (b.value == best.value && b.mask < best.mask)) best = b;

    // trim the larger side to the optimum; any subset of the uncovered odd
    // vertices stays independent from the kept seeds
    std::uint32_t neighbors = 0;
    for (std::uint32_t bits = static_cast<std::uint32_t>(best.mask); bits != 0; bits &= bits - 1)
        neighbors |= nb[std::countr_zero(bits)];
    const std::uint32_t free_mask = static_cast<std::uint32_t>(ground_mask(class_count)) & ~neighbors;

    const Family even_part = family_of_ranks(n, even, static_cast<std::uint32_t>(best.mask), best.value);
    const Family odd_part = family_of_ranks(n, odd, free_mask, best.value);
    std::vector<VertexSet> merged;
    merged.reserve(2 * best.value);
    std::merge(even_part.begin(), even_part.end(), odd_part.begin(), odd_part.end(), std::back_inserter(merged),
               simplicial_less);

    SearchResult result;
    result.n = n;
    result.optimum = 2 * best.value;
    result.witness = Family::from_sorted_unique(n, std::move(merged));
    result.method = "exhaustive";
    return result;
}

SearchResult max_balanced_segment(int n) {
    if (n < 1 || n > 24) throw std::invalid_argument("max_balanced_segment: n must be in [1,24]");
    const Count half = parity_class_size(n);
    CubeBitset covered(n);
    Count covered_count = 0;
    Count added = 0;
    Count best = 0;
    Count previous_remaining = half;
    for (int layer = 0; layer <= n; layer += 2) {
        VertexSet x = layer_first(n, layer);
        do {
            ++added;
            for (int e = 1; e <= n; ++e)
                if (!covered.test_and_set(x.bits ^ (1ull << (e - 1)))) ++covered_count;
            const Count remaining = half - covered_count;
            if (remaining > previous_remaining)
                throw std::logic_error("max_balanced_segment: coverage shrank during the sweep");
            previous_remaining = remaining;
            if (remaining >= added) best = added;
        } while (next_in_layer(x, n));
    }

    // witness: initial segment of the even class plus the terminal segment of
    // the odd class, both of length `best`
    std::vector<VertexSet> members;
    members.reserve(2 * best);
    Count emitted = 0;
    for (int layer = 0; layer <= n && emitted < best; layer += 2) {
        VertexSet x = layer_first(n, layer);
        do {
            members.push_back(x);
            ++emitted;
        } while (emitted < best && next_in_layer(x, n));
    }
    std::vector<VertexSet> terminal;
    terminal.reserve(best);
    for (Count i = half - best; i < half; ++i) terminal.push_back(parity_unrank(n, 1, i));
    std::vector<VertexSet> merged;
    merged.reserve(2 * best);
    std::merge(members.begin(), members.end(), terminal.begin(), terminal.end(), std::back_inserter(merged),
               simplicial_less);

    SearchResult result;
    result.n = n;
    result.optimum = 2 * best;
    result.witness = Family::from_sorted_unique(n, std::move(merged));
    result.method = "segment";
    return result;
}

VerificationReport check_isoperimetry_exhaustive(int n, Count m, int jobs) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("check_isoperimetry_exhaustive: n must be in [1,5]");
    const Count half = parity_class_size(n);
    if (m > half) throw std::out_of_range("check_isoperimetry_exhaustive: m exceeds the parity class size");
    const int workers = resolve_jobs(jobs);
    const auto even = class_members(n, 0);
    const auto nb = rank_neighbor_masks(n);
    const int class_count = static_cast<int>(even.size());
    const Count total = binomial(class_count, static_cast<int>(m));

    std::uint32_t segment_neighbors = 0;
    for (Count i = 0; i < m; ++i) segment_neighbors |= nb[i];
    const Count bound = static_cast<Count>(std::popcount(segment_neighbors));

    struct ChunkResult {
        Count min_size = ~0ull;
        std::uint64_t min_mask = 0;
        bool violated = false;
        std::uint64_t violation_mask = 0;
    };
    std::vector<ChunkResult> partial(workers);

    run_chunked(total, workers, [&](int chunk, Count lo, Count hi) {
        ChunkResult r;
        if (lo >= hi) {
            partial[chunk] = r;
            return;
        }
        VertexSet combo = layer_unrank(class_count, static_cast<int>(m), lo);  // rank i of the class <-> bit i
        for (Count idx = lo; idx < hi; ++idx) {
            std::uint32_t neighbors = 0;
            for (std::uint64_t bits = combo.bits; bits != 0; bits &= bits - 1)
                neighbors |= nb[std::countr_zero(bits)];
            const Count size = static_cast<Count>(std::popcount(neighbors));
            if (size < r.min_size) {
                r.min_size = size;
                r.min_mask = combo.bits;
            }
            if (size < bound && !r.violated) {
                r.violated = true;
                r.violation_mask = combo.bits;
            }
            if (idx + 1 < hi) next_in_layer(combo, class_count);
        }
        partial[chunk] = r;
    });

    ChunkResult merged;
    for (const ChunkResult& r : partial) {
        if (r.min_size < merged.min_size) {  // chunks ascend in lex order, so first wins ties
            merged.min_size = r.min_size;
            merged.min_mask = r.min_mask;
        }
        if (r.violated && !merged.violated) {
            merged.violated = true;
            merged.violation_mask = r.violation_mask;
        }
    }
    if (total == 0) merged.min_size = 0;  // unreachable: C(c, m) >= 1 whenever m <= c

    VerificationReport report;
    report.subject = "isoperimetry_exhaustive n=" + std::to_string(n);
    CheckResult check{"neighborhood_min", !merged.violated, m, merged.min_size, bound, "", ""};
    check.detail = "subsets=" + std::to_string(total);
    const std::uint64_t shown = merged.violated ? merged.violation_mask : merged.min_mask;
    check.witness = family_text(family_of_ranks(n, even, static_cast<std::uint32_t>(shown), m));
    report.checks.push_back(std::move(check));
    return report;
}

VerificationReport check_isoperimetry_sampled(int n, Count m, Count samples, std::uint64_t seed, int jobs) {
    if (n < 6 || n > 16)
        throw std::invalid_argument("check_isoperimetry_sampled: n must be in [6,16] (use the exhaustive check below that)");
    const Count half = parity_class_size(n);
    if (m > half) throw std::out_of_range("check_isoperimetry_sampled: m exceeds the parity class size");
    if (samples == 0) throw std::invalid_argument("check_isoperimetry_sampled: samples must be positive");
    const int workers = resolve_jobs(jobs);

    const Count bound = segment_neighborhood_size(n, m);
    const auto even = class_members(n, 0);

    struct ChunkResult {
        Count min_size = ~0ull;
        Count min_sample = 0;
        bool violated = false;
        Count violation_sample = 0;
    };
    std::vector<ChunkResult> partial(workers);

    run_chunked(samples, workers, [&](int chunk, Count lo, Count hi) {
        ChunkResult r;
        std::vector<std::uint8_t> marked(std::size_t{1} << n, 0);
        for (Count i = lo; i < hi; ++i) {
            SplitMix64 rng = sample_stream(seed, i);
            const auto ranks = sample_distinct(rng, half, m);
            std::fill(marked.begin(), marked.end(), 0);
            Count size = 0;
            for (std::uint64_t rank : ranks) {
                const std::uint64_t v = even[rank];
                for (int e = 1; e <= n; ++e) {
                    std::uint8_t& cell = marked[v ^ (1ull << (e - 1))];
                    if (!cell) {
                        cell = 1;
                        ++size;
                    }
                }
            }
            if (size < r.min_size) {
                r.min_size = size;
                r.min_sample = i;
            }
            if (size < bound && !r.violated) {
                r.violated = true;
                r.violation_sample = i;
            }
        }
        partial[chunk] = r;
    });

    ChunkResult merged;
    for (const ChunkResult& r : partial) {
        if (r.min_size < merged.min_size) {
            merged.min_size = r.min_size;
            merged.min_sample = r.min_sample;
        }
        if (r.violated && !merged.violated) {
            merged.violated = true;
            merged.violation_sample = r.violation_sample;
        }
    }

    VerificationReport report;
    report.subject = "isoperimetry_sampled n=" + std::to_string(n);
    CheckResult check{"neighborhood_min", !merged.violated, m, merged.min_size, bound, "", ""};
    check.detail = "samples=" + std::to_string(samples) + " seed=" + std::to_string(seed) +
                   (merged.violated ? " violation_sample=" + std::to_string(merged.violation_sample) : "");
    if (merged.violated) {
        SplitMix64 rng = sample_stream(seed, merged.violation_sample);
        auto ranks = sample_distinct(rng, half, m);
        std::sort(ranks.begin(), ranks.end());
        std::vector<VertexSet> members;
        members.reserve(ranks.size());
        for (std::uint64_t rank : ranks) members.push_back(VertexSet{even[rank]});
        check.witness = family_text(Family::from_sorted_unique(n, std::move(members)));
    }
    report.checks.push_back(std::move(check));
    return report;
}

VerificationReport check_terminal_property(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("check_terminal_property: n must be in [1,16]");
    const Count half = parity_class_size(n);
    CubeBitset covered(n);
    Count covered_count = 0;
    Count max_rank = 0;  // largest covered parity rank; meaningful once covered_count > 0
    Count added = 0;
    bool pass = true;
    Count failed_at = 0;

    for (int layer = 0; layer <= n && pass; layer += 2) {
        VertexSet x = layer_first(n, layer);
        do {
            ++added;
            for (int e = 1; e <= n; ++e) {
                const std::uint64_t neighbor = x.bits ^ (1ull << (e - 1));
                if (!covered.test_and_set(neighbor)) {
                    ++covered_count;
                    max_rank = std::max(max_rank, parity_rank(VertexSet{neighbor}, n));
                }
            }
            // covered odd vertices must be exactly the first covered_count
            // ranks, i.e. the uncovered rest is a terminal segment
            if (covered_count != 0 && max_rank != covered_count - 1) {
                pass = false;
                failed_at = added;
            }
        } while (pass && next_in_layer(x, n));
    }

    VerificationReport report;
    report.subject = "terminal_property n=" + std::to_string(n);
    CheckResult check{"co_neighborhood_terminal", pass, half, std::nullopt, std::nullopt, "", ""};
    check.detail = pass ? "all prefix lengths in [0," + std::to_string(half) + "]"
                        : "first failure at prefix length " + std::to_string(failed_at);
    report.checks.push_back(std::move(check));
    return report;
}

}  // namespace balcube
