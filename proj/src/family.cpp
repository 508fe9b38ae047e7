#include "balcube/family.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace balcube {

namespace {

void check_ground(int n) {
    if (n < 1 || n > 64) throw std::out_of_range("Family: ground size outside [1,64]");
}

std::unordered_set<std::uint64_t> word_set(const Family& f) {
    std::unordered_set<std::uint64_t> s;
    s.reserve(static_cast<std::size_t>(f.size()) * 2);
    for (VertexSet x : f) s.insert(x.bits);
    return s;
}

}  // namespace

Family::Family(int n) : n_(n) { check_ground(n); }

Family::Family(int n, std::vector<VertexSet> members) : n_(n), members_(std::move(members)) {
    check_ground(n);
    for (VertexSet x : members_)
        if (!x.fits(n)) throw std::invalid_argument("Family: member has elements beyond ground size");
    std::sort(members_.begin(), members_.end(), simplicial_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Family Family::from_sorted_unique(int n, std::vector<VertexSet> members) {
    check_ground(n);
    Family f;
    f.n_ = n;
    f.members_ = std::move(members);
#ifndef NDEBUG
    for (std::size_t i = 0; i < f.members_.size(); ++i) {
        assert(f.members_[i].fits(n));
        assert(i == 0 || simplicial_less(f.members_[i - 1], f.members_[i]));
    }
#endif
    return f;
}

bool Family::contains(VertexSet x) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), x, simplicial_less);
    return it != members_.end() && *it == x;
}

int family_parity(const Family& a) {
    int parity = 0;
    bool first = true;
    for (VertexSet x : a) {
        if (first) {
            parity = x.parity();
            first = false;
        } else if (x.parity() != parity) {
            throw std::invalid_argument("family spans both parity classes");
        }
    }
    return parity;
}

Family neighborhood(const Family& a) {
    const int n = a.ground();
    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(a.size()) * n);
    for (VertexSet x : a)
        for (int e = 1; e <= n; ++e) out.push_back(x.flip(e));
    return Family(n, std::move(out));
}

Family co_neighborhood(const Family& a) {
    const int n = a.ground();
    const int other = 1 - family_parity(a);
    const auto covered = word_set(neighborhood(a));
    std::vector<VertexSet> out;
    // walk the opposite class in simplicial order so the result is canonical
    // without a sort
    for (int layer = other; layer <= n; layer += 2) {
        VertexSet x = layer_first(n, layer);
        do {
            if (!covered.contains(x.bits)) out.push_back(x);
        } while (next_in_layer(x, n));
    }
    return Family::from_sorted_unique(n, std::move(out));
}

Family segment(const SegmentSpec& spec) {
    const Count class_size = parity_class_size(spec.n);
    if (spec.length > class_size) throw std::out_of_range("segment: length exceeds parity class size");
    const Count first = spec.kind == SegmentSpec::Kind::initial ? 0 : class_size - spec.length;
    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(spec.length));
    for (Count i = 0; i < spec.length; ++i) out.push_back(parity_unrank(spec.n, spec.parity, first + i));
    return Family::from_sorted_unique(spec.n, std::move(out));
}

bool is_independent(const Family& s) {
    const auto words = word_set(s);
    for (VertexSet x : s)
        for (int e = 1; e <= s.ground(); ++e)
            if (words.contains(x.flip(e).bits)) return false;
    return true;
}

bool is_balanced(const Family& s) {
    Count even = 0, odd = 0;
    for (VertexSet x : s) (x.parity() == 0 ? even : odd)++;
    return even == odd;
}

bool is_maximal_independent(const Family& s) {
    const int n = s.ground();
    if (n > 25) throw std::out_of_range("is_maximal_independent: full-cube scan is capped at n <= 25");
    if (!is_independent(s)) throw std::invalid_argument("is_maximal_independent: family is not independent");
    const auto words = word_set(s);
    const std::uint64_t universe = 1ull << n;
    for (std::uint64_t v = 0; v < universe; ++v) {
        if (words.contains(v)) continue;
        bool dominated = false;
        for (int e = 1; e <= n && !dominated; ++e) dominated = words.contains(v ^ (1ull << (e - 1)));
        if (!dominated) return false;
    }
    return true;
}

bool is_terminal_segment(const Family& f) {
    if (f.empty()) return true;
    family_parity(f);  // rejects mixed input
    const Count class_size = parity_class_size(f.ground());
    // members are in simplicial order, so ranks are strictly increasing;
    // endpoints pin the whole block
    const Count lo = parity_rank(f.members().front(), f.ground());
    const Count hi = parity_rank(f.members().back(), f.ground());
    return hi == class_size - 1 && lo == class_size - f.size();
}

}  // namespace balcube
