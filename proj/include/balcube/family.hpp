#pragma once

#include <vector>

#include "balcube/simplicial.hpp"
#include "balcube/vertex.hpp"

namespace balcube {

// Names an initial or terminal segment of one parity class in simplicial order.
struct SegmentSpec {
    enum class Kind { initial, terminal };

    int n = 0;
    int parity = 0;  // 0 = even class, 1 = odd class
    Kind kind = Kind::initial;
    Count length = 0;
};

// A deduplicated set of vertices of Q_n over a fixed ground size, kept in
// simplicial order so iteration (and every serialized form) is deterministic.
class Family {
public:
    Family() = default;
    explicit Family(int n);

    // sorts and silently deduplicates; N(A) naturally produces collisions
    Family(int n, std::vector<VertexSet> members);

    // trusted fast path for already-canonical input (checked in debug builds)
    static Family from_sorted_unique(int n, std::vector<VertexSet> members);

    int ground() const { return n_; }
    Count size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(VertexSet x) const;

    const std::vector<VertexSet>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const Family&, const Family&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> members_;
};

// The shared parity of a one-sided family; the empty family counts as even.
// Throws std::invalid_argument on mixed parities.
int family_parity(const Family& a);

// N(A): every vertex adjacent to a member of A.
Family neighborhood(const Family& a);

// The opposite parity class minus N(A); A must be one-sided.
Family co_neighborhood(const Family& a);

// Materializes the named segment via parity_unrank (never by enumerating the
// whole class).
Family segment(const SegmentSpec& spec);

// No two members differ in exactly one element.
bool is_independent(const Family& s);

// Equally many members of even and odd size.
bool is_balanced(const Family& s);

// Every vertex outside s has a neighbor in s; s must be independent
// (std::invalid_argument otherwise).
bool is_maximal_independent(const Family& s);

// Members occupy exactly the top |F| parity ranks of their class; F must be
// one-sided. Empty families pass.
bool is_terminal_segment(const Family& f);

}  // namespace balcube
