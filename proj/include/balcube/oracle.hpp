#pragma once

#include <cstdint>
#include <string>

#include "balcube/family.hpp"
#include "balcube/report.hpp"

namespace balcube {

// Outcome of a maximum-balanced-independent-set search. The witness is a
// balanced independent set attaining the optimum.
struct SearchResult {
    int n = 0;
    Count optimum = 0;
    Family witness;
    std::string method;
};

// Full enumeration of every subset of the even class; the only assumption is
// the reduction to one-sided seeds. Refuses n > 5 rather than sampling.
// jobs = 0 picks the hardware thread count; results do not depend on it.
SearchResult max_balanced_exhaustive(int n, int jobs = 0);

// One incremental sweep that grows the initial segment of the even class one
// vertex at a time and tracks how much of the odd class stays uncovered.
// Correctness of the restriction to initial segments is anchored by agreement
// with max_balanced_exhaustive on n <= 5. Capped at n <= 24.
SearchResult max_balanced_segment(int n);

// Every m-subset of the even class has a neighborhood at least as large as
// the initial segment's. Full enumeration; n <= 5.
VerificationReport check_isoperimetry_exhaustive(int n, Count m, int jobs = 0);

// Same bound on seeded uniform m-subsets of the even class; 6 <= n <= 16.
// Sample i draws from a splitmix64 stream derived from (seed, i), so reports
// are identical for identical arguments regardless of thread count.
VerificationReport check_isoperimetry_sampled(int n, Count m, Count samples, std::uint64_t seed, int jobs = 0);

// The uncovered part of the odd class is a terminal segment after every
// prefix length m in [0, 2^(n-1)]; single sweep, n <= 16.
VerificationReport check_terminal_property(int n);

}  // namespace balcube
