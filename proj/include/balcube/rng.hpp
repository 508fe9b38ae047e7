#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace balcube {

// splitmix64 finalizer; used to derive independent per-sample streams.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// splitmix64: tiny and bit-identical on every platform, which is what the
// reproducibility contract needs (std::uniform_int_distribution is not).
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        return mix64(state);
    }

    // uniform in [0, bound); exact via rejection of the wraparound residue
    constexpr std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound must be positive");
        const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = next();
            if (x >= reject) return x % bound;
        }
    }
};

// Stream for sample number `index` of a run seeded with `seed`; addressable
// by index so work can be partitioned across threads without changing the
// draws.
constexpr SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64{mix64(seed ^ mix64(index + 1))};
}

// Floyd's algorithm: uniform m-subset of [0, universe), no enumeration.
inline std::vector<std::uint64_t> sample_distinct(SplitMix64& rng, std::uint64_t universe, std::uint64_t m) {
    if (m > universe) throw std::invalid_argument("sample_distinct: m exceeds universe");
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (std::uint64_t j = universe - m; j < universe; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return std::vector<std::uint64_t>(chosen.begin(), chosen.end());
}

}  // namespace balcube
