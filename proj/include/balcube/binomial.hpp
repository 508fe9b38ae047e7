#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace balcube {

// Exact unsigned 64-bit count. Anything that could wrap must go through the
// checked helpers below; overflow raises, never wraps.
using Count = std::uint64_t;

// C(64,32) = 1832624140942590534 still fits in 64 bits; C(65,32) would not
// keep the whole table exact, so 64 is the hard cap.
inline constexpr int kMaxBinomialM = 64;

namespace detail {

consteval auto build_pascal_table() {
    std::array<std::array<std::uint64_t, kMaxBinomialM + 1>, kMaxBinomialM + 1> t{};
    for (int m = 0; m <= kMaxBinomialM; ++m) {
        t[m][0] = 1;
        for (int r = 1; r <= m; ++r)
            t[m][r] = t[m - 1][r - 1] + (r <= m - 1 ? t[m - 1][r] : 0);
    }
    return t;
}

inline constexpr auto kPascal = build_pascal_table();

static_assert(kPascal[6][3] == 20);
static_assert(kPascal[30][15] == 155117520ull);
static_assert(kPascal[64][32] == 1832624140942590534ull);

}  // namespace detail

// C(m, r), exact. r > m gives 0 (choosing more than available).
constexpr Count binomial(int m, int r) {
    if (m < 0 || r < 0) throw std::invalid_argument("binomial: negative argument");
    if (m > kMaxBinomialM) throw std::out_of_range("binomial: m must be <= 64 for exact 64-bit results");
    if (r > m) return 0;
    return detail::kPascal[m][r];
}

// Degenerate layer indices show up as r < 0 in the constructions; those
// layers are empty, not errors.
constexpr Count binomial_or_zero(int m, int r) {
    return (r < 0 || m < 0 || r > m) ? 0 : binomial(m, r);
}

constexpr Count checked_add(Count a, Count b) {
    if (a > std::numeric_limits<Count>::max() - b) throw std::overflow_error("count overflow in addition");
    return a + b;
}

constexpr Count checked_sub(Count a, Count b) {
    if (b > a) throw std::overflow_error("count underflow in subtraction");
    return a - b;
}

constexpr Count pow2(int e) {
    if (e < 0 || e > 63) throw std::out_of_range("pow2: exponent outside [0,63]");
    return 1ull << e;
}

}  // namespace balcube
