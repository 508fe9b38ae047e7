#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace balcube {

// All-ones word over the first n bit positions (n <= 64).
constexpr std::uint64_t ground_mask(int n) {
    return n >= 64 ? ~0ull : (1ull << n) - 1;
}

// One vertex of the discrete cube Q_n: a subset of {1,...,n}.
// Element i lives at bit i-1; the ground size n is supplied by context.
struct VertexSet {
    std::uint64_t bits = 0;

    static constexpr VertexSet of(std::initializer_list<int> elements) {
        VertexSet x;
        for (int e : elements) x.bits |= 1ull << (e - 1);
        return x;
    }

    constexpr bool contains(int element) const { return (bits >> (element - 1)) & 1u; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr int parity() const { return size() & 1; }
    constexpr bool fits(int n) const { return (bits & ~ground_mask(n)) == 0; }

    // neighbor of this vertex across coordinate `element`
    constexpr VertexSet flip(int element) const { return VertexSet{bits ^ (1ull << (element - 1))}; }

    // smallest element, 0 if empty
    constexpr int min_element() const { return bits == 0 ? 0 : std::countr_zero(bits) + 1; }
    // largest element, 0 if empty
    constexpr int max_element() const { return bits == 0 ? 0 : 64 - std::countl_zero(bits); }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
};

// Canonical text form: sorted element list, e.g. "{1,3,4}"; "{}" when empty.
inline std::string to_string(VertexSet x) {
    std::string out = "{";
    bool first = true;
    for (std::uint64_t b = x.bits; b != 0; b &= b - 1) {
        if (!first) out += ',';
        out += std::to_string(std::countr_zero(b) + 1);
        first = false;
    }
    out += '}';
    return out;
}

// Compact word form, uppercase hex, e.g. "0xD" for {1,3,4}.
inline std::string to_hex(VertexSet x) {
    static constexpr char digits[] = "0123456789ABCDEF";
    if (x.bits == 0) return "0x0";
    std::string rev;
    for (std::uint64_t b = x.bits; b != 0; b >>= 4) rev += digits[b & 0xF];
    std::string out = "0x";
    out.append(rev.rbegin(), rev.rend());
    return out;
}

}  // namespace balcube
