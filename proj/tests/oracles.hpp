#pragma once

// Brute-force generators used to cross-check tree enumerations. These stay
// deliberately independent of the library's descent/expand formulas.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dtree/bigint.hpp"

namespace oracle {

using dtree::Int;

namespace detail {

inline void partitions_rec(int rest, int max_part, std::vector<Int>& prefix,
                           std::vector<std::vector<Int>>& out) {
    if (rest == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_rec(rest - k, k, prefix, out);
        prefix.pop_back();
    }
}

inline void compositions_rec(int rest, std::vector<Int>& prefix,
                             std::vector<std::vector<Int>>& out) {
    if (rest == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = 1; k <= rest; ++k) {
        prefix.push_back(k);
        compositions_rec(rest - k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All weakly decreasing positive vectors summing to n.
inline std::vector<std::vector<Int>> partitions_of(int n) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> prefix;
    detail::partitions_rec(n, n, prefix, out);
    return out;
}

/// All positive vectors summing to n.
inline std::vector<std::vector<Int>> compositions_of(int n) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> prefix;
    detail::compositions_rec(n, prefix, out);
    return out;
}

/// 1, 1, 2, 3, 5, ...
inline std::vector<Int> fibonacci(std::size_t count) {
    std::vector<Int> seq;
    Int a = 1, b = 1;
    while (seq.size() < count) {
        seq.push_back(a);
        std::swap(a, b);
        b += a;
    }
    return seq;
}

inline long long gcd_ll(long long a, long long b) {
    while (b != 0) {
        long long r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// All coprime (num, den) with num, den >= 1 and num + den <= max_sum.
inline std::vector<std::pair<long long, long long>> coprime_fractions(int max_sum) {
    std::vector<std::pair<long long, long long>> out;
    for (long long num = 1; num < max_sum; ++num) {
        for (long long den = 1; num + den <= max_sum; ++den) {
            if (gcd_ll(num, den) == 1) out.emplace_back(num, den);
        }
    }
    return out;
}

/// Primitive triples (x odd, y even, z) with z <= max_z, by scanning legs
/// and testing x^2 + y^2 for squareness. Sorted by (z, x).
inline std::vector<std::array<long long, 3>> primitive_triples_by_legs(long long max_z) {
    std::vector<std::array<long long, 3>> out;
    for (long long x = 3; x < max_z; x += 2) {
        for (long long y = 4; y < max_z; y += 2) {
            if (gcd_ll(x, y) != 1) continue;
            long long squared = x * x + y * y;
            long long z = std::llround(std::sqrt(double(squared)));
            while (z * z > squared) --z;
            while (z * z < squared) ++z;
            if (z * z == squared && z <= max_z) out.push_back({x, y, z});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& s, const auto& t) { return s[2] < t[2] || (s[2] == t[2] && s[0] < t[0]); });
    return out;
}

/// Odd coprime pairs a > b >= 1 with (a^2 + b^2)/2 <= max_z.
inline std::vector<std::pair<long long, long long>> odd_coprime_pairs(long long max_z) {
    std::vector<std::pair<long long, long long>> out;
    for (long long a = 3; a * a + 1 <= 2 * max_z; a += 2) {
        for (long long b = 1; b < a; b += 2) {
            if ((a * a + b * b) / 2 <= max_z && gcd_ll(a, b) == 1) out.emplace_back(a, b);
        }
    }
    return out;
}

/// Deterministic xorshift generator for property tests.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed == 0 ? 0x9e3779b97f4a7c15ull : seed) {}

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }

    /// Uniform-ish value in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Random positive integer with up to `digits` decimal digits.
    Int big(std::size_t digits) {
        std::string text(1, char('1' + below(9)));
        for (std::size_t i = 1 + below(digits); i > 1; --i) {
            text += char('0' + below(10));
        }
        return Int(text);
    }
};

} // namespace oracle
