#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dtree/bigint.hpp"

namespace dtree {

/// Positive fraction num/den. Systems over this domain keep it reduced.
struct Rational {
    Int num;
    Int den;
};

/// Vector of positive integers (partition or composition of an integer).
struct IntVec {
    std::vector<Int> parts;
};

/// Pair (a, b) of odd coprime integers with a > b >= 1.
struct OddPair {
    Int a;
    Int b;
};

/// 2x2 matrix [[a, b], [c, d]], row-major. Stern-Brocot nodes have det 1.
struct Mat2 {
    Int a;
    Int b;
    Int c;
    Int d;

    Int det() const { return a * d - b * c; }
};

bool operator==(const Rational& x, const Rational& y);
bool operator==(const IntVec& x, const IntVec& y);
bool operator==(const OddPair& x, const OddPair& y);
bool operator==(const Mat2& x, const Mat2& y);

// Structural orderings, used only to key containers.
bool operator<(const Rational& x, const Rational& y);
bool operator<(const IntVec& x, const IntVec& y);
bool operator<(const OddPair& x, const OddPair& y);
bool operator<(const Mat2& x, const Mat2& y);

/// One node label; the active alternative is fixed by the owning system's domain.
using NodeLabel = std::variant<Int, Rational, IntVec, OddPair, Mat2>;

/// Canonical text forms, whitespace-free: "11", "11/8", "[3,2,1]", "(7,3)",
/// "[[7,4],[5,3]]".
std::string to_string(const NodeLabel& label);
std::string to_string(const Rational& r);
std::string to_string(const IntVec& v);
std::string to_string(const OddPair& p);
std::string to_string(const Mat2& m);

// Parsers for the canonical forms. Spaces are accepted after commas only;
// each is the exact inverse of the printer above.
Int parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);
IntVec parse_int_vector(std::string_view text);
OddPair parse_odd_pair(std::string_view text);
Mat2 parse_mat2(std::string_view text);

} // namespace dtree
