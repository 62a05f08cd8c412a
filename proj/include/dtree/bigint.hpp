#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dtree {

/// Arbitrary-precision integer used for every label component and weight.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::gcd;

inline bool is_even(const Int& n) { return (n & 1) == 0; }
inline bool is_odd(const Int& n) { return (n & 1) == 1; }

} // namespace dtree
