#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dtree/bigint.hpp"
#include "dtree/system.hpp"

namespace dtree {

/// Assigns every node of a system's domain to one of class_count classes.
/// classify returns a 0-based index; class_names has class_count entries.
struct TypeAssignment {
    std::size_t class_count = 0;
    std::vector<std::string> class_names;
    std::function<std::size_t(const NodeLabel&)> classify;
};

/// entries[i][j] = number of class-j children of every class-i node.
using TypeMatrix = std::vector<std::vector<Int>>;

/// Node counts per class at one level; sums to the level size.
using Distribution = std::vector<Int>;

/// a_n = sum of coefficients[i-1] * a_{n-i} for i = 1..order.
struct LinearRecurrence {
    std::vector<Int> coefficients; ///< h_1..h_m
    std::vector<Int> initial;      ///< a_0..a_{m-1}
};

/// u(t) / (1 - h_1 t - ... - h_m t^m), coefficients in ascending degree.
struct RationalGeneratingFunction {
    std::vector<Int> numerator;
    std::vector<Int> denominator; ///< constant term 1
};

/// Derives the type matrix from all parent-child pairs down to `depth`,
/// checking that same-class parents agree on their children's class counts.
/// Throws NotTyped with a witness pair on disagreement, ClassUnobserved if a
/// class has no expanded node within depth - 1 levels.
TypeMatrix derive_type_matrix(const GenerativeSystem& system,
                              const TypeAssignment& assignment, std::size_t depth);

/// Exact coefficients of det(xI - G) in ascending degree order (monic, so
/// the last entry is 1), by the Faddeev-LeVerrier recursion.
std::vector<Int> char_polynomial(const TypeMatrix& g);

/// Reads h_1..h_m off a monic polynomial x^m - h_1 x^{m-1} - ... - h_m.
std::vector<Int> recurrence_from_char_poly(const std::vector<Int>& poly);

/// Row vector times matrix.
Distribution step_distribution(const Distribution& pi, const TypeMatrix& g);

/// (|T_0|, ..., |T_depth|) where |T_m| sums the m-step distribution.
std::vector<Int> level_counts_matrix(const TypeMatrix& g, const Distribution& pi0,
                                     std::size_t depth);

/// True iff every term of seq from index |h| onward equals the h-weighted
/// sum of its predecessors.
bool recurrence_check(const std::vector<Int>& seq, const std::vector<Int>& h);

/// First n_terms of a recurrence's sequence.
std::vector<Int> recurrence_terms(const LinearRecurrence& rec, std::size_t n_terms);

/// Numerator u_i = a_i - sum of h_j * a_{i-j} over j = 1..i, denominator
/// 1 - h_1 t - ... - h_m t^m.
RationalGeneratingFunction generating_function(const std::vector<Int>& h,
                                               const std::vector<Int>& initial);

/// First n_terms Taylor coefficients, exact.
std::vector<Int> gf_series(const RationalGeneratingFunction& gf, std::size_t n_terms);

/// "(1 + t)/(1 - 3*t - 2*t^2)"; zero terms omitted, unit coefficients
/// printed without the "1*".
std::string to_string(const RationalGeneratingFunction& gf);

} // namespace dtree
