#pragma once

#include <vector>

#include "dtree/labels.hpp"

namespace dtree {

/// Throws DomainError unless num >= 1, den >= 1 and gcd(num, den) = 1.
void validate_rational(const Rational& r);

/// Throws DomainError unless all entries are nonnegative and det = 1.
void validate_mediant_matrix(const Mat2& m);

// Descent functions on reduced positive fractions, weight a + b. Each throws
// RootHasNoParent at 1/1 and strictly decreases the weight elsewhere.
Rational theta_kepler(const Rational& r);
Rational theta_calkin_wilf(const Rational& r);
/// Kepler's rule when the denominator is even, Calkin-Wilf's when odd.
Rational theta_composed(const Rational& r);

// Ordered two-element child lists, the exact inverses of the thetas above.
std::vector<Rational> children_kepler(const Rational& r);
std::vector<Rational> children_calkin_wilf(const Rational& r);
std::vector<Rational> children_composed(const Rational& r);

/// Subtracts the smaller column from the dominating one; det stays 1.
/// Throws RootHasNoParent at the identity, InvalidMatrix if neither column
/// dominates (unreachable from det-1 matrices).
Mat2 sb_descend(const Mat2& m);

/// [[a+b,b],[c+d,d]] then [[a,a+b],[c,c+d]]; sb_descend of each returns m.
std::vector<Mat2> sb_children(const Mat2& m);

/// The mediant (a+b)/(c+d) of the matrix's column fractions a/c and b/d.
Rational matrix_to_mediant(const Mat2& m);

/// The unique det-1 matrix whose mediant is r, found by modular inversion:
/// a = den^-1 (mod num), b = num - a, c = (a*den - 1)/num, d = den - c.
/// Throws NotCoprime unless r is a reduced positive fraction.
Mat2 sb_locate(const Rational& r);

/// Mediants along sb_descend iterated from sb_locate(r) down to 1/1.
std::vector<Rational> sb_path(const Rational& r);

} // namespace dtree
