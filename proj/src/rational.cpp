#include "dtree/rational.hpp"

#include "dtree/errors.hpp"

namespace dtree {

namespace {

// x^-1 mod m for coprime x, m >= 2, via the extended Euclidean algorithm.
Int mod_inverse(Int x, const Int& m) {
    x %= m;
    Int r0 = m, r1 = x;
    Int s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    // r0 = gcd = 1, s0 = inverse of x up to sign of m.
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

} // namespace

void validate_rational(const Rational& r) {
    if (r.num < 1 || r.den < 1) {
        throw DomainError("fraction " + to_string(r) + " is not positive");
    }
    if (gcd(r.num, r.den) != 1) {
        throw DomainError("fraction " + to_string(r) + " is not in reduced form");
    }
}

void validate_mediant_matrix(const Mat2& m) {
    if (m.a < 0 || m.b < 0 || m.c < 0 || m.d < 0) {
        throw DomainError("matrix " + to_string(m) + " has a negative entry");
    }
    if (m.det() != 1) {
        throw DomainError("matrix " + to_string(m) + " has determinant " +
                          m.det().str() + ", expected 1");
    }
}

Rational theta_kepler(const Rational& r) {
    if (r.num == r.den) throw RootHasNoParent("1/1 has no parent");
    if (r.num > r.den) return {r.num - r.den, r.den};
    return {r.den - r.num, r.num};
}

Rational theta_calkin_wilf(const Rational& r) {
    if (r.num == r.den) throw RootHasNoParent("1/1 has no parent");
    if (r.num > r.den) return {r.num - r.den, r.den};
    return {r.num, r.den - r.num};
}

Rational theta_composed(const Rational& r) {
    if (r.num == r.den) throw RootHasNoParent("1/1 has no parent");
    if (r.num > r.den) return {r.num - r.den, r.den};
    if (is_even(r.den)) return {r.den - r.num, r.num};
    return {r.num, r.den - r.num};
}

std::vector<Rational> children_kepler(const Rational& r) {
    return {{r.num + r.den, r.den}, {r.den, r.num + r.den}};
}

std::vector<Rational> children_calkin_wilf(const Rational& r) {
    return {{r.num, r.num + r.den}, {r.num + r.den, r.den}};
}

std::vector<Rational> children_composed(const Rational& r) {
    if (is_odd(r.num + r.den)) {
        return {{r.num, r.num + r.den}, {r.num + r.den, r.den}};
    }
    return {{r.num + r.den, r.den}, {r.den, r.num + r.den}};
}

Mat2 sb_descend(const Mat2& m) {
    if (m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1) {
        throw RootHasNoParent("the identity matrix has no parent");
    }
    if (m.a >= m.b && m.c >= m.d) return {m.a - m.b, m.b, m.c - m.d, m.d};
    if (m.b >= m.a && m.d >= m.c) return {m.a, m.b - m.a, m.c, m.d - m.c};
    throw InvalidMatrix("neither column of " + to_string(m) + " dominates the other");
}

std::vector<Mat2> sb_children(const Mat2& m) {
    return {{m.a + m.b, m.b, m.c + m.d, m.d}, {m.a, m.a + m.b, m.c, m.c + m.d}};
}

Rational matrix_to_mediant(const Mat2& m) {
    Int num = m.a + m.b, den = m.c + m.d;
    if (num == 0 || den == 0) {
        throw InvalidMatrix("matrix " + to_string(m) + " has no mediant");
    }
    Int g = gcd(num, den);
    return {num / g, den / g};
}

Mat2 sb_locate(const Rational& r) {
    if (r.num < 1 || r.den < 1 || gcd(r.num, r.den) != 1) {
        throw NotCoprime("fraction " + to_string(r) +
                         " is not a reduced positive fraction");
    }
    if (r.num == 1 && r.den == 1) return {1, 0, 0, 1};
    if (r.num == 1) return {1, 0, r.den - 1, 1};
    Int a = mod_inverse(r.den, r.num);
    Int b = r.num - a;
    Int c = (a * r.den - 1) / r.num;
    Int d = r.den - c;
    return {a, b, c, d};
}

std::vector<Rational> sb_path(const Rational& r) {
    Mat2 m = sb_locate(r);
    std::vector<Rational> path{matrix_to_mediant(m)};
    while (!(m == Mat2{1, 0, 0, 1})) {
        m = sb_descend(m);
        path.push_back(matrix_to_mediant(m));
    }
    return path;
}

} // namespace dtree
