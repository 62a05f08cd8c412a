#include "dtree/pythagorean.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "dtree/errors.hpp"

namespace dtree {

namespace {

Int exact_sqrt(const Int& n, const std::string& what) {
    Int root = boost::multiprecision::sqrt(n);
    if (root * root != n) {
        throw NotPerfectSquare(what + " = " + n.str() + " is not a perfect square");
    }
    return root;
}

} // namespace

bool operator==(const Triple& s, const Triple& t) {
    return s.x == t.x && s.y == t.y && s.z == t.z;
}

std::string to_string(const Triple& t) {
    return t.x.str() + "," + t.y.str() + "," + t.z.str();
}

Triple parse_triple(std::string_view text) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            fields.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (fields.size() != 3) {
        throw ParseError("expected a triple \"x,y,z\", got \"" + std::string(text) + "\"");
    }
    return {parse_integer(fields[0]), parse_integer(fields[1]), parse_integer(fields[2])};
}

void validate_odd_pair(const OddPair& p) {
    if (p.b < 1 || p.a <= p.b) {
        throw DomainError("pair " + to_string(p) + " does not satisfy a > b >= 1");
    }
    if (is_even(p.a) || is_even(p.b)) {
        throw DomainError("pair " + to_string(p) + " has an even component");
    }
    if (gcd(p.a, p.b) != 1) {
        throw DomainError("pair " + to_string(p) + " is not coprime");
    }
}

Mod4Class mod4_class(const OddPair& p) {
    return (p.a + p.b) % 4 == 2 ? Mod4Class::A1 : Mod4Class::A2;
}

OddPair theta1(const OddPair& p) {
    if (p.a == 3 && p.b == 1) throw RootHasNoParent("(3,1) has no parent");
    if (p.a > 3 * p.b) return {p.a - 2 * p.b, p.b};
    if (2 * p.b < p.a && p.a < 3 * p.b) return {p.b, p.a - 2 * p.b};
    if (p.b < p.a && p.a < 2 * p.b) return {p.b, 2 * p.b - p.a};
    throw InvalidPair("pair " + to_string(p) + " lies on a descent boundary");
}

OddPair theta2(const OddPair& p) {
    if (p.a == 3 && p.b == 1) throw RootHasNoParent("(3,1) has no parent");
    Int half_sum = (p.a + p.b) / 2;
    if (is_odd(half_sum)) return {half_sum, p.b};
    Int half_diff = (p.a - p.b) / 2;
    if (half_diff == p.b) {
        throw InvalidPair("pair " + to_string(p) + " lies on a descent boundary");
    }
    if (half_diff > p.b) return {half_diff, p.b};
    return {p.b, half_diff};
}

std::vector<OddPair> children1(const OddPair& p) {
    const Int &a = p.a, &b = p.b;
    return {{a + 2 * b, b}, {2 * a + b, a}, {2 * a - b, a}};
}

std::vector<OddPair> children2(const OddPair& p) {
    const Int &a = p.a, &b = p.b;
    return {{2 * a - b, b}, {2 * a + b, b}, {a + 2 * b, a}};
}

OddPair theta_big(const OddPair& p, int which) {
    bool first_class = mod4_class(p) == Mod4Class::A1;
    if (which == 2) first_class = !first_class;
    return first_class ? theta1(p) : theta2(p);
}

std::vector<OddPair> children_big1(const OddPair& p) {
    const Int &a = p.a, &b = p.b;
    if (mod4_class(p) == Mod4Class::A1) {
        return {{2 * a - b, a}, {2 * a + b, b}, {a + 2 * b, a}};
    }
    return {{a + 2 * b, b}, {2 * a + b, a}, {2 * a + b, b}, {a + 2 * b, a}};
}

std::vector<OddPair> children_big2(const OddPair& p) {
    const Int &a = p.a, &b = p.b;
    if (mod4_class(p) == Mod4Class::A1) {
        return {{2 * a - b, b}, {2 * a + b, a}, {a + 2 * b, b}};
    }
    return {{2 * a - b, a}, {2 * a - b, b}};
}

Triple pair_to_triple(const OddPair& p) {
    const Int &a = p.a, &b = p.b;
    return {a * b, (a * a - b * b) / 2, (a * a + b * b) / 2};
}

OddPair triple_to_pair(const Triple& t) {
    if (t.x < 1 || t.y < 1 || t.z < 1 || t.x * t.x + t.y * t.y != t.z * t.z) {
        throw NotPythagorean("(" + to_string(t) + ") is not a Pythagorean triple");
    }
    if (gcd(t.x, t.y) != 1) {
        throw NotPrimitive("(" + to_string(t) + ") has a common factor");
    }
    // Exactly one leg of a primitive triple is odd; normalize it to x.
    Int even_leg = is_odd(t.x) ? t.y : t.x;
    OddPair p{exact_sqrt(t.z + even_leg, "z + y"), exact_sqrt(t.z - even_leg, "z - y")};
    validate_odd_pair(p);
    return p;
}

std::vector<Triple> triple_path(const Triple& t, const GenerativeSystem& tree) {
    std::vector<Triple> triples;
    for (const NodeLabel& label : path_to_root(tree, NodeLabel{triple_to_pair(t)})) {
        triples.push_back(pair_to_triple(std::get<OddPair>(label)));
    }
    return triples;
}

} // namespace dtree
