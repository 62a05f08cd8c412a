#include "dtree/catalog.hpp"

#include <map>

#include "dtree/errors.hpp"
#include "dtree/pythagorean.hpp"
#include "dtree/rational.hpp"
#include "dtree/universal.hpp"

namespace dtree {

namespace {

// Shape gate for validate: weight/descend/expand presuppose valid labels,
// so only the validators need to reject foreign label kinds.
template <class T>
const T& shape(const NodeLabel& x) {
    if (const T* v = std::get_if<T>(&x)) return *v;
    throw DomainError("label " + to_string(x) + " has the wrong shape for this system");
}

Int vector_weight(const IntVec& v) {
    Int total = v.parts.size();
    for (const Int& part : v.parts) total += part;
    return total;
}

// Shared by partitions and compositions: drop a trailing 1, else decrement.
IntVec vector_descend(const IntVec& v) {
    if (v.parts.size() == 1 && v.parts[0] == 1) {
        throw RootHasNoParent("(1) has no parent");
    }
    IntVec parent = v;
    if (parent.parts.back() == 1) {
        parent.parts.pop_back();
    } else {
        --parent.parts.back();
    }
    return parent;
}

GenerativeSystem make_binary() {
    GenerativeSystem s;
    s.id = "binary";
    s.domain_tag = "integer:n";
    s.root = Int(1);
    s.weight = [](const NodeLabel& x) { return std::get<Int>(x); };
    s.validate = [](const NodeLabel& x) {
        if (shape<Int>(x) < 1) {
            throw DomainError(to_string(x) + " is not a positive integer");
        }
    };
    s.descend = [](const NodeLabel& x) -> NodeLabel {
        const Int& n = std::get<Int>(x);
        if (n == 1) throw RootHasNoParent("1 has no parent");
        return is_even(n) ? Int(n / 2) : Int(n - 1);
    };
    s.expand = [](const NodeLabel& x) -> std::vector<NodeLabel> {
        const Int& n = std::get<Int>(x);
        if (is_even(n)) return {Int(n + 1), Int(2 * n)};
        return {Int(2 * n)};
    };
    return s;
}

GenerativeSystem make_partitions() {
    GenerativeSystem s;
    s.id = "partitions";
    s.domain_tag = "partition-vector:t+sum";
    s.root = IntVec{{1}};
    s.weight = [](const NodeLabel& x) { return vector_weight(std::get<IntVec>(x)); };
    s.validate = [](const NodeLabel& x) {
        const auto& parts = shape<IntVec>(x).parts;
        if (parts.empty()) throw DomainError("a partition has at least one component");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) {
                throw DomainError(to_string(x) + " has a nonpositive component");
            }
            if (i > 0 && parts[i] > parts[i - 1]) {
                throw DomainError(to_string(x) + " is not weakly decreasing");
            }
        }
    };
    s.descend = [](const NodeLabel& x) -> NodeLabel {
        return vector_descend(std::get<IntVec>(x));
    };
    s.expand = [](const NodeLabel& x) -> std::vector<NodeLabel> {
        const IntVec& v = std::get<IntVec>(x);
        std::vector<NodeLabel> children;
        // The incremented child must stay weakly decreasing; a single
        // component has no bound above it.
        std::size_t t = v.parts.size();
        if (t == 1 || v.parts[t - 2] >= v.parts[t - 1] + 1) {
            IntVec up = v;
            ++up.parts.back();
            children.push_back(std::move(up));
        }
        IntVec longer = v;
        longer.parts.push_back(1);
        children.push_back(std::move(longer));
        return children;
    };
    return s;
}

GenerativeSystem make_compositions() {
    GenerativeSystem s;
    s.id = "compositions";
    s.domain_tag = "composition-vector:t+sum";
    s.root = IntVec{{1}};
    s.weight = [](const NodeLabel& x) { return vector_weight(std::get<IntVec>(x)); };
    s.validate = [](const NodeLabel& x) {
        const auto& parts = shape<IntVec>(x).parts;
        if (parts.empty()) throw DomainError("a composition has at least one component");
        for (const Int& part : parts) {
            if (part < 1) {
                throw DomainError(to_string(x) + " has a nonpositive component");
            }
        }
    };
    s.descend = [](const NodeLabel& x) -> NodeLabel {
        return vector_descend(std::get<IntVec>(x));
    };
    s.expand = [](const NodeLabel& x) -> std::vector<NodeLabel> {
        const IntVec& v = std::get<IntVec>(x);
        IntVec longer = v;
        longer.parts.push_back(1);
        IntVec up = v;
        ++up.parts.back();
        return {std::move(longer), std::move(up)};
    };
    return s;
}

GenerativeSystem make_rational(const std::string& id, Rational (*theta)(const Rational&),
                               std::vector<Rational> (*children)(const Rational&)) {
    GenerativeSystem s;
    s.id = id;
    s.domain_tag = "rational:a+b";
    s.root = Rational{1, 1};
    s.weight = [](const NodeLabel& x) {
        const Rational& r = std::get<Rational>(x);
        return r.num + r.den;
    };
    s.validate = [](const NodeLabel& x) { validate_rational(shape<Rational>(x)); };
    s.descend = [theta](const NodeLabel& x) -> NodeLabel {
        return theta(std::get<Rational>(x));
    };
    s.expand = [children](const NodeLabel& x) {
        std::vector<NodeLabel> labels;
        for (Rational& child : children(std::get<Rational>(x))) {
            labels.emplace_back(std::move(child));
        }
        return labels;
    };
    return s;
}

GenerativeSystem make_stern_brocot() {
    GenerativeSystem s;
    s.id = "stern-brocot";
    s.domain_tag = "sl2n:sum";
    s.root = Mat2{1, 0, 0, 1};
    s.weight = [](const NodeLabel& x) {
        const Mat2& m = std::get<Mat2>(x);
        return m.a + m.b + m.c + m.d;
    };
    s.validate = [](const NodeLabel& x) { validate_mediant_matrix(shape<Mat2>(x)); };
    s.descend = [](const NodeLabel& x) -> NodeLabel {
        return sb_descend(std::get<Mat2>(x));
    };
    s.expand = [](const NodeLabel& x) {
        std::vector<NodeLabel> labels;
        for (Mat2& child : sb_children(std::get<Mat2>(x))) {
            labels.emplace_back(std::move(child));
        }
        return labels;
    };
    return s;
}

GenerativeSystem make_pt(int which) {
    GenerativeSystem s;
    s.id = which == 1 ? "pt1" : "pt2";
    s.domain_tag = "odd-pair:a+b";
    s.root = OddPair{3, 1};
    s.weight = [](const NodeLabel& x) {
        const OddPair& p = std::get<OddPair>(x);
        return p.a + p.b;
    };
    s.validate = [](const NodeLabel& x) { validate_odd_pair(shape<OddPair>(x)); };
    s.descend = [which](const NodeLabel& x) -> NodeLabel {
        const OddPair& p = std::get<OddPair>(x);
        return which == 1 ? theta1(p) : theta2(p);
    };
    s.expand = [which](const NodeLabel& x) {
        std::vector<NodeLabel> labels;
        for (OddPair& child :
             which == 1 ? children1(std::get<OddPair>(x)) : children2(std::get<OddPair>(x))) {
            labels.emplace_back(std::move(child));
        }
        return labels;
    };
    return s;
}

// Initial-prime-segment integers whose exponents follow the laws of growth:
// the exponent of 2 is 1, later exponents are 1 or 2, and an exponent 2 is
// never followed by another 2.
void validate_growth_label(const NodeLabel& x) {
    UNumber u = decompose_u(shape<Int>(x));
    for (std::size_t i = 0; i < u.exponents.size(); ++i) {
        bool ok = i == 0 ? u.exponents[i] == 1
                         : u.exponents[i] == 1 ||
                               (u.exponents[i] == 2 && u.exponents[i - 1] == 1);
        if (!ok) {
            throw DomainError(u.value.str() + " = " + factorization_string(u.value) +
                              " is not reachable by the laws of growth");
        }
    }
}

GenerativeSystem make_laws_of_growth() {
    GenerativeSystem s;
    s.id = "laws-of-growth";
    s.domain_tag = "u-growth:n";
    s.root = Int(1);
    s.weight = [](const NodeLabel& x) { return std::get<Int>(x); };
    s.validate = validate_growth_label;
    s.descend = [](const NodeLabel& x) -> NodeLabel {
        return theta_universal(std::get<Int>(x));
    };
    s.expand = [](const NodeLabel& x) -> std::vector<NodeLabel> {
        const Int& n = std::get<Int>(x);
        if (n == 1) return {Int(2)};
        auto [u, h] = exponent_and_index(n);
        Int p = nth_prime(h + 1);
        if (u == 1) return {Int(n * p), Int(n * p * p)};
        return {Int(n * p)};
    };
    return s;
}

GenerativeSystem make_universal() {
    GenerativeSystem s;
    s.id = "universal";
    s.domain_tag = "u-number:n";
    s.root = Int(1);
    s.bounded_degree = false;
    s.weight = [](const NodeLabel& x) { return std::get<Int>(x); };
    s.validate = [](const NodeLabel& x) { decompose_u(shape<Int>(x)); };
    s.descend = [](const NodeLabel& x) -> NodeLabel {
        return theta_universal(std::get<Int>(x));
    };
    s.expand = [](const NodeLabel&) -> std::vector<NodeLabel> {
        throw UnboundedDegree("universal-tree nodes have infinitely many children;"
                              " enumerate with an exponent bound instead");
    };
    return s;
}

TypeAssignment parity_assignment() {
    return {2,
            {"odd", "even"},
            [](const NodeLabel& x) { return is_odd(std::get<Int>(x)) ? 0u : 1u; }};
}

TypeAssignment last_component_assignment() {
    return {2, {"last=1", "last>1"}, [](const NodeLabel& x) {
                return std::get<IntVec>(x).parts.back() == 1 ? 0u : 1u;
            }};
}

TypeAssignment mod4_assignment() {
    return {2, {"A1", "A2"}, [](const NodeLabel& x) {
                return mod4_class(std::get<OddPair>(x)) == Mod4Class::A1 ? 0u : 1u;
            }};
}

TypeAssignment single_class_assignment() {
    return {1, {"all"}, [](const NodeLabel&) { return 0u; }};
}

TypedInfo doubling_info() {
    return {single_class_assignment(), {{2}}, {1}};
}

std::map<std::string, PartitionRule, std::less<>> make_rules() {
    std::map<std::string, PartitionRule, std::less<>> rules;
    rules["parity"] = {"parity", [](const NodeLabel& x) {
                           return is_odd(std::get<Int>(x)) ? PartClass::A : PartClass::B;
                       }};
    rules["denominator-parity"] = {"denominator-parity", [](const NodeLabel& x) {
                                       return is_even(std::get<Rational>(x).den)
                                                  ? PartClass::A
                                                  : PartClass::B;
                                   }};
    rules["mod4"] = {"mod4", [](const NodeLabel& x) {
                         return mod4_class(std::get<OddPair>(x)) == Mod4Class::A1
                                    ? PartClass::A
                                    : PartClass::B;
                     }};
    return rules;
}

NodeLabel label_from_integer(std::string_view text) { return parse_integer(text); }
NodeLabel label_from_vector(std::string_view text) { return parse_int_vector(text); }
NodeLabel label_from_rational(std::string_view text) { return parse_rational(text); }
NodeLabel label_from_pair(std::string_view text) { return parse_odd_pair(text); }
NodeLabel label_from_mat2(std::string_view text) { return parse_mat2(text); }

std::map<std::string, SystemEntry, std::less<>> make_registry() {
    std::map<std::string, SystemEntry, std::less<>> registry;

    registry["binary"] = {make_binary(),
                          label_from_integer,
                          TypedInfo{parity_assignment(), {{0, 1}, {1, 1}}, {1, 0}}};
    registry["partitions"] = {make_partitions(), label_from_vector, std::nullopt};
    registry["compositions"] = {
        make_compositions(),
        label_from_vector,
        TypedInfo{last_component_assignment(), {{1, 1}, {1, 1}}, {1, 0}}};
    registry["kepler"] = {make_rational("kepler", theta_kepler, children_kepler),
                          label_from_rational, doubling_info()};
    registry["calkin-wilf"] = {
        make_rational("calkin-wilf", theta_calkin_wilf, children_calkin_wilf),
        label_from_rational, doubling_info()};
    registry["rational-composed"] = {
        make_rational("rational-composed", theta_composed, children_composed),
        label_from_rational, doubling_info()};
    registry["stern-brocot"] = {make_stern_brocot(), label_from_mat2, doubling_info()};

    GenerativeSystem pt1 = make_pt(1);
    GenerativeSystem pt2 = make_pt(2);
    GenerativeSystem pt3 = compose(pt1, pt2, partition_rule("mod4"));
    pt3.id = "pt3";
    GenerativeSystem pt4 = compose(pt1, pt2, flipped(partition_rule("mod4")));
    pt4.id = "pt4";
    registry["pt1"] = {std::move(pt1), label_from_pair,
                       TypedInfo{mod4_assignment(), {{1, 2}, {2, 1}}, {0, 1}}};
    registry["pt2"] = {std::move(pt2), label_from_pair,
                       TypedInfo{mod4_assignment(), {{1, 2}, {1, 2}}, {0, 1}}};
    registry["pt3"] = {std::move(pt3), label_from_pair,
                       TypedInfo{mod4_assignment(), {{1, 2}, {2, 2}}, {0, 1}}};
    registry["pt4"] = {std::move(pt4), label_from_pair,
                       TypedInfo{mod4_assignment(), {{1, 2}, {1, 1}}, {0, 1}}};

    registry["laws-of-growth"] = {make_laws_of_growth(), label_from_integer, std::nullopt};
    registry["universal"] = {make_universal(), label_from_integer, std::nullopt};
    return registry;
}

const std::map<std::string, SystemEntry, std::less<>>& registry() {
    static const auto entries = make_registry();
    return entries;
}

} // namespace

const std::vector<std::string>& list_systems() {
    static const std::vector<std::string> ids{
        "binary", "partitions", "compositions",  "kepler", "calkin-wilf",
        "rational-composed", "stern-brocot", "pt1", "pt2", "pt3", "pt4",
        "laws-of-growth", "universal"};
    return ids;
}

const SystemEntry& get_system(std::string_view id) {
    const auto& entries = registry();
    auto it = entries.find(id);
    if (it == entries.end()) {
        throw UnknownSystem("unknown system \"" + std::string(id) +
                            "\"; see the systems command for the registry");
    }
    return it->second;
}

const PartitionRule& partition_rule(std::string_view name) {
    static const auto rules = make_rules();
    auto it = rules.find(name);
    if (it == rules.end()) {
        throw UnknownRule("unknown partition rule \"" + std::string(name) + "\"");
    }
    return it->second;
}

const std::vector<std::string>& list_partition_rules() {
    static const std::vector<std::string> names{"denominator-parity", "mod4", "parity"};
    return names;
}

} // namespace dtree
