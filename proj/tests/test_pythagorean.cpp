#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "dtree/catalog.hpp"
#include "dtree/errors.hpp"
#include "dtree/pythagorean.hpp"
#include "oracles.hpp"

using namespace dtree;

namespace {

std::vector<std::string> names(const std::vector<NodeLabel>& labels) {
    std::vector<std::string> out;
    for (const NodeLabel& x : labels) out.push_back(to_string(x));
    return out;
}

std::vector<std::string> pair_names(const std::vector<OddPair>& pairs) {
    std::vector<std::string> out;
    for (const OddPair& p : pairs) out.push_back(to_string(p));
    return out;
}

} // namespace

TEST_CASE("mod-4 classes of odd pairs") {
    CHECK(mod4_class(OddPair{3, 1}) == Mod4Class::A2);
    CHECK(mod4_class(OddPair{5, 1}) == Mod4Class::A1);
    CHECK(mod4_class(OddPair{7, 3}) == Mod4Class::A1);
    CHECK(mod4_class(OddPair{5, 3}) == Mod4Class::A2);
}

TEST_CASE("the two base descents") {
    // theta1 splits at the 2b and 3b boundaries.
    CHECK(theta1(OddPair{9, 1}) == OddPair{7, 1});   // a > 3b
    CHECK(theta1(OddPair{7, 3}) == OddPair{3, 1});   // 2b < a < 3b
    CHECK(theta1(OddPair{5, 3}) == OddPair{3, 1});   // b < a < 2b
    CHECK(theta1(OddPair{11, 3}) == OddPair{5, 3});  // a > 3b
    CHECK(theta1(OddPair{7, 5}) == OddPair{5, 3});   // b < a < 2b

    // theta2 halves either the sum or the difference, whichever is odd.
    CHECK(theta2(OddPair{5, 1}) == OddPair{3, 1});   // (a+b)/2 = 3 odd
    CHECK(theta2(OddPair{7, 1}) == OddPair{3, 1});   // (a-b)/2 = 3 odd
    CHECK(theta2(OddPair{5, 3}) == OddPair{3, 1});   // (a-b)/2 = 1, reordered
    CHECK(theta2(OddPair{9, 5}) == OddPair{7, 5});   // (a+b)/2 = 7 odd

    CHECK_THROWS_AS(theta1(OddPair{3, 1}), RootHasNoParent);
    CHECK_THROWS_AS(theta2(OddPair{3, 1}), RootHasNoParent);
    CHECK_THROWS_AS(theta1(OddPair{9, 3}), InvalidPair);
}

TEST_CASE("the two base child lists") {
    CHECK(pair_names(children1(OddPair{3, 1})) ==
          std::vector<std::string>{"(5,1)", "(7,3)", "(5,3)"});
    CHECK(pair_names(children2(OddPair{3, 1})) ==
          std::vector<std::string>{"(5,1)", "(7,1)", "(5,3)"});

    for (const OddPair& p : {OddPair{3, 1}, OddPair{7, 3}, OddPair{5, 1},
                             OddPair{9, 5}, OddPair{11, 7}}) {
        for (const OddPair& child : children1(p)) CHECK(theta1(child) == p);
        for (const OddPair& child : children2(p)) CHECK(theta2(child) == p);
    }
}

TEST_CASE("composed descents and their child lists") {
    // (7,3) is A1, so theta_big(.., 1) applies theta1 there.
    CHECK(theta_big(OddPair{7, 3}, 1) == theta1(OddPair{7, 3}));
    CHECK(theta_big(OddPair{5, 3}, 1) == theta2(OddPair{5, 3}));
    CHECK(theta_big(OddPair{7, 3}, 2) == theta2(OddPair{7, 3}));
    CHECK(theta_big(OddPair{5, 3}, 2) == theta1(OddPair{5, 3}));

    CHECK(pair_names(children_big1(OddPair{3, 1})) ==
          std::vector<std::string>{"(5,1)", "(7,3)", "(7,1)", "(5,3)"});
    CHECK(pair_names(children_big2(OddPair{3, 1})) ==
          std::vector<std::string>{"(5,3)", "(5,1)"});
    CHECK(pair_names(children_big1(OddPair{5, 1})) ==
          std::vector<std::string>{"(9,5)", "(11,1)", "(7,5)"});
    CHECK(pair_names(children_big2(OddPair{5, 1})) ==
          std::vector<std::string>{"(9,1)", "(11,5)", "(7,1)"});

    for (const OddPair& p : {OddPair{3, 1}, OddPair{5, 1}, OddPair{7, 3},
                             OddPair{5, 3}, OddPair{9, 5}}) {
        for (const OddPair& child : children_big1(p))
            CHECK(theta_big(child, 1) == p);
        for (const OddPair& child : children_big2(p))
            CHECK(theta_big(child, 2) == p);
    }
}

TEST_CASE("the composed catalog trees match the hand-coded child lists") {
    const auto& pt3 = get_system("pt3").system;
    const auto& pt4 = get_system("pt4").system;

    for (const auto& level : enumerate_levels(pt3, 6)) {
        for (const NodeLabel& x : level) {
            CHECK(names(pt3.expand(x)) ==
                  pair_names(children_big1(std::get<OddPair>(x))));
        }
    }

    // The second composition agrees as a set everywhere, and exactly on A2
    // nodes; on A1 nodes the two derivations list the children differently.
    for (const auto& level : enumerate_levels(pt4, 6)) {
        for (const NodeLabel& x : level) {
            auto from_tree = names(pt4.expand(x));
            auto by_hand = pair_names(children_big2(std::get<OddPair>(x)));
            if (mod4_class(std::get<OddPair>(x)) == Mod4Class::A2) {
                CHECK(from_tree == by_hand);
            } else {
                auto a = from_tree, b = by_hand;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("pairs and triples convert back and forth") {
    CHECK(pair_to_triple(OddPair{3, 1}) == Triple{3, 4, 5});
    CHECK(pair_to_triple(OddPair{5, 1}) == Triple{5, 12, 13});
    CHECK(pair_to_triple(OddPair{7, 3}) == Triple{21, 20, 29});

    CHECK(triple_to_pair(Triple{3, 4, 5}) == OddPair{3, 1});
    CHECK(triple_to_pair(Triple{21, 20, 29}) == OddPair{7, 3});
    // Legs may arrive even-first.
    CHECK(triple_to_pair(Triple{20, 21, 29}) == OddPair{7, 3});
    CHECK(triple_to_pair(Triple{4, 3, 5}) == OddPair{3, 1});

    CHECK_THROWS_AS(triple_to_pair(Triple{6, 8, 10}), NotPrimitive);
    CHECK_THROWS_AS(triple_to_pair(Triple{3, 4, 6}), NotPythagorean);
    CHECK_THROWS_AS(triple_to_pair(Triple{1, 0, 1}), NotPythagorean);

    CHECK(parse_triple("21,20,29") == Triple{21, 20, 29});
    CHECK(to_string(Triple{3, 4, 5}) == "3,4,5");
    CHECK_THROWS_AS(parse_triple("3,4"), ParseError);
    CHECK_THROWS_AS(parse_triple("3,4,5,6"), ParseError);
}

TEST_CASE("triple paths through the four trees") {
    const auto& pt1 = get_system("pt1").system;
    auto path = triple_path(Triple{21, 20, 29}, pt1);
    REQUIRE(path.size() == 2);
    CHECK(path[0] == Triple{21, 20, 29});
    CHECK(path[1] == Triple{3, 4, 5});

    auto longer = triple_path(Triple{21, 20, 29}, get_system("pt2").system);
    REQUIRE(longer.size() == 3);
    CHECK(longer[1] == Triple{15, 8, 17});
    CHECK(longer[2] == Triple{3, 4, 5});

    auto short_path = triple_path(Triple{3, 4, 5}, pt1);
    CHECK(short_path.size() == 1);

    // The same triple descends differently in different trees.
    const auto& pt2 = get_system("pt2").system;
    auto in_first = triple_path(Triple{45, 28, 53}, pt1);
    auto in_second = triple_path(Triple{45, 28, 53}, pt2);
    REQUIRE(in_first.size() == 3);
    CHECK(in_first[1] == Triple{5, 12, 13});
    REQUIRE(in_second.size() == 4);
    CHECK(in_second[1] == Triple{35, 12, 37});
    CHECK(in_second[2] == Triple{5, 12, 13});
    CHECK(in_second[3] == Triple{3, 4, 5});
}

TEST_CASE("each tree holds exactly the primitive triples below a cutoff") {
    auto oracle_triples = oracle::primitive_triples_by_legs(1000);
    CHECK(oracle_triples.size() == 158);
    std::set<std::string> expected;
    for (const auto& t : oracle_triples) {
        expected.insert(to_string(Triple{t[0], t[1], t[2]}));
    }

    for (const std::string id : {"pt1", "pt2", "pt3", "pt4"}) {
        CAPTURE(id);
        const auto& system = get_system(id).system;

        // Every oracle triple's pair descends to (3,1) in this tree.
        for (const auto& t : oracle_triples) {
            OddPair p = triple_to_pair(Triple{t[0], t[1], t[2]});
            CHECK_NOTHROW(path_to_root(system, p));
        }

        // The hypotenuse grows along every edge, so pruning where it
        // exceeds the cutoff still visits every in-range node.
        std::set<std::string> found;
        std::vector<OddPair> frontier{OddPair{3, 1}};
        while (!frontier.empty()) {
            OddPair p = frontier.back();
            frontier.pop_back();
            Triple t = pair_to_triple(p);
            if (t.z > 1000) continue;
            CHECK(found.insert(to_string(t)).second);
            for (const NodeLabel& child : system.expand(p)) {
                frontier.push_back(std::get<OddPair>(child));
            }
        }
        CHECK(found == expected);
    }
}

TEST_CASE("pair enumeration and triple conversion form a bijection") {
    const auto& pt1 = get_system("pt1").system;
    std::set<std::string> seen_triples;
    for (const auto& level : enumerate_levels(pt1, 6)) {
        for (const NodeLabel& x : level) {
            Triple t = pair_to_triple(std::get<OddPair>(x));
            Int legs = t.x * t.x + t.y * t.y;
            CHECK(legs == t.z * t.z);
            CHECK(gcd(t.x, t.y) == 1);
            CHECK(is_odd(t.x));
            CHECK(is_even(t.y));
            CHECK(seen_triples.insert(to_string(t)).second);
            CHECK(triple_to_pair(t) == std::get<OddPair>(x));
        }
    }
}

TEST_CASE("pair validation") {
    CHECK_NOTHROW(validate_odd_pair(OddPair{7, 3}));
    CHECK_THROWS_AS(validate_odd_pair(OddPair{3, 3}), DomainError);
    CHECK_THROWS_AS(validate_odd_pair(OddPair{4, 1}), DomainError);
    CHECK_THROWS_AS(validate_odd_pair(OddPair{9, 3}), DomainError);
    CHECK_THROWS_AS(validate_odd_pair(OddPair{1, 3}), DomainError);
}
