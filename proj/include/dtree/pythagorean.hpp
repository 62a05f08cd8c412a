#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dtree/labels.hpp"
#include "dtree/system.hpp"

namespace dtree {

/// Primitive Pythagorean triple, stored odd leg first: x odd, y even,
/// x^2 + y^2 = z^2, gcd(x, y) = 1.
struct Triple {
    Int x;
    Int y;
    Int z;
};

bool operator==(const Triple& s, const Triple& t);

/// Text form "x,y,z".
std::string to_string(const Triple& t);
Triple parse_triple(std::string_view text);

/// Throws DomainError unless a > b >= 1, both odd, gcd(a, b) = 1.
void validate_odd_pair(const OddPair& p);

enum class Mod4Class { A1, A2 };

/// A1 when a + b = 2 (mod 4), A2 when a + b = 0 (mod 4); no other residue
/// occurs for two odd components.
Mod4Class mod4_class(const OddPair& p);

// The two base descent functions on odd coprime pairs, weight a + b. Both
// throw RootHasNoParent at (3,1); the case boundaries a = 3b and a = 2b
// cannot occur for valid non-root pairs and are guarded with InvalidPair.
OddPair theta1(const OddPair& p);
OddPair theta2(const OddPair& p);

// Ordered three-element child lists, the exact inverses of theta1/theta2.
std::vector<OddPair> children1(const OddPair& p);
std::vector<OddPair> children2(const OddPair& p);

/// The composed descents: which = 1 applies theta1 on A1 and theta2 on A2;
/// which = 2 swaps the classes.
OddPair theta_big(const OddPair& p, int which);

// Hand-coded inverses of the composed descents. children_big1 returns three
// children on A1 and four on A2; children_big2 returns three on A1 and two
// on A2.
std::vector<OddPair> children_big1(const OddPair& p);
std::vector<OddPair> children_big2(const OddPair& p);

/// (a, b) -> (ab, (a^2 - b^2)/2, (a^2 + b^2)/2).
Triple pair_to_triple(const OddPair& p);

/// Inverse of pair_to_triple: a = sqrt(z + y), b = sqrt(z - y). Legs may be
/// given in either order; the odd leg is normalized to x first. Throws
/// NotPythagorean, NotPrimitive or NotPerfectSquare for invalid input.
OddPair triple_to_pair(const Triple& t);

/// The path from t down to (3,4,5) in a tree over odd coprime pairs.
std::vector<Triple> triple_path(const Triple& t, const GenerativeSystem& tree);

} // namespace dtree
