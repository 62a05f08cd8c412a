#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dtree/bigint.hpp"
#include "dtree/labels.hpp"
#include "dtree/system.hpp"

namespace dtree {

/// The i-th prime, 1-based: nth_prime(1) = 2. Primes are produced by an
/// incremental sieve and cached; safe to call concurrently.
Int nth_prime(std::size_t i);

/// An integer whose prime divisors form an initial segment 2, 3, 5, ... of
/// the primes. exponents[i] is the exponent of nth_prime(i + 1), all >= 1;
/// the integer 1 has an empty exponent list.
struct UNumber {
    Int value;
    std::vector<Int> exponents;
};

/// True iff n's prime divisors are an initial segment of the primes.
bool is_in_u(const Int& n);

/// Factors an initial-prime-segment integer; throws DomainError otherwise.
UNumber decompose_u(const Int& n);

/// Strips the largest prime's entire power. Throws RootHasNoParent at 1.
Int theta_universal(const Int& n);

/// [n * p^s for s = 1..max_exponent] where p is the smallest prime not
/// dividing n. Every node has infinitely many children; the bound selects a
/// finite prefix.
std::vector<Int> children_universal(const Int& n, std::size_t max_exponent);

/// (u, h): the exponent of n's largest prime factor and that prime's
/// 1-based index. Throws RootHasNoParent at 1.
std::pair<Int, std::size_t> exponent_and_index(const Int& n);

/// "2^3·3^1·5^2"; "1" for the root.
std::string factorization_string(const Int& n);

/// Injective images of a finite tree: the root maps to 1 and the s-th child
/// of a level-k node b maps to image(b) * p_{k+1}^s.
struct Embedding {
    /// (node, image) in BFS order, root first.
    std::vector<std::pair<NodeLabel, Int>> mapping;
};

/// Embeds levels 0..depth of a bounded-degree system.
Embedding embed_tree(const GenerativeSystem& system, std::size_t depth);

} // namespace dtree
