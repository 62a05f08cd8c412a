#include "dtree/universal.hpp"

#include <mutex>

#include "dtree/errors.hpp"

namespace dtree {

namespace {

std::mutex prime_mutex;
std::vector<Int> prime_cache{2, 3};

} // namespace

Int nth_prime(std::size_t i) {
    std::lock_guard<std::mutex> lock(prime_mutex);
    while (prime_cache.size() < i) {
        Int candidate = prime_cache.back() + 2;
        for (;; candidate += 2) {
            bool composite = false;
            for (const Int& p : prime_cache) {
                if (p * p > candidate) break;
                if (candidate % p == 0) {
                    composite = true;
                    break;
                }
            }
            if (!composite) break;
        }
        prime_cache.push_back(candidate);
    }
    return prime_cache[i - 1];
}

bool is_in_u(const Int& n) {
    Int rest = n;
    for (std::size_t i = 1; rest > 1; ++i) {
        Int p = nth_prime(i);
        if (rest % p != 0) return false;
        do {
            rest /= p;
        } while (rest % p == 0);
    }
    return n >= 1;
}

UNumber decompose_u(const Int& n) {
    if (n < 1) {
        throw DomainError(n.str() + " is not a positive integer");
    }
    UNumber u{n, {}};
    Int rest = n;
    for (std::size_t i = 1; rest > 1; ++i) {
        Int p = nth_prime(i);
        Int exponent = 0;
        while (rest % p == 0) {
            rest /= p;
            ++exponent;
        }
        if (exponent == 0) {
            throw DomainError(n.str() + "'s prime divisors are not an initial segment" +
                              " of the primes (" + p.str() + " is skipped)");
        }
        u.exponents.push_back(exponent);
    }
    return u;
}

Int theta_universal(const Int& n) {
    UNumber u = decompose_u(n);
    if (u.exponents.empty()) throw RootHasNoParent("1 has no parent");
    Int p = nth_prime(u.exponents.size());
    Int rest = n;
    for (Int e = u.exponents.back(); e > 0; --e) rest /= p;
    return rest;
}

std::vector<Int> children_universal(const Int& n, std::size_t max_exponent) {
    UNumber u = decompose_u(n);
    Int next = nth_prime(u.exponents.size() + 1);
    std::vector<Int> children;
    Int child = n;
    for (std::size_t s = 1; s <= max_exponent; ++s) {
        child *= next;
        children.push_back(child);
    }
    return children;
}

std::pair<Int, std::size_t> exponent_and_index(const Int& n) {
    UNumber u = decompose_u(n);
    if (u.exponents.empty()) throw RootHasNoParent("1 has no largest prime factor");
    return {u.exponents.back(), u.exponents.size()};
}

std::string factorization_string(const Int& n) {
    UNumber u = decompose_u(n);
    if (u.exponents.empty()) return "1";
    std::string text;
    for (std::size_t i = 0; i < u.exponents.size(); ++i) {
        if (i > 0) text += "·";
        text += nth_prime(i + 1).str() + "^" + u.exponents[i].str();
    }
    return text;
}

Embedding embed_tree(const GenerativeSystem& system, std::size_t depth) {
    Embedding embedding;
    std::vector<std::vector<NodeLabel>> levels = enumerate_levels(system, depth);
    std::vector<Int> images{1};
    embedding.mapping.emplace_back(system.root, Int(1));
    for (std::size_t m = 0; m + 1 <= depth; ++m) {
        Int p = nth_prime(m + 1);
        std::vector<Int> next_images;
        for (std::size_t i = 0; i < levels[m].size(); ++i) {
            Int power = 1;
            for (const NodeLabel& child : system.expand(levels[m][i])) {
                power *= p;
                next_images.push_back(images[i] * power);
                embedding.mapping.emplace_back(child, next_images.back());
            }
        }
        images = std::move(next_images);
    }
    return embedding;
}

} // namespace dtree
