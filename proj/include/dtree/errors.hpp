#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtree {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A label's text form could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

/// A label violates the invariants of a system's domain.
struct DomainError : Error {
    using Error::Error;
};

/// A descent step failed to decrease the weight, or the iteration budget
/// weight(x) - weight(root) was exceeded.
struct BrokenSystem : Error {
    using Error::Error;
};

/// Level enumeration was requested for a system with unbounded node degree.
struct UnboundedDegree : Error {
    using Error::Error;
};

/// Composition of systems with differing domain tags or roots.
struct IncompatibleSystems : Error {
    using Error::Error;
};

/// The root has no parent under a descent function.
struct RootHasNoParent : Error {
    using Error::Error;
};

/// Registry lookup failed.
struct UnknownSystem : Error {
    using Error::Error;
};

/// Partition-rule lookup failed.
struct UnknownRule : Error {
    using Error::Error;
};

/// Vector/matrix sizes do not agree.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Two same-type nodes disagree on their children's type counts.
struct NotTyped : Error {
    NotTyped(std::string msg, std::string a, std::string b)
        : Error(std::move(msg)), witness_a(std::move(a)), witness_b(std::move(b)) {}
    std::string witness_a; ///< canonical form of the first witness node
    std::string witness_b; ///< canonical form of the conflicting node
};

/// A type class was never observed up to the requested depth.
struct ClassUnobserved : Error {
    ClassUnobserved(std::string msg, std::size_t index)
        : Error(std::move(msg)), class_index(index) {}
    std::size_t class_index;
};

/// Neither column of a mediant matrix dominates the other.
struct InvalidMatrix : Error {
    using Error::Error;
};

/// Numerator and denominator share a common factor.
struct NotCoprime : Error {
    using Error::Error;
};

/// An odd pair fell on an impossible descent boundary.
struct InvalidPair : Error {
    using Error::Error;
};

struct NotPythagorean : Error {
    using Error::Error;
};

struct NotPrimitive : Error {
    using Error::Error;
};

struct NotPerfectSquare : Error {
    using Error::Error;
};

} // namespace dtree
