#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dtree/bigint.hpp"
#include "dtree/labels.hpp"

namespace dtree {

/// Weight codomain: nonnegative integers under the usual total order.
using Weight = Int;

/// A generative tree system: a root, a weight function, a descent function
/// and the ordered child expansion (the inverse of the descent function).
///
/// All four functions are pure functions of the label, so a descriptor can be
/// copied and shared across threads freely.
struct GenerativeSystem {
    std::string id;
    /// Identifies the (domain, weight) pair; composition requires equal tags.
    std::string domain_tag;
    NodeLabel root;
    bool bounded_degree = true;

    std::function<Weight(const NodeLabel&)> weight;
    /// Parent of a non-root node; throws RootHasNoParent at the root.
    std::function<NodeLabel(const NodeLabel&)> descend;
    /// Ordered children of a node.
    std::function<std::vector<NodeLabel>(const NodeLabel&)> expand;
    /// Throws DomainError when the label is outside the system's domain.
    std::function<void(const NodeLabel&)> validate;
};

/// Node, parent, grandparent, ..., root. Weights strictly decrease.
using PathToRoot = std::vector<NodeLabel>;

/// Iterates the descent function until the root is reached.
/// The iteration budget is weight(x) - weight(root); exceeding it, or any
/// step that fails to strictly decrease the weight, throws BrokenSystem.
PathToRoot path_to_root(const GenerativeSystem& system, const NodeLabel& x);

/// Number of descent steps from x to the root.
std::size_t level_of(const GenerativeSystem& system, const NodeLabel& x);

/// Levels 0..depth. Level m+1 concatenates expand(x) over level m in order.
std::vector<std::vector<NodeLabel>> enumerate_levels(const GenerativeSystem& system,
                                                     std::size_t depth);

enum class PartClass { A, B };

/// Total, deterministic two-way classification of a system's domain.
struct PartitionRule {
    std::string name;
    std::function<PartClass(const NodeLabel&)> classify;
};

/// The same partition with the roles of A and B exchanged.
PartitionRule flipped(const PartitionRule& rule);

/// Composes two systems sharing one (domain, weight, root):
/// descent follows `first` on class A and `second` on class B; children are
/// first-system-derived children (class A) then second-system-derived (B).
GenerativeSystem compose(const GenerativeSystem& first, const GenerativeSystem& second,
                         const PartitionRule& rule);

struct VerificationReport {
    std::vector<std::string> descent_violations;
    std::vector<std::string> consistency_violations;
    std::vector<std::string> duplicate_labels;

    bool ok() const {
        return descent_violations.empty() && consistency_violations.empty() &&
               duplicate_labels.empty();
    }
};

/// Checks, for every node enumerated to `depth`: the descent function strictly
/// decreases the weight, descend(child) == parent for every expanded child,
/// and no label repeats. Violations are reported, never thrown.
VerificationReport verify_system(const GenerativeSystem& system, std::size_t depth);

} // namespace dtree
