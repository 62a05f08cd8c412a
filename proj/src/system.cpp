#include "dtree/system.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "dtree/errors.hpp"

namespace dtree {

PathToRoot path_to_root(const GenerativeSystem& system, const NodeLabel& x) {
    system.validate(x);
    PathToRoot path{x};
    // Weights drop by at least 1 per step, so this bounds the iteration.
    Int budget = system.weight(x) - system.weight(system.root);
    while (!(path.back() == system.root)) {
        if (budget <= 0) {
            throw BrokenSystem("descent from " + to_string(x) +
                               " exceeded its iteration budget without reaching the root");
        }
        NodeLabel next = system.descend(path.back());
        if (!(system.weight(next) < system.weight(path.back()))) {
            throw BrokenSystem("descent step " + to_string(path.back()) + " -> " +
                               to_string(next) + " does not decrease the weight");
        }
        --budget;
        path.push_back(std::move(next));
    }
    return path;
}

std::size_t level_of(const GenerativeSystem& system, const NodeLabel& x) {
    return path_to_root(system, x).size() - 1;
}

std::vector<std::vector<NodeLabel>> enumerate_levels(const GenerativeSystem& system,
                                                     std::size_t depth) {
    if (!system.bounded_degree) {
        throw UnboundedDegree("cannot enumerate levels of " + system.id +
                              ": nodes have infinitely many children");
    }
    std::vector<std::vector<NodeLabel>> levels;
    levels.push_back({system.root});
    for (std::size_t m = 0; m < depth; ++m) {
        std::vector<NodeLabel> next;
        for (const NodeLabel& x : levels[m]) {
            for (NodeLabel& child : system.expand(x)) {
                system.validate(child);
                next.push_back(std::move(child));
            }
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

PartitionRule flipped(const PartitionRule& rule) {
    PartitionRule swapped;
    swapped.name = "flipped(" + rule.name + ")";
    swapped.classify = [inner = rule.classify](const NodeLabel& x) {
        return inner(x) == PartClass::A ? PartClass::B : PartClass::A;
    };
    return swapped;
}

GenerativeSystem compose(const GenerativeSystem& first, const GenerativeSystem& second,
                         const PartitionRule& rule) {
    if (first.domain_tag != second.domain_tag) {
        throw IncompatibleSystems("cannot compose " + first.id + " with " + second.id +
                                  ": domain tags \"" + first.domain_tag + "\" and \"" +
                                  second.domain_tag + "\" differ");
    }
    if (!(first.root == second.root)) {
        throw IncompatibleSystems("cannot compose " + first.id + " with " + second.id +
                                  ": roots " + to_string(first.root) + " and " +
                                  to_string(second.root) + " differ");
    }
    if (!first.bounded_degree || !second.bounded_degree) {
        throw IncompatibleSystems("cannot compose " + first.id + " with " + second.id +
                                  ": both systems must have bounded degree");
    }

    GenerativeSystem composed;
    composed.id = "compose(" + first.id + "," + second.id + ";" + rule.name + ")";
    composed.domain_tag = first.domain_tag;
    composed.root = first.root;
    composed.bounded_degree = true;
    composed.weight = first.weight;
    composed.validate = first.validate;
    composed.descend = [f = first.descend, g = second.descend,
                        classify = rule.classify](const NodeLabel& x) {
        return classify(x) == PartClass::A ? f(x) : g(x);
    };
    composed.expand = [f = first.expand, g = second.expand,
                       classify = rule.classify](const NodeLabel& x) {
        std::vector<NodeLabel> children;
        for (NodeLabel& y : f(x)) {
            if (classify(y) == PartClass::A) children.push_back(std::move(y));
        }
        for (NodeLabel& y : g(x)) {
            if (classify(y) == PartClass::B) children.push_back(std::move(y));
        }
        return children;
    };
    return composed;
}

VerificationReport verify_system(const GenerativeSystem& system, std::size_t depth) {
    VerificationReport report;
    std::vector<std::vector<NodeLabel>> levels{{system.root}};
    // First level each canonical label string was seen at.
    std::map<std::string, std::size_t> seen{{to_string(system.root), 0}};

    for (std::size_t m = 0; m <= depth; ++m) {
        for (const NodeLabel& x : levels[m]) {
            if (m > 0) {
                try {
                    NodeLabel parent = system.descend(x);
                    if (!(system.weight(parent) < system.weight(x))) {
                        report.descent_violations.push_back(
                            "descend(" + to_string(x) + ") = " + to_string(parent) +
                            " does not decrease the weight");
                    }
                } catch (const Error& e) {
                    report.descent_violations.push_back("descend(" + to_string(x) +
                                                        ") failed: " + e.what());
                }
            }
            std::vector<NodeLabel> children;
            try {
                children = system.expand(x);
                for (const NodeLabel& child : children) {
                    NodeLabel parent = system.descend(child);
                    if (!(parent == x)) {
                        report.consistency_violations.push_back(
                            "child " + to_string(child) + " of " + to_string(x) +
                            " descends to " + to_string(parent));
                    }
                }
            } catch (const Error& e) {
                report.consistency_violations.push_back("expanding " + to_string(x) +
                                                        " failed: " + e.what());
            }
            if (m < depth) {
                if (levels.size() == m + 1) levels.emplace_back();
                for (const NodeLabel& child : children) {
                    auto [it, fresh] = seen.emplace(to_string(child), m + 1);
                    if (!fresh) {
                        std::ostringstream msg;
                        msg << "label " << it->first << " appears at level " << it->second
                            << " and again at level " << m + 1;
                        report.duplicate_labels.push_back(msg.str());
                    }
                    levels[m + 1].push_back(child);
                }
            }
        }
        if (levels.size() == m + 1) break;
    }
    return report;
}

} // namespace dtree
