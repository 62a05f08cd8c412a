#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtree/system.hpp"
#include "dtree/typed.hpp"

namespace dtree {

/// Type assignment plus the facts that make matrix-based level counting
/// possible: the known matrix and the root's class distribution.
struct TypedInfo {
    TypeAssignment assignment;
    TypeMatrix known_matrix;
    Distribution root_distribution;
};

struct SystemEntry {
    GenerativeSystem system;
    std::function<NodeLabel(std::string_view)> parse_label;
    /// Absent for systems whose level counts satisfy no linear recurrence
    /// (partitions) or whose root has no class (laws-of-growth, universal).
    std::optional<TypedInfo> typed_info;
};

/// Registry ids, in presentation order.
const std::vector<std::string>& list_systems();

/// Throws UnknownSystem for ids outside list_systems().
const SystemEntry& get_system(std::string_view id);

/// Named node partitions usable with compose: "parity" on integers,
/// "denominator-parity" on fractions (A = denominator even), "mod4" on odd
/// pairs. Throws UnknownRule.
const PartitionRule& partition_rule(std::string_view name);
const std::vector<std::string>& list_partition_rules();

} // namespace dtree
