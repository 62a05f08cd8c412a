#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtree/bigint.hpp"
#include "dtree/system.hpp"

namespace dtree {

/// A rendered enumeration: levels of canonical label strings plus the
/// (parent, child) edges, both in BFS order.
struct ExportDocument {
    std::string system;
    std::size_t depth = 0;
    std::vector<std::vector<std::string>> levels;
    std::vector<std::pair<std::string, std::string>> edges;

    bool operator==(const ExportDocument&) const = default;
};

ExportDocument make_export(const GenerativeSystem& system, std::size_t depth);

/// Levels joined by " | ", labels by single spaces: "1 | 2 | 3 4".
std::string render_text(const ExportDocument& doc);

/// One object with keys system, depth, levels, edges; labels stay strings
/// so unbounded integers survive the round trip.
std::string render_json(const ExportDocument& doc);

/// Directed graph, BFS-ordered nodes then edges, quoted canonical labels.
std::string render_dot(const ExportDocument& doc);

/// Header "m,count", one row per level.
std::string render_levels_csv(const std::vector<Int>& counts);

/// Inverse of render_json. Throws ParseError on malformed documents.
ExportDocument parse_json_export(std::string_view text);

} // namespace dtree
