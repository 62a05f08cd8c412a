#include "dtree/export.hpp"

#include <sstream>

#include <json.hpp>

#include "dtree/errors.hpp"

namespace dtree {

ExportDocument make_export(const GenerativeSystem& system, std::size_t depth) {
    ExportDocument doc;
    doc.system = system.id;
    doc.depth = depth;
    auto levels = enumerate_levels(system, depth);
    for (std::size_t m = 0; m < levels.size(); ++m) {
        std::vector<std::string> row;
        for (const NodeLabel& x : levels[m]) {
            row.push_back(to_string(x));
            if (m + 1 < levels.size()) {
                for (const NodeLabel& child : system.expand(x)) {
                    doc.edges.emplace_back(row.back(), to_string(child));
                }
            }
        }
        doc.levels.push_back(std::move(row));
    }
    return doc;
}

std::string render_text(const ExportDocument& doc) {
    std::ostringstream out;
    for (std::size_t m = 0; m < doc.levels.size(); ++m) {
        if (m > 0) out << " | ";
        for (std::size_t i = 0; i < doc.levels[m].size(); ++i) {
            if (i > 0) out << " ";
            out << doc.levels[m][i];
        }
    }
    out << "\n";
    return out.str();
}

std::string render_json(const ExportDocument& doc) {
    nlohmann::ordered_json j;
    j["system"] = doc.system;
    j["depth"] = doc.depth;
    j["levels"] = doc.levels;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [parent, child] : doc.edges) {
        j["edges"].push_back({parent, child});
    }
    return j.dump() + "\n";
}

std::string render_dot(const ExportDocument& doc) {
    std::ostringstream out;
    out << "digraph \"" << doc.system << "\" {\n";
    for (const auto& level : doc.levels) {
        for (const auto& label : level) out << "  \"" << label << "\";\n";
    }
    for (const auto& [parent, child] : doc.edges) {
        out << "  \"" << parent << "\" -> \"" << child << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_levels_csv(const std::vector<Int>& counts) {
    std::ostringstream out;
    out << "m,count\n";
    for (std::size_t m = 0; m < counts.size(); ++m) {
        out << m << "," << counts[m].str() << "\n";
    }
    return out.str();
}

ExportDocument parse_json_export(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON document");
    try {
        ExportDocument doc;
        doc.system = j.at("system").get<std::string>();
        doc.depth = j.at("depth").get<std::size_t>();
        doc.levels = j.at("levels").get<std::vector<std::vector<std::string>>>();
        for (const auto& edge : j.at("edges")) {
            if (!edge.is_array() || edge.size() != 2) {
                throw ParseError("each edge must be a [parent, child] pair");
            }
            doc.edges.emplace_back(edge[0].get<std::string>(),
                                   edge[1].get<std::string>());
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("document does not match the export schema: ") +
                         e.what());
    }
}

} // namespace dtree
