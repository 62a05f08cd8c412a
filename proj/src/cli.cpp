#include "dtree/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtree/catalog.hpp"
#include "dtree/errors.hpp"
#include "dtree/export.hpp"
#include "dtree/pythagorean.hpp"
#include "dtree/rational.hpp"
#include "dtree/system.hpp"
#include "dtree/typed.hpp"
#include "dtree/universal.hpp"

namespace dtree {

namespace {

/// The universal system with its child lists cut to a finite exponent
/// bound; every other system is returned as registered.
GenerativeSystem bounded_system(const SystemEntry& entry, std::size_t max_exponent) {
    GenerativeSystem system = entry.system;
    if (!system.bounded_degree) {
        system.bounded_degree = true;
        system.expand = [max_exponent](const NodeLabel& x) {
            std::vector<NodeLabel> labels;
            for (Int& child : children_universal(std::get<Int>(x), max_exponent)) {
                labels.emplace_back(std::move(child));
            }
            return labels;
        };
    }
    return system;
}

void render_enumeration(const GenerativeSystem& system, std::size_t depth,
                        const std::string& format, std::ostream& out) {
    if (format == "csv") {
        std::vector<Int> counts;
        for (const auto& level : enumerate_levels(system, depth)) {
            counts.push_back(level.size());
        }
        out << render_levels_csv(counts);
        return;
    }
    ExportDocument doc = make_export(system, depth);
    if (format == "json") {
        out << render_json(doc);
    } else if (format == "dot") {
        out << render_dot(doc);
    } else {
        out << render_text(doc);
    }
}

int cmd_levels(const std::string& id, std::size_t depth, const std::string& method,
               const std::string& format, std::size_t max_exponent, std::ostream& out,
               std::ostream& err) {
    const SystemEntry& entry = get_system(id);
    if (method == "matrix" && !entry.typed_info) {
        throw DomainError("system " + id +
                          " has no type assignment; only --method bfs applies");
    }

    std::vector<Int> bfs_counts;
    if (method == "bfs" || entry.typed_info) {
        for (const auto& level :
             enumerate_levels(bounded_system(entry, max_exponent), depth)) {
            bfs_counts.push_back(level.size());
        }
    }
    std::vector<Int> matrix_counts;
    if (entry.typed_info) {
        matrix_counts = level_counts_matrix(entry.typed_info->known_matrix,
                                            entry.typed_info->root_distribution, depth);
        if (matrix_counts != bfs_counts) {
            err << "error: bfs and matrix level counts disagree for " << id << "\n";
            return 3;
        }
    }

    const std::vector<Int>& counts = method == "matrix" ? matrix_counts : bfs_counts;
    if (format == "csv") {
        out << render_levels_csv(counts);
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["system"] = id;
        j["depth"] = depth;
        j["method"] = method;
        auto& rows = j["counts"] = nlohmann::ordered_json::array();
        for (const Int& count : counts) rows.push_back(count.str());
        out << j.dump() << "\n";
    } else {
        for (std::size_t m = 0; m < counts.size(); ++m) {
            out << (m > 0 ? " " : "") << counts[m].str();
        }
        out << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& id, std::size_t depth, std::size_t max_exponent,
               std::ostream& out) {
    const SystemEntry& entry = get_system(id);
    VerificationReport report =
        verify_system(bounded_system(entry, max_exponent), depth);
    if (report.ok()) {
        out << "ok\n";
        return 0;
    }
    for (const auto& line : report.descent_violations) out << "descent: " << line << "\n";
    for (const auto& line : report.consistency_violations) {
        out << "consistency: " << line << "\n";
    }
    for (const auto& line : report.duplicate_labels) out << "duplicate: " << line << "\n";
    return 3;
}

void cmd_locate(const std::string& text, std::ostream& out) {
    Rational r = parse_rational(text);
    Mat2 m = sb_locate(r);
    out << "matrix " << to_string(m) << "\n";
    out << "bounds " << to_string(Rational{m.a, m.c}) << " "
        << to_string(Rational{m.b, m.d}) << "\n";
    out << "path";
    for (const Rational& step : sb_path(r)) out << " " << to_string(step);
    out << "\n";
}

void cmd_triple(const std::string& pair_text, const std::string& triple_text,
                const std::string& tree_id, std::ostream& out) {
    OddPair pair{3, 1};
    if (!pair_text.empty()) {
        pair = parse_odd_pair(pair_text);
        validate_odd_pair(pair);
    } else {
        pair = triple_to_pair(parse_triple(triple_text));
    }
    Triple triple = pair_to_triple(pair);
    out << "pair " << to_string(pair) << "\n";
    out << "triple " << to_string(triple) << "\n";
    out << "path";
    for (const Triple& step : triple_path(triple, get_system(tree_id).system)) {
        out << " " << to_string(step);
    }
    out << "\n";
}

void cmd_embed(const std::string& id, std::size_t depth, bool factored,
               std::size_t max_exponent, std::ostream& out) {
    Embedding embedding =
        embed_tree(bounded_system(get_system(id), max_exponent), depth);
    for (const auto& [node, image] : embedding.mapping) {
        out << to_string(node) << " ↦ "
            << (factored ? factorization_string(image) : image.str()) << "\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generative tree systems: enumeration, analytics and exports"};
    app.name("dtree");
    app.require_subcommand(1);

    std::string system_id, first_id, second_id, rule_name = "mod4";
    std::string node_text, rational_text, pair_text, triple_text;
    std::string format = "text", method = "bfs", order = "AB", tree_id = "pt1";
    std::size_t depth = 3, max_exponent = 3;
    bool factored = false;

    auto format_check = CLI::IsMember({"text", "json", "dot", "csv"});

    CLI::App* systems_cmd = app.add_subcommand("systems", "list the built-in systems");

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "print levels 0..depth of a system");
    enumerate_cmd->add_option("--system", system_id, "system id")->required();
    enumerate_cmd->add_option("--depth", depth, "deepest level");
    enumerate_cmd->add_option("--format", format)->check(format_check);
    enumerate_cmd->add_option("--max-exponent", max_exponent,
                              "child bound for the universal system");

    CLI::App* path_cmd =
        app.add_subcommand("path", "print the descent path of a node to the root");
    path_cmd->add_option("--system", system_id, "system id")->required();
    path_cmd->add_option("--node", node_text, "node label")->required();

    CLI::App* locate_cmd = app.add_subcommand(
        "locate", "find a fraction's matrix, bounds and path in the mediant tree");
    locate_cmd->add_option("--rational", rational_text, "reduced fraction a/b")
        ->required();

    CLI::App* levels_cmd = app.add_subcommand("levels", "print level sizes 0..depth");
    levels_cmd->add_option("--system", system_id, "system id")->required();
    levels_cmd->add_option("--depth", depth, "deepest level");
    levels_cmd->add_option("--method", method)->check(CLI::IsMember({"bfs", "matrix"}));
    levels_cmd->add_option("--format", format)->check(format_check);
    levels_cmd->add_option("--max-exponent", max_exponent);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check descent, consistency and uniqueness");
    verify_cmd->add_option("--system", system_id, "system id")->required();
    verify_cmd->add_option("--depth", depth, "deepest level");
    verify_cmd->add_option("--max-exponent", max_exponent);

    CLI::App* compose_cmd =
        app.add_subcommand("compose", "enumerate the composition of two systems");
    compose_cmd->add_option("--first", first_id, "system id")->required();
    compose_cmd->add_option("--second", second_id, "system id")->required();
    compose_cmd->add_option("--rule", rule_name, "partition rule name");
    compose_cmd->add_option("--order", order)->check(CLI::IsMember({"AB", "BA"}));
    compose_cmd->add_option("--depth", depth, "deepest level");
    compose_cmd->add_option("--format", format)->check(format_check);

    CLI::App* triple_cmd = app.add_subcommand(
        "triple", "convert between odd pairs and Pythagorean triples");
    CLI::Option* pair_opt = triple_cmd->add_option("--pair", pair_text, "pair (a,b)");
    triple_cmd->add_option("--triple", triple_text, "triple x,y,z")->excludes(pair_opt);
    triple_cmd->add_option("--tree", tree_id)
        ->check(CLI::IsMember({"pt1", "pt2", "pt3", "pt4"}));

    CLI::App* embed_cmd =
        app.add_subcommand("embed", "map a system's nodes into the universal tree");
    embed_cmd->add_option("--system", system_id, "system id")->required();
    embed_cmd->add_option("--depth", depth, "deepest level");
    embed_cmd->add_flag("--factored", factored, "print images as prime factorizations");
    embed_cmd->add_option("--max-exponent", max_exponent);

    try {
        // CLI11 consumes the argument vector back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(systems_cmd)) {
            for (const std::string& id : list_systems()) out << id << "\n";
            return 0;
        }
        if (app.got_subcommand(enumerate_cmd)) {
            render_enumeration(bounded_system(get_system(system_id), max_exponent),
                               depth, format, out);
            return 0;
        }
        if (app.got_subcommand(path_cmd)) {
            const SystemEntry& entry = get_system(system_id);
            PathToRoot path = path_to_root(entry.system, entry.parse_label(node_text));
            for (std::size_t i = 0; i < path.size(); ++i) {
                out << (i > 0 ? " " : "") << to_string(path[i]);
            }
            out << "\n";
            return 0;
        }
        if (app.got_subcommand(locate_cmd)) {
            cmd_locate(rational_text, out);
            return 0;
        }
        if (app.got_subcommand(levels_cmd)) {
            if (format == "dot") {
                err << "levels has no dot rendering\n";
                return 1;
            }
            return cmd_levels(system_id, depth, method, format, max_exponent, out, err);
        }
        if (app.got_subcommand(verify_cmd)) {
            return cmd_verify(system_id, depth, max_exponent, out);
        }
        if (app.got_subcommand(compose_cmd)) {
            const PartitionRule& rule = partition_rule(rule_name);
            GenerativeSystem composed =
                compose(get_system(first_id).system, get_system(second_id).system,
                        order == "BA" ? flipped(rule) : rule);
            render_enumeration(composed, depth, format, out);
            return 0;
        }
        if (app.got_subcommand(triple_cmd)) {
            if (pair_text.empty() == triple_text.empty()) {
                err << "triple needs exactly one of --pair and --triple\n";
                return 1;
            }
            cmd_triple(pair_text, triple_text, tree_id, out);
            return 0;
        }
        if (app.got_subcommand(embed_cmd)) {
            cmd_embed(system_id, depth, factored, max_exponent, out);
            return 0;
        }
    } catch (const BrokenSystem& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace dtree
