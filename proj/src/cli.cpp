#include "ccf/cli.hpp"

#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccf/canonizer.hpp"
#include "ccf/io.hpp"
#include "ccf/testkit.hpp"

namespace ccf {

namespace {

std::optional<ParsedGraph> load(const std::string& path, std::ostream& err) {
    try {
        return parse_edge_list_file(path);
    } catch (const ParseError& e) {
        err << path << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return std::nullopt;
}

std::string witness_labels(const std::array<int, 4>& claw, const std::vector<long long>& labels) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i) s += " ";
        s += std::to_string(labels[claw[i]]);
    }
    return s;
}

void report_not_in_class(const NotInClassError& e, const std::vector<long long>& labels,
                         const std::string& which, std::ostream& err) {
    err << "error: " << which
        << (e.reason == NotInClassError::Reason::not_chordal ? " is not chordal"
                                                             : " is not claw-free");
    if (e.claw) err << " (claw witness " << witness_labels(*e.claw, labels) << ")";
    err << "\n";
}

}  // namespace

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
    auto pg = load(path, err);
    if (!pg) return 2;
    bool chordal = is_chordal(pg->graph);
    auto claw = find_claw(pg->graph);
    out << "chordal: " << (chordal ? "yes" : "no") << "\n";
    if (claw)
        out << "claw-free: no, witness " << witness_labels(claw->vertices(), pg->labels) << "\n";
    else
        out << "claw-free: yes\n";
    bool ok = chordal && !claw;
    out << "in class: " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
}

int cmd_tree(const std::string& path, bool dot, std::ostream& out, std::ostream& err) {
    auto pg = load(path, err);
    if (!pg) return 2;
    try {
        if (auto claw = find_claw(pg->graph))
            throw NotInClassError(NotInClassError::Reason::not_claw_free, claw->vertices());
        if (!is_chordal(pg->graph)) throw NotInClassError(NotInClassError::Reason::not_chordal);
        if (!is_connected(pg->graph)) throw NotConnectedError();
        CliqueTree tree = build_clique_tree(pg->graph, enumerate_max_cliques(pg->graph));
        // color triples shown for the rooting at the smallest leaf
        auto supp = build_supplemented(root_at(tree, leaves(tree).front()),
                                       pg->graph.vertex_count());
        out << (dot ? clique_tree_dot(tree, supp, pg->labels)
                    : clique_tree_text(tree, supp, pg->labels));
        return 0;
    } catch (const NotInClassError& e) {
        report_not_in_class(e, pg->labels, "input", err);
        return 2;
    } catch (const NotConnectedError&) {
        err << "error: input is not connected\n";
        return 2;
    }
}

int cmd_canon(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
    auto pg = load(path, err);
    if (!pg) return 2;
    try {
        CanonResult result = canonize(pg->graph);
        if (!json) {
            out << result.serialized;
            return 0;
        }
        nlohmann::json witness = nlohmann::json::object();
        for (int v = 0; v < pg->graph.vertex_count(); ++v)
            witness[std::to_string(pg->labels[v])] = result.witness.h[v];
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& root : result.component_roots) {
            nlohmann::json ids = nlohmann::json::array();
            for (int v : root) ids.push_back(pg->labels[v]);
            roots.push_back(std::move(ids));
        }
        out << nlohmann::json{{"canon", result.serialized},
                              {"witness", witness},
                              {"roots", roots}}
                   .dump(2)
            << "\n";
        return 0;
    } catch (const NotInClassError& e) {
        report_not_in_class(e, pg->labels, "input", err);
        return 2;
    }
}

int cmd_iso(const std::string& path_a, const std::string& path_b, std::ostream& out,
            std::ostream& err) {
    auto pa = load(path_a, err);
    if (!pa) return 2;
    auto pb = load(path_b, err);
    if (!pb) return 2;
    try {
        bool same = isomorphic(pa->graph, pb->graph);
        out << (same ? "isomorphic" : "non-isomorphic") << "\n";
        return same ? 0 : 1;
    } catch (const NotInClassError& e) {
        const auto& labels = e.input_index == 0 ? pa->labels : pb->labels;
        report_not_in_class(e, labels, e.input_index == 0 ? path_a : path_b, err);
        return 2;
    }
}

int cmd_gen(int tree_nodes, int paths, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    if (tree_nodes < 1 || paths < 1) {
        err << "error: --tree-nodes and --paths must be at least 1\n";
        return 2;
    }
    int attempt = 0;
    auto g = random_class_graph(GenParams{tree_nodes, paths, seed}, 64, &attempt);
    if (!g) {
        err << "error: no claw-free outcome within 64 attempts; try other parameters\n";
        return 1;
    }
    out << "# intersection graph of " << paths << " random paths of a random tree on "
        << tree_nodes << " nodes, seed " << seed << ", attempt " << attempt << "\n";
    out << serialize_edge_list(*g);
    return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"canonization and isomorphism for chordal claw-free graphs"};
    app.require_subcommand(1);

    std::string path, path_b;
    bool dot = false, json = false;
    int tree_nodes = 5, paths = 6;
    std::uint64_t seed = 42;

    auto* check = app.add_subcommand("check", "run the chordal and claw-free recognizers");
    check->add_option("file", path, "edge-list file")->required();

    auto* tree = app.add_subcommand("tree", "print the unique clique tree");
    tree->add_option("file", path, "edge-list file")->required();
    tree->add_flag("--dot", dot, "emit DOT with color triples in node labels");

    auto* canon = app.add_subcommand("canon", "print the canonical form");
    canon->add_option("file", path, "edge-list file")->required();
    canon->add_flag("--json", json, "also emit the witness mapping and chosen roots");

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two graphs");
    iso->add_option("fileA", path, "first edge-list file")->required();
    iso->add_option("fileB", path_b, "second edge-list file")->required();

    auto* gen = app.add_subcommand("gen", "generate a random in-class graph");
    gen->add_option("--tree-nodes", tree_nodes, "nodes of the underlying tree");
    gen->add_option("--paths", paths, "number of random paths");
    gen->add_option("--seed", seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (app.got_subcommand(check)) return cmd_check(path, out, err);
    if (app.got_subcommand(tree)) return cmd_tree(path, dot, out, err);
    if (app.got_subcommand(canon)) return cmd_canon(path, json, out, err);
    if (app.got_subcommand(iso)) return cmd_iso(path, path_b, out, err);
    if (app.got_subcommand(gen)) return cmd_gen(tree_nodes, paths, seed, out, err);
    err << "no subcommand\n";
    return 2;
}

}  // namespace ccf
