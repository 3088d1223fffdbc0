#include "ccf/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ccf {

namespace {

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool saw_header = false, saw_edges_or_header = false;
    long long header_n = -1, header_m = -1;
    std::vector<std::pair<long long, long long>> raw;
    std::vector<int> raw_line;

    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trimmed(line);
        if (s.empty() || s[0] == '#') continue;
        if (!saw_edges_or_header && s[0] == 'p') {
            std::istringstream ss(s);
            std::string tag;
            ss >> tag >> header_n >> header_m;
            std::string rest;
            if (tag != "p" || ss.fail() || (ss >> rest))
                throw ParseError(lineno, "malformed header, expected 'p <n> <m>'");
            if (header_n < 1) throw ParseError(lineno, "graph needs at least one vertex");
            if (header_m < 0) throw ParseError(lineno, "negative edge count");
            saw_header = true;
            saw_edges_or_header = true;
            continue;
        }
        saw_edges_or_header = true;
        std::istringstream ss(s);
        long long u, v;
        std::string rest;
        ss >> u >> v;
        if (ss.fail() || (ss >> rest)) throw ParseError(lineno, "expected 'u v'");
        if (u < 0 || v < 0) throw ParseError(lineno, "vertex labels must be non-negative");
        if (u == v) throw ParseError(lineno, "self-loop");
        raw.emplace_back(u, v);
        raw_line.push_back(lineno);
    }

    std::map<long long, int> dense;
    std::vector<long long> labels;
    if (saw_header) {
        if (static_cast<long long>(raw.size()) != header_m)
            throw ParseError(lineno, "header edge count does not match the edge lines");
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (raw[i].first >= header_n || raw[i].second >= header_n)
                throw ParseError(raw_line[i], "vertex label exceeds the declared vertex count");
        labels.resize(static_cast<std::size_t>(header_n));
        for (long long v = 0; v < header_n; ++v) {
            labels[static_cast<std::size_t>(v)] = v;
            dense[v] = static_cast<int>(v);
        }
    } else {
        std::set<long long> distinct;
        for (auto [u, v] : raw) {
            distinct.insert(u);
            distinct.insert(v);
        }
        if (distinct.empty()) throw ParseError(std::max(lineno, 1), "document describes no vertices");
        for (long long v : distinct) {
            dense[v] = static_cast<int>(labels.size());
            labels.push_back(v);
        }
    }

    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        int u = dense[raw[i].first], v = dense[raw[i].second];
        auto [a, b] = std::minmax(u, v);
        if (!seen.insert({a, b}).second) throw ParseError(raw_line[i], "duplicate edge");
        edges.emplace_back(a, b);
    }
    return ParsedGraph{Graph(static_cast<int>(labels.size()), edges), std::move(labels)};
}

ParsedGraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    auto edges = g.edge_list();
    std::sort(edges.begin(), edges.end());
    std::string out =
        "p " + std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {

std::string clique_label(const CliqueTree& t, CliqueId a, const std::vector<long long>& labels) {
    std::string s = "{";
    bool first = true;
    for (int v : t.cliques.cliques[a]) {
        if (!first) s += " ";
        s += std::to_string(labels[v]);
        first = false;
    }
    return s + "}";
}

std::string classify(const CliqueTree& t, CliqueId a, CliqueId root) {
    std::string s;
    if (is_fork_clique(t, a))
        s += " fork";
    else if (is_star_clique(t, a))
        s += " star";
    if (a == root) s += " root";
    return s;
}

}  // namespace

std::string clique_tree_text(const CliqueTree& t, const SupplementedCliqueTree& s,
                             const std::vector<long long>& labels) {
    std::string out = "cliques: " + std::to_string(t.node_count()) + "\n";
    for (CliqueId a = 0; a < t.node_count(); ++a)
        out += "C" + std::to_string(a) + " " + clique_label(t, a, labels) + " " +
               to_string(s.colors[a]) + classify(t, a, s.rooted.root) + "\n";
    out += "edges: " + std::to_string(t.edges.size()) + "\n";
    for (auto [a, b] : t.edges)
        out += "C" + std::to_string(a) + " -- C" + std::to_string(b) + "\n";
    return out;
}

std::string clique_tree_dot(const CliqueTree& t, const SupplementedCliqueTree& s,
                            const std::vector<long long>& labels) {
    std::string out = "graph clique_tree {\n  node [shape=box];\n";
    for (CliqueId a = 0; a < t.node_count(); ++a)
        out += "  c" + std::to_string(a) + " [label=\"C" + std::to_string(a) + " " +
               clique_label(t, a, labels) + "\\n" + to_string(s.colors[a]) +
               classify(t, a, s.rooted.root) + "\"];\n";
    for (auto [a, b] : t.edges)
        out += "  c" + std::to_string(a) + " -- c" + std::to_string(b) + ";\n";
    return out + "}\n";
}

}  // namespace ccf
