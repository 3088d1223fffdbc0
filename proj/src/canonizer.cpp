#include "ccf/canonizer.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace ccf {

std::string serialize(const OrderedGraph& g) {
    std::string s = std::to_string(g.n) + " " + std::to_string(g.edges.size()) + "\n";
    for (auto [u, v] : g.edges) s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

Graph to_graph(const OrderedGraph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.emplace_back(u - 1, v - 1);
    return Graph(g.n, edges);
}

namespace {

void require_in_class(const Graph& g) {
    if (auto claw = find_claw(g))
        throw NotInClassError(NotInClassError::Reason::not_claw_free, claw->vertices());
    if (!is_chordal(g)) throw NotInClassError(NotInClassError::Reason::not_chordal);
}

}  // namespace

CanonResult canonize_connected(const Graph& g, CountMode mode) {
    require_in_class(g);
    if (!is_connected(g)) throw std::invalid_argument("canonize_connected needs a connected graph");

    CliqueTree tree = build_clique_tree(g, enumerate_max_cliques(g));

    struct Candidate {
        std::string serialized;
        CliqueId root;
        SupplementedCliqueTree supp;
        CanonColoredTree canon_tree;
        BuildResult build;
        OrderedGraph og;
    };
    std::optional<Candidate> best;
    for (CliqueId r : leaves(tree)) {
        auto rooted = root_at(tree, r);
        auto supp = build_supplemented(rooted, g.vertex_count());
        auto ct = canonize_tree(supp);
        auto built = build_cliques(ct, mode);
        auto og = assemble_ordered_copy(built.cliques, g.vertex_count());
        auto ser = serialize(og);
        if (!best || ser < best->serialized)
            best = Candidate{std::move(ser),      r,
                             std::move(supp),     std::move(ct),
                             std::move(built),    std::move(og)};
    }

    CanonResult res;
    res.witness = build_witness(best->supp, best->canon_tree, best->build);
    res.canon = std::move(best->og);
    res.chosen_root = best->root;
    res.component_roots = {tree.cliques.cliques[best->root]};
    res.serialized = std::move(best->serialized);
    if (!verify_certificate(g, res))
        throw std::logic_error("internal: canon certificate failed verification");
    return res;
}

CanonResult canonize(const Graph& g, CountMode mode) {
    require_in_class(g);
    auto decomp = connected_components(g);
    if (decomp.components.size() == 1) return canonize_connected(g, mode);

    std::vector<CanonResult> parts;
    parts.reserve(decomp.components.size());
    for (const auto& comp : decomp.components) parts.push_back(canonize_connected(comp.graph, mode));

    std::vector<std::size_t> order(parts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (parts[a].canon.n != parts[b].canon.n) return parts[a].canon.n < parts[b].canon.n;
        return parts[a].serialized < parts[b].serialized;
    });

    CanonResult res;
    res.canon.n = g.vertex_count();
    res.witness.h.assign(g.vertex_count(), 0);
    int vertex_offset = 0;
    int clique_offset = 0;
    for (std::size_t idx : order) {
        const auto& part = parts[idx];
        const auto& comp = decomp.components[idx];
        for (auto [u, v] : part.canon.edges)
            res.canon.edges.emplace_back(u + vertex_offset, v + vertex_offset);
        for (int local = 0; local < part.canon.n; ++local)
            res.witness.h[comp.to_original[local]] = part.witness.h[local] + vertex_offset;
        for (const auto& [key, value] : part.witness.anc_counts)
            res.witness.anc_counts[{key.first + clique_offset, comp.to_original[key.second]}] = value;
        std::vector<int> root_ids;
        for (int v : part.component_roots.front()) root_ids.push_back(comp.to_original[v]);
        res.component_roots.push_back(VertexSet(std::move(root_ids)));
        vertex_offset += part.canon.n;
        clique_offset += part.witness.clique_count;
    }
    res.witness.clique_count = clique_offset;
    std::sort(res.canon.edges.begin(), res.canon.edges.end());
    res.serialized = serialize(res.canon);
    if (!verify_certificate(g, res))
        throw std::logic_error("internal: combined canon certificate failed verification");
    return res;
}

bool isomorphic(const Graph& g, const Graph& h) {
    std::string a, b;
    try {
        a = canonize(g).serialized;
    } catch (NotInClassError& e) {
        throw NotInClassError(e.reason, e.claw, 0);
    }
    try {
        b = canonize(h).serialized;
    } catch (NotInClassError& e) {
        throw NotInClassError(e.reason, e.claw, 1);
    }
    return a == b;
}

bool verify_certificate(const Graph& g, const CanonResult& r) {
    const int n = g.vertex_count();
    if (r.canon.n != n) return false;
    if (static_cast<int>(r.witness.h.size()) != n) return false;
    std::vector<char> seen(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        int x = r.witness.h[v];
        if (x < 1 || x > n || seen[x]) return false;
        seen[x] = 1;
    }
    for (auto [u, v] : r.canon.edges)
        if (u < 1 || v <= u || v > n) return false;
    std::set<std::pair<int, int>> canon_edges(r.canon.edges.begin(), r.canon.edges.end());
    if (canon_edges.size() != r.canon.edges.size()) return false;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            auto [x, y] = std::minmax(r.witness.h[u], r.witness.h[v]);
            if ((canon_edges.count({x, y}) > 0) != g.adjacent(u, v)) return false;
        }
    }
    return serialize(r.canon) == r.serialized;
}

}  // namespace ccf
