#include "ccf/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ccf {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_bits(const Bitset& b) {
    VertexSet s;
    s.ids_ = b.to_vector();
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

Bitset VertexSet::bits(int universe) const {
    Bitset b(universe);
    for (int v : ids_) b.set(v);
    return b;
}

int VertexSet::intersection_size(const VertexSet& o) const {
    int c = 0;
    auto i = ids_.begin();
    auto j = o.ids_.begin();
    while (i != ids_.end() && j != o.ids_.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            ++c, ++i, ++j;
    }
    return c;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    adj_.resize(n);
    bits_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (bits_[u].test(v)) throw std::invalid_argument("duplicate edge");
        bits_[u].set(v);
        bits_[v].set(u);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::optional<Claw> find_claw(const Graph& g) {
    Bitset rest(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        int d = static_cast<int>(nb.size());
        if (d < 3) continue;
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                int a = nb[i], b = nb[j];
                if (g.adjacent(a, b)) continue;
                rest = g.neighbor_bits(v);
                rest.subtract(g.neighbor_bits(a));
                rest.subtract(g.neighbor_bits(b));
                rest.reset(a);
                rest.reset(b);
                int c = rest.first();
                if (c != -1) return Claw{v, {a, b, c}};
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> chordal_peo(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n, 0);
    std::vector<char> picked(n, 0);
    std::vector<int> selection;
    selection.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!picked[v] && (best == -1 || weight[v] > weight[best])) best = v;
        picked[best] = 1;
        selection.push_back(best);
        for (int u : g.neighbors(best))
            if (!picked[u]) ++weight[u];
    }
    std::vector<int> peo(selection.rbegin(), selection.rend());

    // The reversed selection order is a PEO iff the graph is chordal; verify it
    // so that a positive answer is certified either way.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    for (int v = 0; v < n; ++v) {
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (pos[u] > pos[v]) later.push_back(u);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.adjacent(later[i], later[j])) return std::nullopt;
    }
    return peo;
}

ComponentDecomposition connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (comp[u] == -1) {
                    comp[u] = count;
                    stack.push_back(u);
                }
        }
        ++count;
    }
    ComponentDecomposition out;
    out.components.reserve(count);
    for (int c = 0; c < count; ++c) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) members.push_back(v);
        auto [sub, emb] = induced_subgraph(g, VertexSet(std::move(members)));
        out.components.push_back({std::move(sub), std::move(emb)});
    }
    return out;
}

bool is_connected(const Graph& g) {
    return connected_components(g).components.size() == 1;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& w) {
    if (w.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
    const auto& ids = w.ids();
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= g.vertex_count())
            throw std::invalid_argument("vertex set not within the graph");
        local[ids[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (int u : g.neighbors(ids[i]))
            if (local[u] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[u]);
    return {Graph(static_cast<int>(ids.size()), edges), ids};
}

Graph permuted(const Graph& g, const std::vector<int>& new_id) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edge_list()) edges.emplace_back(new_id[u], new_id[v]);
    return Graph(g.vertex_count(), edges);
}

std::optional<std::vector<int>> brute_force_isomorphic(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto degseq = [](const Graph& x) {
        std::vector<int> d(x.vertex_count());
        for (int v = 0; v < x.vertex_count(); ++v) d[v] = x.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degseq(g) != degseq(h)) return std::nullopt;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> extend = [&](int i) -> bool {
        if (i == n) return true;
        int v = order[i];
        for (int w = 0; w < n; ++w) {
            if (used[w] || h.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                int u = order[j];
                if (g.adjacent(v, u) != h.adjacent(w, map[u])) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (extend(i + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (extend(0)) return map;
    return std::nullopt;
}

}  // namespace ccf
