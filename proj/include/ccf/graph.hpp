#ifndef CCF_GRAPH_HPP
#define CCF_GRAPH_HPP

#include <array>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "ccf/bitset.hpp"

namespace ccf {

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);
    static VertexSet from_bits(const Bitset& b);

    bool contains(int v) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    Bitset bits(int universe) const;
    int intersection_size(const VertexSet& o) const;

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<int> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

// Finite simple undirected graph over dense vertex ids 0..n-1.
// The edge relation is irreflexive and symmetric; neighbor lists are sorted.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const Bitset& neighbor_bits(int v) const { return bits_[v]; }
    bool adjacent(int u, int v) const { return bits_[u].test(v); }
    std::vector<std::pair<int, int>> edge_list() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> bits_;
};

struct Claw {
    int center;
    std::array<int, 3> leaves;  // pairwise non-adjacent neighbors of center
    std::array<int, 4> vertices() const { return {center, leaves[0], leaves[1], leaves[2]}; }
};

// Finds an induced K_{1,3}, if any.
std::optional<Claw> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

// Maximum-cardinality search followed by perfect-elimination-order verification.
// Returns a verified PEO when the graph is chordal, nothing otherwise.
std::optional<std::vector<int>> chordal_peo(const Graph& g);
inline bool is_chordal(const Graph& g) { return chordal_peo(g).has_value(); }

struct Component {
    Graph graph;
    std::vector<int> to_original;  // dense id in component -> id in the source graph
};
struct ComponentDecomposition {
    std::vector<Component> components;
};
ComponentDecomposition connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Subgraph induced by a non-empty vertex set, re-indexed densely.
// Second result maps new ids back to ids of g.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& w);

// Relabels vertices: vertex v of g becomes new_id[v].
Graph permuted(const Graph& g, const std::vector<int>& new_id);

// Test oracle: degree-pruned backtracking over vertex bijections. Intended for
// small graphs (n up to ~10). Returns an edge-preserving bijection iff one exists.
std::optional<std::vector<int>> brute_force_isomorphic(const Graph& g, const Graph& h);

}  // namespace ccf

#endif
