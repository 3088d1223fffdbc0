#ifndef CCF_CLIQUE_TREE_HPP
#define CCF_CLIQUE_TREE_HPP

#include <array>
#include <utility>
#include <vector>

#include "ccf/graph.hpp"

namespace ccf {

using CliqueId = int;

// All max cliques of a graph. Clique ids follow the lexicographic order of the
// clique vertex sets, so intermediate artifacts are reproducible.
struct MaxCliqueSet {
    int vertex_count = 0;
    std::vector<VertexSet> cliques;                 // indexed by CliqueId
    std::vector<Bitset> clique_bits;                // same order, over [0, vertex_count)
    std::vector<std::vector<CliqueId>> containing;  // per vertex, ascending
};

// A triple spans a max clique when its entries lie in exactly one max clique.
// Characterization used here: the underlying set is a clique and all common
// neighbors of the three entries are pairwise adjacent. Repetition is allowed.
bool is_spanning_triple(const Graph& g, const std::array<int, 3>& t);

// The unique max clique containing all entries of a spanning triple:
// the entries themselves plus every common neighbor.
VertexSet spanned_clique(const Graph& g, const std::array<int, 3>& t);

// Triple scan over the graph; cliques deduplicated by vertex set.
// Expects a connected chordal claw-free graph.
MaxCliqueSet enumerate_max_cliques(const Graph& g);

// The clique tree of a connected chordal claw-free graph (unique for this class).
struct CliqueTree {
    MaxCliqueSet cliques;
    std::vector<std::pair<CliqueId, CliqueId>> edges;  // a < b, sorted
    std::vector<std::vector<CliqueId>> adjacent;       // per clique, ascending

    int node_count() const { return static_cast<int>(cliques.cliques.size()); }
    int degree(CliqueId a) const { return static_cast<int>(adjacent[a].size()); }
};

// Edge criterion: {A,B} is an edge iff some vertex v in both has no third max
// clique C containing v with C inside A union B. Throws StructureError when the
// produced edge set is not a tree (the input was outside the class).
CliqueTree build_clique_tree(const Graph& g, MaxCliqueSet cliques);

// Every vertex of the clique lies in at most one tree-neighbor of it.
bool is_star_clique(const CliqueTree& t, CliqueId b);

// Degree-3 clique whose vertices each lie in exactly two of its neighbors,
// with every neighbor pair witnessed by some vertex.
bool is_fork_clique(const CliqueTree& t, CliqueId b);

std::vector<CliqueId> leaves(const CliqueTree& t);

struct RootedCliqueTree {
    CliqueTree tree;
    CliqueId root = 0;
    std::vector<CliqueId> parent;                 // -1 at the root
    std::vector<std::vector<CliqueId>> children;  // ascending id (provisional order)
};

// Orients the tree away from r. r must be a leaf, unless the tree is a single node.
RootedCliqueTree root_at(const CliqueTree& t, CliqueId r);

}  // namespace ccf

#endif
