#ifndef CCF_TREE_CANON_HPP
#define CCF_TREE_CANON_HPP

#include <string>
#include <vector>

#include "ccf/supplement.hpp"

namespace ccf {

// Opaque, totally ordered subtree code. Byte layout per node: big-endian
// uint32 total length, the three color counts as big-endian uint32, then the
// child codes concatenated in canonical order. Equal codes <=> the colored
// subtrees are isomorphic; plain byte order is the code order.
using Code = std::string;

Code canonical_code(const SupplementedCliqueTree& s, CliqueId node);

// Canonical form of a supplemented clique tree. Node ids are depth-first
// preorder ranks under the fixed child order, so the root is node 0.
struct CanonColoredTree {
    int node_count = 0;
    int n = 0;  // vertex count of the source graph
    std::vector<int> parent;                 // -1 at the root
    std::vector<std::vector<int>> children;  // canonical order
    std::vector<ColorTriple> color;
    std::vector<int> post_order;      // children always before parents
    std::vector<CliqueId> back_map;   // canon node -> source clique id

    int root() const { return 0; }
    // Structural equality, ignoring the back map.
    bool same_shape(const CanonColoredTree& o) const {
        return node_count == o.node_count && n == o.n && parent == o.parent &&
               children == o.children && color == o.color && post_order == o.post_order;
    }
};

// Children are sorted ascending by (color triple, code); siblings with equal
// codes keep their provisional order (their subtrees are interchangeable).
CanonColoredTree canonize_tree(const SupplementedCliqueTree& s);

enum class Move { none, down, over, up };

// Everything the traversal automaton is allowed to remember.
struct TraversalState {
    int node = 0;
    Move last = Move::none;
    int count = 0;
};

struct StepResult {
    int emitted;  // node visited for the last time during this step, or -1
    bool done;
};

// One step of the down/over/up depth-first automaton.
StepResult traversal_step(const CanonColoredTree& t, TraversalState& st);

// Post-order sequence computed with only a TraversalState, no visited set.
// Identical to the memoized post_order field.
std::vector<int> post_order_logspace(const CanonColoredTree& t);

}  // namespace ccf

#endif
