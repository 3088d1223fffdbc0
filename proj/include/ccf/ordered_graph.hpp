#ifndef CCF_ORDERED_GRAPH_HPP
#define CCF_ORDERED_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "ccf/graph.hpp"

namespace ccf {

// A graph over [1..n] carrying the natural order: the output shape of
// canonization. Edges are normalized u < v and sorted.
struct OrderedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    bool operator==(const OrderedGraph&) const = default;
};

// Stable serialization: "n m" header line, then one "u v" line per edge in
// lexicographic order, ASCII decimal, newline-terminated. Byte equality of two
// serializations is ordered-graph equality.
std::string serialize(const OrderedGraph& g);

// The same graph re-based to dense 0-based ids.
Graph to_graph(const OrderedGraph& g);

}  // namespace ccf

#endif
