#ifndef CCF_CANONIZER_HPP
#define CCF_CANONIZER_HPP

#include <string>
#include <vector>

#include "ccf/errors.hpp"
#include "ccf/reconstruct.hpp"

namespace ccf {

struct CanonResult {
    OrderedGraph canon;
    WitnessBijection witness;          // over the vertices of the input graph
    CliqueId chosen_root = -1;         // connected inputs only; -1 otherwise
    std::vector<VertexSet> component_roots;  // root clique per component, input ids
    std::string serialized;            // bit-exact serialization of canon
};

// Full pipeline for a connected graph: every leaf of the unique clique tree is
// tried as the root and the lexicographically least serialized canon wins.
// Throws NotInClassError when the recognizers reject the input.
CanonResult canonize_connected(const Graph& g, CountMode mode = CountMode::memoized);

// Components are canonized independently, sorted by (vertex count, serialized
// canon) and renumbered consecutively.
CanonResult canonize(const Graph& g, CountMode mode = CountMode::memoized);

// Canon equality. Throws NotInClassError naming the offending input.
bool isomorphic(const Graph& g, const Graph& h);

// Re-checks a result from scratch: bijectivity, adjacency preservation in both
// directions, serialization consistency. Never trusts the pipeline.
bool verify_certificate(const Graph& g, const CanonResult& r);

}  // namespace ccf

#endif
