#ifndef CCF_RECONSTRUCT_HPP
#define CCF_RECONSTRUCT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ccf/ordered_graph.hpp"
#include "ccf/tree_canon.hpp"

namespace ccf {

// Subset of [1..n] stored as disjoint, maximal, ascending closed intervals.
class NumberClique {
public:
    NumberClique() = default;
    // Normalizes: drops empty intervals, sorts, merges touching ones.
    explicit NumberClique(std::vector<std::pair<int, int>> raw_intervals);

    const std::vector<std::pair<int, int>>& intervals() const { return intervals_; }
    std::vector<int> members() const;
    int size() const;
    bool empty() const { return intervals_.empty(); }
    bool contains(int x) const;
    int min() const { return intervals_.front().first; }
    int max() const { return intervals_.back().second; }

    bool operator==(const NumberClique&) const = default;

private:
    std::vector<std::pair<int, int>> intervals_;
};

struct NodeFlags {
    bool is_fork_clique;   // the node's in2children count is positive
    bool is_fork_child2;   // second child of a fork node
};
NodeFlags flags(const CanonColoredTree& t, int node);

// Memoized: one pass over the stored post-order. Logspace: recomputed from
// scratch with the traversal automaton on every query. Bit-for-bit equal.
enum class CountMode { memoized, logspace };

// Value of the running vertex counter immediately after visiting the node.
int count_after(const CanonColoredTree& t, int node, CountMode mode = CountMode::memoized);

// One case application while emitting a clique: which rule fired ("1", "2a",
// "2b", "2c", "2d"), the node or child it was applied to, and the raw intervals
// it contributed (before normalization).
struct CaseApplication {
    std::string rule;
    int subject;
    std::vector<std::pair<int, int>> intervals;
    bool operator==(const CaseApplication&) const = default;
};

struct BuildResult {
    std::vector<NumberClique> cliques;               // aligned with post_order
    int final_count = 0;                             // equals n on success
    std::vector<std::vector<CaseApplication>> steps; // per post-order position
    std::vector<int> count_trace;                    // counter after each position
    bool operator==(const BuildResult&) const = default;
};

// Walks the post-order sequence and emits the clique of numbers for every
// node. Throws StructureError when an interval leaves [1..n], intervals that
// must be disjoint overlap, a clique comes out empty, or the final counter
// misses n — all signs of a non-class input or corrupted colors.
BuildResult build_cliques(const CanonColoredTree& t, CountMode mode = CountMode::memoized);

// Vertex set [1..n]; distinct numbers are adjacent iff they share a clique.
OrderedGraph assemble_ordered_copy(const std::vector<NumberClique>& cliques, int n);

struct WitnessBijection {
    std::vector<int> h;     // source vertex -> number in [1..n]
    int clique_count = 0;   // max cliques of the source graph
    // (clique id, vertex) -> number of cliques containing the vertex on the
    // root path of that clique, the clique itself included
    std::map<std::pair<CliqueId, int>, int> anc_counts;
};

// Replays the induction along the transferred traversal sequence: fresh
// numbers of each clique go to its new vertices in non-decreasing ancestor-
// count order, ties broken by ascending vertex id. Verifies the construction
// and throws std::logic_error if any guaranteed property fails.
WitnessBijection build_witness(const SupplementedCliqueTree& s, const CanonColoredTree& t,
                               const BuildResult& b);

}  // namespace ccf

#endif
