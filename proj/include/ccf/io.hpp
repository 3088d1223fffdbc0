#ifndef CCF_IO_HPP
#define CCF_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccf/clique_tree.hpp"
#include "ccf/supplement.hpp"

namespace ccf {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

// Edge-list document: optional "p <n> <m>" header, "u v" lines with
// non-negative integer labels, '#' comment lines. Labels are densified on
// ingest; the original labels survive in `labels`. Duplicate edges and
// self-loops are rejected. Without a header, isolated vertices cannot be
// expressed; with one, the vertex set is 0..n-1.
struct ParsedGraph {
    Graph graph;
    std::vector<long long> labels;  // dense id -> original label
};

ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list_file(const std::string& path);

// Canonical document for a graph over dense ids: header plus sorted edges.
// parse(serialize(g)) reproduces g exactly.
std::string serialize_edge_list(const Graph& g);

// Human-readable clique tree listing, and a DOT rendering with the color
// triples of the given rooting in the node labels.
std::string clique_tree_text(const CliqueTree& t, const SupplementedCliqueTree& s,
                             const std::vector<long long>& labels);
std::string clique_tree_dot(const CliqueTree& t, const SupplementedCliqueTree& s,
                            const std::vector<long long>& labels);

}  // namespace ccf

#endif
