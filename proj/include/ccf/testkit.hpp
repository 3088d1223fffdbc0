#ifndef CCF_TESTKIT_HPP
#define CCF_TESTKIT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccf/canonizer.hpp"

namespace ccf {

// splitmix64: tiny, fully specified, identical output on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

private:
    std::uint64_t state_;
};

std::vector<int> random_permutation(int n, Rng& rng);
// Erdos-Renyi-style graph, edge probability percent/100. Not in-class in general.
Graph random_graph(int n, int percent, Rng& rng);

// small named graphs
Graph path_graph(int k);
Graph complete_graph(int k);
Graph cycle_graph(int k);
Graph star_graph(int leaf_count);  // K_{1,leaf_count}
// Triangle uvw with pendant triangles on each of its edges: the smallest graph
// in the class whose clique tree has a fork clique. Ids: u=0 v=1 w=2 a1=3 a2=4 a3=5.
Graph fork_graph();

// Independent maximal-clique oracle (Bron-Kerbosch with pivoting, n <= 64).
std::vector<VertexSet> brute_force_max_cliques(const Graph& g);

struct GenParams {
    int tree_nodes = 5;
    int paths = 6;
    std::uint64_t seed = 42;
};

// Random tree, random endpoint paths, intersection graph, largest component;
// non-claw-free outcomes are rejected and retried. Deterministic per seed.
std::optional<Graph> random_class_graph(const GenParams& params, int max_attempts = 64,
                                        int* attempt_used = nullptr);

struct CorpusEntry {
    Graph graph;
    std::string provenance;
};
struct Corpus {
    std::uint64_t seed = 0;
    std::vector<CorpusEntry> entries;
};

// count in-class graphs spanning small dense shapes up to components of ~60
// vertices; every entry passes both recognizers.
Corpus generated_corpus(int count, std::uint64_t seed);

// All connected chordal claw-free graphs with up to n_max vertices, one
// representative per isomorphism class (brute-force dedupe). n_max <= 8.
std::vector<Graph> enumerate_small(int n_max);

// ---- structural checks bound to the proven clique-tree facts ----

// every vertex's cliques induce a path in the tree
bool check_vertex_paths(const CliqueTree& t);
// a clique lies between two others of a shared vertex iff it is inside their union
bool check_betweenness(const CliqueTree& t);
// for distinct u,w the cliques of u that avoid w induce a connected subgraph
bool check_difference_connected(const CliqueTree& t);
// rebuilding the tree from a relabeled copy gives the identical edge set
bool check_relabel_uniqueness(const Graph& g, const CliqueTree& t, Rng& rng, int rounds = 3);
// every node of degree >= 3 is a star clique or a fork clique
bool check_deg3_star_or_fork(const CliqueTree& t);
// every neighbor of a fork clique is a star clique
bool check_fork_neighbors_star(const CliqueTree& t);
// every fork clique has a fork triangle witnessed by three vertices
bool check_fork_triangle(const CliqueTree& t);
// children precede parents in the canon's post-order
bool check_postorder_ancestors(const CanonColoredTree& t);
// a vertex of a non-fork clique that occurred earlier has exactly one source:
// a child, or the first fork child when the clique is the second one
bool check_unique_prior_source(const SupplementedCliqueTree& s, const CanonColoredTree& t);

struct LemmaReport {
    struct Item {
        std::string name;
        long long checked = 0;
        long long failures = 0;
        std::string first_failure;  // offending graph, edge-list serialized
    };
    std::vector<Item> items;
    bool vacuous = false;
    bool all_passed() const;
    std::string to_text() const;
    nlohmann::json to_json() const;
};

// Runs every named check over all corpus members (per component; the canon
// checks once per leaf root). Refuses corpora with out-of-class members.
LemmaReport run_lemma_suite(const Corpus& corpus);

}  // namespace ccf

#endif
