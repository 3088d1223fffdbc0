#include "doctest.h"

#include "ccf/supplement.hpp"
#include "ccf/testkit.hpp"

using namespace ccf;

namespace {

SupplementedCliqueTree supplemented(const Graph& g, CliqueId root) {
    auto tree = build_clique_tree(g, enumerate_max_cliques(g));
    return build_supplemented(root_at(tree, root), g.vertex_count());
}

}  // namespace

TEST_CASE("colors of a two-clique path") {
    // cliques of P_3 in id order: C0={0,1}, C1={1,2}; root at C0
    auto s = supplemented(path_graph(3), 0);
    CHECK(s.colors[1] == ColorTriple{2, 1, 0});
    CHECK(s.colors[0] == ColorTriple{1, 0, 0});
}

TEST_CASE("single max clique") {
    auto s = supplemented(complete_graph(3), 0);
    REQUIRE(s.colors.size() == 1);
    CHECK(s.colors[0] == ColorTriple{3, 0, 0});
    CHECK(s.n == 3);
}

TEST_CASE("fork clique color") {
    Graph g = fork_graph();
    auto tree = build_clique_tree(g, enumerate_max_cliques(g));
    CliqueId center = -1;
    for (CliqueId a = 0; a < tree.node_count(); ++a)
        if (is_fork_clique(tree, a)) center = a;
    REQUIRE(center != -1);
    auto s = build_supplemented(root_at(tree, leaves(tree).front()), g.vertex_count());
    CHECK(s.colors[center] == ColorTriple{0, 2, 1});
    CHECK(s.colors[s.rooted.root].inparent == 0);
    // leaves under the fork share two vertices with it
    for (CliqueId ch : s.rooted.children[center]) CHECK(s.colors[ch] == ColorTriple{3, 2, 0});
}

TEST_CASE("color invariants on generated instances") {
    Rng rng(555);
    int tested = 0;
    while (tested < 40) {
        GenParams params{2 + rng.below(9), 3 + rng.below(12), rng.next()};
        auto g = random_class_graph(params);
        if (!g) continue;
        ++tested;
        auto tree = build_clique_tree(*g, enumerate_max_cliques(*g));
        for (CliqueId r : leaves(tree)) {
            auto s = build_supplemented(root_at(tree, r), g->vertex_count());
            for (CliqueId a = 0; a < tree.node_count(); ++a) {
                // in2children is positive exactly for fork cliques
                CHECK((s.colors[a].in2children > 0) == is_fork_clique(tree, a));
                // inparent recomputed independently
                CliqueId p = s.rooted.parent[a];
                int expected = p == -1 ? 0
                                       : tree.cliques.cliques[a].intersection_size(
                                             tree.cliques.cliques[p]);
                CHECK(s.colors[a].inparent == expected);
                CHECK((s.colors[a].inparent == 0) == (a == s.rooted.root));
            }
        }
        // colors depend only on intersections: relabeling keeps them, clique-wise
        auto pi = random_permutation(g->vertex_count(), rng);
        Graph h = permuted(*g, pi);
        auto tree2 = build_clique_tree(h, enumerate_max_cliques(h));
        auto map_clique = [&](CliqueId a) {  // clique of g -> clique id of h
            std::vector<int> ids;
            for (int v : tree.cliques.cliques[a]) ids.push_back(pi[v]);
            VertexSet want(std::move(ids));
            for (CliqueId b = 0; b < tree2.node_count(); ++b)
                if (tree2.cliques.cliques[b] == want) return b;
            return CliqueId{-1};
        };
        CliqueId r = leaves(tree).front();
        CliqueId r2 = map_clique(r);
        REQUIRE(r2 != -1);
        auto s1 = build_supplemented(root_at(tree, r), g->vertex_count());
        auto s2 = build_supplemented(root_at(tree2, r2), h.vertex_count());
        for (CliqueId a = 0; a < tree.node_count(); ++a)
            CHECK(s1.colors[a] == s2.colors[map_clique(a)]);
    }
}
