#include <algorithm>
#include <set>

#include "doctest.h"

#include "ccf/clique_tree.hpp"
#include "ccf/errors.hpp"
#include "ccf/testkit.hpp"

using namespace ccf;

namespace {

std::set<std::vector<int>> as_sets(const std::vector<VertexSet>& cliques) {
    std::set<std::vector<int>> out;
    for (const auto& c : cliques) out.insert(c.ids());
    return out;
}

}  // namespace

TEST_CASE("spanning triples") {
    Graph k3 = complete_graph(3);
    CHECK(is_spanning_triple(k3, {0, 1, 2}));
    Graph p3 = path_graph(3);
    CHECK(!is_spanning_triple(p3, {1, 1, 1}));  // 0 and 2 are common neighbors, non-adjacent
    CHECK(is_spanning_triple(p3, {0, 1, 1}));
}

TEST_CASE("spanned cliques") {
    CHECK(spanned_clique(complete_graph(3), {0, 1, 2}).ids() == std::vector<int>{0, 1, 2});
    CHECK(spanned_clique(path_graph(3), {0, 1, 1}).ids() == std::vector<int>{0, 1});
    CHECK(spanned_clique(fork_graph(), {0, 1, 2}).ids() == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(spanned_clique(path_graph(3), {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("max clique enumeration matches the brute-force oracle") {
    CHECK(as_sets(enumerate_max_cliques(complete_graph(3)).cliques) ==
          std::set<std::vector<int>>{{0, 1, 2}});
    CHECK(as_sets(enumerate_max_cliques(path_graph(3)).cliques) ==
          std::set<std::vector<int>>{{0, 1}, {1, 2}});
    // computed once with the Bron-Kerbosch oracle, frozen here
    CHECK(as_sets(enumerate_max_cliques(fork_graph()).cliques) ==
          std::set<std::vector<int>>{{0, 1, 2}, {0, 2, 3}, {0, 1, 4}, {1, 2, 5}});

    Rng rng(4242);
    int tested = 0;
    while (tested < 60) {
        GenParams params{2 + rng.below(8), 3 + rng.below(10), rng.next()};
        auto g = random_class_graph(params);
        if (!g) continue;
        ++tested;
        auto enumerated = enumerate_max_cliques(*g);
        CHECK(enumerated.cliques == brute_force_max_cliques(*g));
        // per-vertex membership is consistent
        for (int v = 0; v < g->vertex_count(); ++v)
            for (CliqueId c : enumerated.containing[v]) CHECK(enumerated.cliques[c].contains(v));
    }
}

TEST_CASE("clique tree construction") {
    auto p3_tree = build_clique_tree(path_graph(3), enumerate_max_cliques(path_graph(3)));
    CHECK(p3_tree.edges == std::vector<std::pair<CliqueId, CliqueId>>{{0, 1}});

    auto k3_tree = build_clique_tree(complete_graph(3), enumerate_max_cliques(complete_graph(3)));
    CHECK(k3_tree.node_count() == 1);
    CHECK(k3_tree.edges.empty());

    auto fork_tree = build_clique_tree(fork_graph(), enumerate_max_cliques(fork_graph()));
    REQUIRE(fork_tree.node_count() == 4);
    // star around the central clique {0,1,2}
    CliqueId center = -1;
    for (CliqueId a = 0; a < 4; ++a)
        if (fork_tree.cliques.cliques[a].ids() == std::vector<int>{0, 1, 2}) center = a;
    REQUIRE(center != -1);
    CHECK(fork_tree.degree(center) == 3);
    for (CliqueId a = 0; a < 4; ++a)
        if (a != center) CHECK(fork_tree.degree(a) == 1);

    // the claw is chordal but yields a triangle of cliques under the criterion
    CHECK_THROWS_AS(build_clique_tree(star_graph(3), enumerate_max_cliques(star_graph(3))),
                    StructureError);
}

TEST_CASE("star and fork classification") {
    auto p3_tree = build_clique_tree(path_graph(3), enumerate_max_cliques(path_graph(3)));
    CHECK(is_star_clique(p3_tree, 0));  // every leaf is a star clique
    CHECK(!is_fork_clique(p3_tree, 0));

    auto fork_tree = build_clique_tree(fork_graph(), enumerate_max_cliques(fork_graph()));
    for (CliqueId a = 0; a < 4; ++a) {
        bool central = fork_tree.cliques.cliques[a].ids() == std::vector<int>{0, 1, 2};
        CHECK(is_fork_clique(fork_tree, a) == central);
        CHECK(is_star_clique(fork_tree, a) == !central);
    }

    // middle clique of a path of cliques has degree 2: neither test degenerates
    auto p5_tree = build_clique_tree(path_graph(5), enumerate_max_cliques(path_graph(5)));
    for (CliqueId a = 0; a < p5_tree.node_count(); ++a)
        if (p5_tree.degree(a) == 2) CHECK(!is_fork_clique(p5_tree, a));
}

TEST_CASE("leaves and rooting") {
    auto p3_tree = build_clique_tree(path_graph(3), enumerate_max_cliques(path_graph(3)));
    CHECK(leaves(p3_tree) == std::vector<CliqueId>{0, 1});
    auto rooted = root_at(p3_tree, 0);
    CHECK(rooted.parent[1] == 0);
    CHECK(rooted.children[0] == std::vector<CliqueId>{1});

    auto k3_tree = build_clique_tree(complete_graph(3), enumerate_max_cliques(complete_graph(3)));
    CHECK(leaves(k3_tree) == std::vector<CliqueId>{0});
    auto trivial = root_at(k3_tree, 0);
    CHECK(trivial.children[0].empty());

    auto fork_tree = build_clique_tree(fork_graph(), enumerate_max_cliques(fork_graph()));
    CHECK(leaves(fork_tree).size() == 3);
    CliqueId center = -1;
    for (CliqueId a = 0; a < 4; ++a)
        if (is_fork_clique(fork_tree, a)) center = a;
    CHECK_THROWS_AS(root_at(fork_tree, center), std::invalid_argument);
    auto fr = root_at(fork_tree, leaves(fork_tree).front());
    CHECK(fr.children[fr.root] == std::vector<CliqueId>{center});
    CHECK(fr.children[center].size() == 2);
}

TEST_CASE("structural lemmas hold on generated instances") {
    Rng rng(31337);
    int tested = 0;
    while (tested < 40) {
        GenParams params{2 + rng.below(9), 3 + rng.below(12), rng.next()};
        auto g = random_class_graph(params);
        if (!g) continue;
        ++tested;
        auto tree = build_clique_tree(*g, enumerate_max_cliques(*g));
        CHECK(check_vertex_paths(tree));
        CHECK(check_betweenness(tree));
        CHECK(check_difference_connected(tree));
        CHECK(check_deg3_star_or_fork(tree));
        CHECK(check_fork_neighbors_star(tree));
        CHECK(check_fork_triangle(tree));
        CHECK(check_relabel_uniqueness(*g, tree, rng, 2));
        // any rooted version: nodes with two or more children are stars or forks
        for (CliqueId r : leaves(tree)) {
            auto rooted = root_at(tree, r);
            for (CliqueId a = 0; a < tree.node_count(); ++a)
                if (rooted.children[a].size() >= 2)
                    CHECK((is_star_clique(tree, a) || is_fork_clique(tree, a)));
        }
    }
}
