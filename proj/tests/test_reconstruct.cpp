#include <set>

#include "doctest.h"
#include "fixtures.hpp"

#include "ccf/canonizer.hpp"
#include "ccf/errors.hpp"
#include "ccf/reconstruct.hpp"
#include "ccf/testkit.hpp"

using namespace ccf;

namespace {

SupplementedCliqueTree supplemented(const Graph& g, CliqueId root) {
    auto tree = build_clique_tree(g, enumerate_max_cliques(g));
    return build_supplemented(root_at(tree, root), g.vertex_count());
}

}  // namespace

TEST_CASE("number cliques normalize to maximal disjoint intervals") {
    NumberClique c({{14, 16}, {4, 4}, {17, 19}, {9, 9}, {11, 11}, {5, 4}});
    CHECK(c.intervals() ==
          std::vector<std::pair<int, int>>{{4, 4}, {9, 9}, {11, 11}, {14, 19}});
    CHECK(c.size() == 9);
    CHECK(c.contains(15));
    CHECK(!c.contains(10));
    CHECK(NumberClique(std::vector<std::pair<int, int>>{}).empty());
}

TEST_CASE("node flags on the golden tree") {
    auto t = fixtures::t_paper();
    CHECK(flags(t, 1).is_fork_clique);        // f, color (0,3,1)
    CHECK(!flags(t, 1).is_fork_child2);
    CHECK(!flags(t, 3).is_fork_clique);       // c5
    CHECK(flags(t, 3).is_fork_child2);        // second child of f
    CHECK(!flags(t, 0).is_fork_clique);       // root
    CHECK(!flags(t, 0).is_fork_child2);
    CHECK(!flags(t, 2).is_fork_child2);       // c1 is the first child
}

TEST_CASE("count recomputation in both modes") {
    auto t = fixtures::t_paper();
    CHECK(count_after(t, t.post_order[0]) == 6);
    CHECK(count_after(t, t.post_order[4]) == 19);
    CHECK(count_after(t, t.post_order[5]) == 19);  // fork: count unchanged
    for (int node = 0; node < t.node_count; ++node)
        CHECK(count_after(t, node, CountMode::memoized) ==
              count_after(t, node, CountMode::logspace));
}

TEST_CASE("golden reconstruction trace") {
    auto t = fixtures::t_paper();
    auto b = build_cliques(t);
    CHECK(fixtures::matches_golden_trace(b));
    CHECK(b == build_cliques(t, CountMode::logspace));
}

TEST_CASE("assembled copies") {
    OrderedGraph path = assemble_ordered_copy({NumberClique({{1, 2}}), NumberClique({{2, 3}})}, 3);
    CHECK(path.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

    OrderedGraph k3 = assemble_ordered_copy({NumberClique({{1, 3}})}, 3);
    CHECK(k3.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

    auto t = fixtures::t_paper();
    auto b = build_cliques(t);
    OrderedGraph big = assemble_ordered_copy(b.cliques, 22);
    CHECK(big.n == 22);
    // the emitted cliques are exactly the maximal cliques of the assembled graph
    auto oracle = brute_force_max_cliques(to_graph(big));
    std::set<std::vector<int>> expected;
    for (const auto& c : b.cliques) {
        auto members = c.members();
        for (auto& x : members) --x;
        expected.insert(members);
    }
    std::set<std::vector<int>> got;
    for (const auto& c : oracle) got.insert(c.ids());
    CHECK(got == expected);
}

TEST_CASE("witness bijections") {
    // two-clique path: the root receives the last fresh number
    auto sp3 = supplemented(path_graph(3), 0);
    auto tp3 = canonize_tree(sp3);
    auto bp3 = build_cliques(tp3);
    auto w = build_witness(sp3, tp3, bp3);
    CHECK(w.h == std::vector<int>{3, 2, 1});

    // single clique: ancestor counts tie, vertex ids break the tie
    auto sk3 = supplemented(complete_graph(3), 0);
    auto tk3 = canonize_tree(sk3);
    auto wk3 = build_witness(sk3, tk3, build_cliques(tk3));
    CHECK(wk3.h == std::vector<int>{1, 2, 3});

    // fork graph: h maps every transferred clique onto its emitted copy
    Graph g = fork_graph();
    auto tree = build_clique_tree(g, enumerate_max_cliques(g));
    for (CliqueId r : leaves(tree)) {
        auto s = build_supplemented(root_at(tree, r), g.vertex_count());
        auto ct = canonize_tree(s);
        auto b = build_cliques(ct);
        auto wit = build_witness(s, ct, b);  // throws if any property fails
        for (std::size_t k = 0; k < ct.post_order.size(); ++k) {
            CliqueId a = ct.back_map[ct.post_order[k]];
            std::vector<int> image;
            for (int v : tree.cliques.cliques[a]) image.push_back(wit.h[v]);
            std::sort(image.begin(), image.end());
            CHECK(image == b.cliques[k].members());
        }
    }
}

TEST_CASE("reconstruction invariants on generated instances") {
    Rng rng(2718);
    int tested = 0;
    while (tested < 40) {
        GenParams params{2 + rng.below(9), 3 + rng.below(12), rng.next()};
        auto g = random_class_graph(params);
        if (!g) continue;
        ++tested;
        auto tree = build_clique_tree(*g, enumerate_max_cliques(*g));
        for (CliqueId r : leaves(tree)) {
            auto s = build_supplemented(root_at(tree, r), g->vertex_count());
            auto ct = canonize_tree(s);
            auto b = build_cliques(ct);
            CHECK(b.final_count == g->vertex_count());
            CHECK(b == build_cliques(ct, CountMode::logspace));
            // every number is issued exactly once as fresh
            Bitset seen(g->vertex_count() + 1);
            int total = 0;
            for (std::size_t k = 0; k < b.cliques.size(); ++k)
                for (int x : b.cliques[k].members())
                    if (!seen.test(x)) {
                        seen.set(x);
                        ++total;
                    }
            CHECK(total == g->vertex_count());
            // non-fork, non-second-child nodes end in their parent slice
            for (std::size_t k = 0; k < b.cliques.size(); ++k) {
                int m = ct.post_order[k];
                auto f = flags(ct, m);
                if (f.is_fork_clique || f.is_fork_child2) continue;
                int cnt = b.count_trace[k];
                for (int x = cnt - ct.color[m].inparent + 1; x <= cnt; ++x)
                    CHECK(b.cliques[k].contains(x));
            }
            build_witness(s, ct, b);  // full property verification built in
        }
    }
}

TEST_CASE("corrupted colors are rejected") {
    auto t = fixtures::t_paper();
    t.color[0].in0children = 4;  // root now issues one number too many
    CHECK_THROWS_AS(build_cliques(t), StructureError);

    auto t2 = fixtures::t_paper();
    t2.color[6].in0children = 50;  // interval leaves [1..n]
    CHECK_THROWS_AS(build_cliques(t2), StructureError);
}
