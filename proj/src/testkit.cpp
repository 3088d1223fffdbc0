#include "ccf/testkit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ccf/io.hpp"

namespace ccf {

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
    return p;
}

Graph random_graph(int n, int percent, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < percent) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph path_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, edges);
}

Graph complete_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return Graph(k, edges);
}

Graph cycle_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(k, edges);
}

Graph star_graph(int leaf_count) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaf_count; ++i) edges.emplace_back(0, i);
    return Graph(leaf_count + 1, edges);
}

Graph fork_graph() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 2}, {4, 0}, {4, 1}, {5, 1}, {5, 2}});
}

namespace {

void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<std::uint64_t>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t m = px; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int gain = std::popcount(p & adj[v]);
        if (gain > best) best = gain, pivot = v;
    }
    std::uint64_t cands = p & ~adj[pivot];
    while (cands) {
        int v = std::countr_zero(cands);
        std::uint64_t bit = std::uint64_t{1} << v;
        cands &= cands - 1;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

std::vector<VertexSet> brute_force_max_cliques(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("brute-force clique oracle supports n <= 64");
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edge_list()) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    std::vector<std::uint64_t> masks;
    bron_kerbosch(adj, 0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0, masks);
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (auto m : masks) {
        std::vector<int> v;
        while (m) {
            v.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        out.push_back(VertexSet(std::move(v)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Graph> random_class_graph(const GenParams& params, int max_attempts,
                                        int* attempt_used) {
    if (params.tree_nodes < 1 || params.paths < 1)
        throw std::invalid_argument("generator needs at least one tree node and one path");
    const int k = params.tree_nodes;
    const int p = params.paths;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng(params.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
        // random recursive tree
        std::vector<int> parent(k, -1), depth(k, 0);
        for (int i = 1; i < k; ++i) {
            parent[i] = rng.below(i);
            depth[i] = depth[parent[i]] + 1;
        }
        // random endpoint paths, as node sets
        std::vector<Bitset> nodes_of(p, Bitset(k));
        for (int i = 0; i < p; ++i) {
            int a = rng.below(k), b = rng.below(k);
            while (depth[a] > depth[b]) {
                nodes_of[i].set(a);
                a = parent[a];
            }
            while (depth[b] > depth[a]) {
                nodes_of[i].set(b);
                b = parent[b];
            }
            while (a != b) {
                nodes_of[i].set(a);
                nodes_of[i].set(b);
                a = parent[a];
                b = parent[b];
            }
            nodes_of[i].set(a);
        }
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (nodes_of[i].intersects(nodes_of[j])) edges.emplace_back(i, j);
        Graph intersection(p, edges);
        auto decomp = connected_components(intersection);
        const Component* largest = &decomp.components.front();
        for (const auto& c : decomp.components)
            if (c.graph.vertex_count() > largest->graph.vertex_count()) largest = &c;
        if (!is_claw_free(largest->graph)) continue;
        if (!is_chordal(largest->graph))
            throw std::logic_error("path intersection graph is not chordal");
        if (attempt_used) *attempt_used = attempt;
        return largest->graph;
    }
    return std::nullopt;
}

Corpus generated_corpus(int count, std::uint64_t seed) {
    Corpus corpus;
    corpus.seed = seed;
    Rng meta(seed);
    int rounds = 0;
    while (static_cast<int>(corpus.entries.size()) < count) {
        if (++rounds > count * 50) throw std::logic_error("corpus generation stalled");
        GenParams params;
        switch (rounds % 4) {
            case 0:  // large components: tiny trees accept almost surely
                params.tree_nodes = 2;
                params.paths = 10 + meta.below(51);
                break;
            case 1:
                params.tree_nodes = 3 + meta.below(3);
                params.paths = 6 + meta.below(13);
                break;
            case 2:  // deeper trees, classic shapes with forks
                params.tree_nodes = 6 + meta.below(9);
                params.paths = 4 + meta.below(7);
                break;
            default:
                params.tree_nodes = 2 + meta.below(2);
                params.paths = 20 + meta.below(41);
                break;
        }
        params.seed = meta.next();
        int attempt = 0;
        auto g = random_class_graph(params, 64, &attempt);
        if (!g) continue;
        std::string prov = "gen(k=" + std::to_string(params.tree_nodes) +
                           ",p=" + std::to_string(params.paths) +
                           ",seed=" + std::to_string(params.seed) +
                           ",attempt=" + std::to_string(attempt) + ")";
        corpus.entries.push_back({std::move(*g), std::move(prov)});
    }
    return corpus;
}

namespace {

// mask-level recognizers for the exhaustive small-graph sweep (n <= 8)
struct SmallGraph {
    int n;
    std::array<std::uint8_t, 8> adj;
};

bool sg_connected(const SmallGraph& g) {
    std::uint8_t reach = 1, prev = 0;
    while (reach != prev) {
        prev = reach;
        for (int v = 0; v < g.n; ++v)
            if (reach & (1u << v)) reach |= g.adj[v];
    }
    return reach == (1u << g.n) - 1;
}

bool sg_claw_free(const SmallGraph& g) {
    for (int v = 0; v < g.n; ++v) {
        std::uint8_t nb = g.adj[v];
        for (int a = 0; a < g.n; ++a) {
            if (!(nb & (1u << a))) continue;
            for (int b = a + 1; b < g.n; ++b) {
                if (!(nb & (1u << b)) || (g.adj[a] & (1u << b))) continue;
                std::uint8_t rest = nb & ~g.adj[a] & ~g.adj[b] &
                                    static_cast<std::uint8_t>(~(1u << a)) &
                                    static_cast<std::uint8_t>(~(1u << b));
                rest &= static_cast<std::uint8_t>(~((1u << (b + 1)) - 1));
                if (rest) return false;
            }
        }
    }
    return true;
}

bool sg_chordal(const SmallGraph& g) {
    int weight[8] = {0};
    std::uint8_t picked = 0;
    int selection[8];
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!(picked & (1u << v)) && (best == -1 || weight[v] > weight[best])) best = v;
        picked |= 1u << best;
        selection[step] = best;
        for (int u = 0; u < g.n; ++u)
            if ((g.adj[best] & (1u << u)) && !(picked & (1u << u))) ++weight[u];
    }
    // reversed selection order must be a perfect elimination ordering
    int pos[8];
    for (int i = 0; i < g.n; ++i) pos[selection[g.n - 1 - i]] = i;
    for (int v = 0; v < g.n; ++v) {
        std::uint8_t later = 0;
        for (int u = 0; u < g.n; ++u)
            if ((g.adj[v] & (1u << u)) && pos[u] > pos[v]) later |= 1u << u;
        for (int a = 0; a < g.n; ++a)
            if (later & (1u << a))
                if (later & ~g.adj[a] & static_cast<std::uint8_t>(~(1u << a))) return false;
    }
    return true;
}

}  // namespace

std::vector<Graph> enumerate_small(int n_max) {
    if (n_max < 1 || n_max > 8)
        throw std::invalid_argument("enumerate_small supports 1..8 vertices");
    std::vector<Graph> reps;
    std::map<std::vector<int>, std::vector<std::size_t>> buckets;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const int bits = static_cast<int>(pairs.size());
        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            SmallGraph sg{n, {}};
            for (int b = 0; b < bits; ++b)
                if (mask & (1u << b)) {
                    sg.adj[pairs[b].first] |= 1u << pairs[b].second;
                    sg.adj[pairs[b].second] |= 1u << pairs[b].first;
                }
            if (!sg_connected(sg) || !sg_claw_free(sg) || !sg_chordal(sg)) continue;
            std::vector<std::pair<int, int>> edges;
            for (int b = 0; b < bits; ++b)
                if (mask & (1u << b)) edges.push_back(pairs[b]);
            Graph g(n, edges);
            // cheap invariants narrow the isomorphism buckets
            std::vector<int> key{n, g.edge_count()};
            int triangles = 0;
            for (auto [u, v] : edges)
                triangles += (g.neighbor_bits(u) & g.neighbor_bits(v)).count();
            key.push_back(triangles);
            std::vector<int> degs(n);
            for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
            std::sort(degs.begin(), degs.end());
            key.insert(key.end(), degs.begin(), degs.end());
            bool duplicate = false;
            for (std::size_t idx : buckets[key])
                if (brute_force_isomorphic(g, reps[idx])) {
                    duplicate = true;
                    break;
                }
            if (duplicate) continue;
            buckets[key].push_back(reps.size());
            reps.push_back(std::move(g));
        }
    }
    return reps;
}

// ---- structural checks ----

namespace {

// the induced path of cliques containing v, empty result when not a path
std::optional<std::vector<CliqueId>> clique_path_of(const CliqueTree& t, int v) {
    const auto& members = t.cliques.containing[v];
    if (members.empty()) return std::nullopt;
    if (members.size() == 1) return std::vector<CliqueId>{members[0]};
    auto inside = [&](CliqueId c) {
        return std::binary_search(members.begin(), members.end(), c);
    };
    std::vector<std::vector<CliqueId>> nb(members.size());
    std::map<CliqueId, int> index;
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
    int edge_count = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (CliqueId a : t.adjacent[members[i]])
            if (inside(a)) {
                nb[i].push_back(a);
                ++edge_count;
            }
    edge_count /= 2;
    if (edge_count != static_cast<int>(members.size()) - 1) return std::nullopt;
    int start = -1;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (nb[i].size() > 2) return std::nullopt;
        if (nb[i].size() == 1) start = static_cast<int>(i);
    }
    if (start == -1) return std::nullopt;
    std::vector<CliqueId> path{members[start]};
    CliqueId prev = -1;
    while (path.size() < members.size()) {
        int cur = index[path.back()];
        CliqueId next = -1;
        for (CliqueId a : nb[cur])
            if (a != prev) next = a;
        if (next == -1) return std::nullopt;
        prev = path.back();
        path.push_back(next);
    }
    return path;
}

}  // namespace

bool check_vertex_paths(const CliqueTree& t) {
    for (int v = 0; v < t.cliques.vertex_count; ++v)
        if (!clique_path_of(t, v)) return false;
    return true;
}

bool check_betweenness(const CliqueTree& t) {
    const int n = t.cliques.vertex_count;
    for (int v = 0; v < n; ++v) {
        auto path = clique_path_of(t, v);
        if (!path) return false;
        std::map<CliqueId, int> pos;
        for (std::size_t i = 0; i < path->size(); ++i) pos[(*path)[i]] = static_cast<int>(i);
        const auto& ms = *path;
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = 0; j < ms.size(); ++j)
                for (std::size_t k = 0; k < ms.size(); ++k) {
                    if (i == j || j == k || i == k) continue;
                    CliqueId a1 = ms[i], a2 = ms[j], a3 = ms[k];
                    bool between = (pos[a1] < pos[a2] && pos[a2] < pos[a3]) ||
                                   (pos[a3] < pos[a2] && pos[a2] < pos[a1]);
                    Bitset uni = t.cliques.clique_bits[a1] | t.cliques.clique_bits[a3];
                    bool subset = t.cliques.clique_bits[a2].is_subset_of(uni);
                    if (between != subset) return false;
                }
    }
    return true;
}

bool check_difference_connected(const CliqueTree& t) {
    const int n = t.cliques.vertex_count;
    for (int u = 0; u < n; ++u) {
        for (int w = 0; w < n; ++w) {
            if (u == w) continue;
            std::vector<CliqueId> keep;
            std::set_difference(t.cliques.containing[u].begin(), t.cliques.containing[u].end(),
                                t.cliques.containing[w].begin(), t.cliques.containing[w].end(),
                                std::back_inserter(keep));
            if (keep.size() <= 1) continue;
            auto inside = [&](CliqueId c) {
                return std::binary_search(keep.begin(), keep.end(), c);
            };
            std::vector<CliqueId> stack{keep.front()};
            std::set<CliqueId> seen{keep.front()};
            while (!stack.empty()) {
                CliqueId v = stack.back();
                stack.pop_back();
                for (CliqueId a : t.adjacent[v])
                    if (inside(a) && seen.insert(a).second) stack.push_back(a);
            }
            if (seen.size() != keep.size()) return false;
        }
    }
    return true;
}

bool check_relabel_uniqueness(const Graph& g, const CliqueTree& t, Rng& rng, int rounds) {
    auto edge_fingerprint = [](const CliqueTree& tree, const std::vector<int>& back) {
        std::set<std::pair<VertexSet, VertexSet>> out;
        for (auto [a, b] : tree.edges) {
            std::vector<int> va, vb;
            for (int v : tree.cliques.cliques[a]) va.push_back(back[v]);
            for (int v : tree.cliques.cliques[b]) vb.push_back(back[v]);
            VertexSet sa(std::move(va)), sb(std::move(vb));
            if (sb < sa) std::swap(sa, sb);
            out.emplace(std::move(sa), std::move(sb));
        }
        return out;
    };
    std::vector<int> identity(g.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    auto expected = edge_fingerprint(t, identity);
    for (int round = 0; round < rounds; ++round) {
        auto pi = random_permutation(g.vertex_count(), rng);
        std::vector<int> inverse(pi.size());
        for (std::size_t v = 0; v < pi.size(); ++v) inverse[pi[v]] = static_cast<int>(v);
        Graph g2 = permuted(g, pi);
        CliqueTree t2 = build_clique_tree(g2, enumerate_max_cliques(g2));
        if (edge_fingerprint(t2, inverse) != expected) return false;
    }
    return true;
}

bool check_deg3_star_or_fork(const CliqueTree& t) {
    for (CliqueId a = 0; a < t.node_count(); ++a)
        if (t.degree(a) >= 3 && !is_star_clique(t, a) && !is_fork_clique(t, a)) return false;
    return true;
}

bool check_fork_neighbors_star(const CliqueTree& t) {
    for (CliqueId a = 0; a < t.node_count(); ++a)
        if (is_fork_clique(t, a))
            for (CliqueId b : t.adjacent[a])
                if (!is_star_clique(t, b)) return false;
    return true;
}

bool check_fork_triangle(const CliqueTree& t) {
    for (CliqueId b = 0; b < t.node_count(); ++b) {
        if (!is_fork_clique(t, b)) continue;
        const auto& nb = t.adjacent[b];
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                std::vector<CliqueId> want{b, nb[i], nb[j]};
                std::sort(want.begin(), want.end());
                bool found = false;
                for (int v : t.cliques.cliques[b])
                    if (t.cliques.containing[v] == want) {
                        found = true;
                        break;
                    }
                if (!found) return false;
            }
    }
    return true;
}

bool check_postorder_ancestors(const CanonColoredTree& t) {
    std::vector<int> pos(t.node_count);
    for (std::size_t i = 0; i < t.post_order.size(); ++i) pos[t.post_order[i]] = static_cast<int>(i);
    for (int v = 0; v < t.node_count; ++v)
        for (int c : t.children[v])
            if (pos[c] >= pos[v]) return false;
    return true;
}

bool check_unique_prior_source(const SupplementedCliqueTree& s, const CanonColoredTree& t) {
    const auto& cs = s.rooted.tree.cliques;
    const int count = t.node_count;
    // positions of the transferred sequence containing each vertex
    std::vector<std::vector<int>> positions(cs.vertex_count);
    for (int k = 0; k < count; ++k)
        for (int v : cs.cliques[t.back_map[t.post_order[k]]]) positions[v].push_back(k);
    std::vector<int> pos_of_node(count);
    for (int k = 0; k < count; ++k) pos_of_node[t.post_order[k]] = k;

    for (int k = 0; k < count; ++k) {
        int m = t.post_order[k];
        auto f = flags(t, m);
        if (f.is_fork_clique) continue;
        for (int v : cs.cliques[t.back_map[m]]) {
            bool earlier = positions[v].front() < k;
            if (!earlier) continue;
            int sources = 0;
            for (int child : t.children[m])
                if (cs.clique_bits[t.back_map[child]].test(v)) ++sources;
            if (f.is_fork_child2) {
                int sibling = t.children[t.parent[m]][0];
                if (cs.clique_bits[t.back_map[sibling]].test(v)) ++sources;
            }
            if (sources != 1) return false;
        }
    }
    return true;
}

bool LemmaReport::all_passed() const {
    for (const auto& item : items)
        if (item.failures > 0) return false;
    return true;
}

std::string LemmaReport::to_text() const {
    std::string out;
    if (vacuous) out += "warning: empty corpus, all checks are vacuous\n";
    for (const auto& item : items) {
        out += item.name + ": checked=" + std::to_string(item.checked) +
               " failures=" + std::to_string(item.failures) + "\n";
        if (item.failures > 0) out += "  first failure:\n" + item.first_failure;
    }
    out += all_passed() ? "result: pass\n" : "result: FAIL\n";
    return out;
}

nlohmann::json LemmaReport::to_json() const {
    nlohmann::json items_json = nlohmann::json::array();
    for (const auto& item : items) {
        nlohmann::json j{{"name", item.name}, {"checked", item.checked}, {"failures", item.failures}};
        if (item.failures > 0) j["first_failure"] = item.first_failure;
        items_json.push_back(std::move(j));
    }
    return nlohmann::json{{"vacuous", vacuous}, {"all_passed", all_passed()}, {"items", items_json}};
}

LemmaReport run_lemma_suite(const Corpus& corpus) {
    for (const auto& entry : corpus.entries)
        if (find_claw(entry.graph) || !is_chordal(entry.graph))
            throw std::invalid_argument("corpus member is not chordal claw-free");

    const std::vector<std::string> names{
        "vertex-clique-paths",     "betweenness",          "difference-connected",
        "tree-unique-relabeling",  "degree3-star-or-fork", "fork-neighbors-are-stars",
        "fork-triangle",           "postorder-descendants-first", "unique-prior-source"};
    LemmaReport report;
    for (const auto& name : names) report.items.push_back({name, 0, 0, ""});
    report.vacuous = corpus.entries.empty();

    Rng rng(corpus.seed ^ 0x5eedc0ffee123456ULL);
    for (const auto& entry : corpus.entries) {
        std::array<bool, 9> ok;
        ok.fill(true);
        for (const auto& comp : connected_components(entry.graph).components) {
            const Graph& g = comp.graph;
            CliqueTree tree = build_clique_tree(g, enumerate_max_cliques(g));
            ok[0] &= check_vertex_paths(tree);
            ok[1] &= check_betweenness(tree);
            ok[2] &= check_difference_connected(tree);
            ok[3] &= check_relabel_uniqueness(g, tree, rng);
            ok[4] &= check_deg3_star_or_fork(tree);
            ok[5] &= check_fork_neighbors_star(tree);
            ok[6] &= check_fork_triangle(tree);
            for (CliqueId r : leaves(tree)) {
                auto supp = build_supplemented(root_at(tree, r), g.vertex_count());
                auto canon = canonize_tree(supp);
                ok[7] &= check_postorder_ancestors(canon);
                ok[8] &= check_unique_prior_source(supp, canon);
            }
        }
        for (std::size_t i = 0; i < ok.size(); ++i) {
            ++report.items[i].checked;
            if (!ok[i]) {
                ++report.items[i].failures;
                if (report.items[i].first_failure.empty())
                    report.items[i].first_failure = serialize_edge_list(entry.graph);
            }
        }
    }
    return report;
}

}  // namespace ccf
