#include "ccf/clique_tree.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "ccf/errors.hpp"

namespace ccf {

namespace {

bool neighborhood_is_clique(const Graph& g, const Bitset& cn) {
    for (int x = cn.first(); x != -1; x = cn.next(x))
        if (!cn.is_subset_of_except(g.neighbor_bits(x), x)) return false;
    return true;
}

Bitset common_neighbors(const Graph& g, const std::array<int, 3>& t) {
    Bitset cn = g.neighbor_bits(t[0]);
    if (t[1] != t[0]) cn &= g.neighbor_bits(t[1]);
    if (t[2] != t[0] && t[2] != t[1]) cn &= g.neighbor_bits(t[2]);
    return cn;
}

}  // namespace

bool is_spanning_triple(const Graph& g, const std::array<int, 3>& t) {
    for (int v : t)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("triple entry out of range");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (t[i] != t[j] && !g.adjacent(t[i], t[j])) return false;
    return neighborhood_is_clique(g, common_neighbors(g, t));
}

VertexSet spanned_clique(const Graph& g, const std::array<int, 3>& t) {
    if (!is_spanning_triple(g, t)) throw std::invalid_argument("triple does not span a max clique");
    Bitset members = common_neighbors(g, t);
    for (int v : t) members.set(v);
    return VertexSet::from_bits(members);
}

MaxCliqueSet enumerate_max_cliques(const Graph& g) {
    const int n = g.vertex_count();
    // Scanning ordered triples u <= v <= w covers all triples with repetition,
    // since the spanning property only depends on the underlying set.
    std::set<std::vector<std::uint64_t>> found;  // max cliques as bit masks
    Bitset common_uv(n), cn(n);  // copy-assigned in the loops, no reallocation
    for (int u = 0; u < n; ++u) {
        std::vector<int> seconds{u};
        for (int v : g.neighbors(u))
            if (v > u) seconds.push_back(v);
        for (int v : seconds) {
            common_uv = g.neighbor_bits(u);
            if (v != u) common_uv &= g.neighbor_bits(v);
            std::vector<int> thirds{v};
            for (int w = common_uv.first(); w != -1; w = common_uv.next(w))
                if (w > v) thirds.push_back(w);
            for (int w : thirds) {
                cn = common_uv;
                if (w != v) cn &= g.neighbor_bits(w);
                cn.set(u);
                cn.set(v);
                cn.set(w);
                // a candidate that equals a known max clique is spanned, done
                if (found.count(cn.words())) continue;
                cn.reset(u);
                cn.reset(v);
                cn.reset(w);
                if (!neighborhood_is_clique(g, cn)) continue;
                cn.set(u);
                cn.set(v);
                cn.set(w);
                found.insert(cn.words());
            }
        }
    }

    std::vector<std::vector<int>> members_list;
    members_list.reserve(found.size());
    for (const auto& words : found) {
        Bitset b(n);
        std::vector<int> members;
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::uint64_t bits = words[i]; bits; bits &= bits - 1)
                members.push_back(static_cast<int>(i * 64) + std::countr_zero(bits));
        members_list.push_back(std::move(members));
    }
    std::sort(members_list.begin(), members_list.end());

    MaxCliqueSet out;
    out.vertex_count = n;
    out.cliques.reserve(members_list.size());
    out.clique_bits.reserve(members_list.size());
    out.containing.assign(n, {});
    for (const auto& members : members_list) {
        CliqueId id = static_cast<CliqueId>(out.cliques.size());
        for (int v : members) out.containing[v].push_back(id);
        out.cliques.push_back(VertexSet(members));
        out.clique_bits.push_back(out.cliques.back().bits(n));
    }
    const long long bound = static_cast<long long>(n) * n * n;
    if (static_cast<long long>(out.cliques.size()) > bound)
        throw StructureError("more max cliques than the cubic bound allows");
    return out;
}

CliqueTree build_clique_tree(const Graph& g, MaxCliqueSet cliques) {
    if (cliques.vertex_count != g.vertex_count())
        throw std::invalid_argument("clique set does not belong to this graph");
    const int count = static_cast<int>(cliques.cliques.size());
    CliqueTree tree;
    tree.adjacent.assign(count, {});
    for (CliqueId a = 0; a < count; ++a) {
        for (CliqueId b = a + 1; b < count; ++b) {
            Bitset uni = cliques.clique_bits[a] | cliques.clique_bits[b];
            bool edge = false;
            for (int v : cliques.cliques[a]) {
                if (!cliques.clique_bits[b].test(v)) continue;
                bool witness = true;
                for (CliqueId c : cliques.containing[v]) {
                    if (c == a || c == b) continue;
                    if (cliques.clique_bits[c].is_subset_of(uni)) {
                        witness = false;
                        break;
                    }
                }
                if (witness) {
                    edge = true;
                    break;
                }
            }
            if (edge) {
                tree.edges.emplace_back(a, b);
                tree.adjacent[a].push_back(b);
                tree.adjacent[b].push_back(a);
            }
        }
    }
    if (static_cast<int>(tree.edges.size()) != count - 1)
        throw StructureError("clique adjacency criterion did not produce a tree");
    // connectivity
    std::vector<char> seen(count, 0);
    std::vector<CliqueId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        CliqueId v = stack.back();
        stack.pop_back();
        for (CliqueId u : tree.adjacent[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    if (reached != count) throw StructureError("clique adjacency criterion did not produce a tree");
    tree.cliques = std::move(cliques);
    return tree;
}

bool is_star_clique(const CliqueTree& t, CliqueId b) {
    for (int v : t.cliques.cliques[b]) {
        int hits = 0;
        for (CliqueId a : t.adjacent[b])
            if (t.cliques.clique_bits[a].test(v) && ++hits > 1) return false;
    }
    return true;
}

bool is_fork_clique(const CliqueTree& t, CliqueId b) {
    if (t.degree(b) != 3) return false;
    const auto& nb = t.adjacent[b];
    for (int v : t.cliques.cliques[b]) {
        const auto& in = t.cliques.containing[v];
        if (in.size() != 3) return false;
        for (CliqueId c : in)
            if (c != b && std::find(nb.begin(), nb.end(), c) == nb.end()) return false;
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            std::vector<CliqueId> want{b, nb[i], nb[j]};
            std::sort(want.begin(), want.end());
            bool witnessed = false;
            for (int v : t.cliques.cliques[b])
                if (t.cliques.containing[v] == want) {
                    witnessed = true;
                    break;
                }
            if (!witnessed) return false;
        }
    }
    return true;
}

std::vector<CliqueId> leaves(const CliqueTree& t) {
    if (t.node_count() == 1) return {0};
    std::vector<CliqueId> out;
    for (CliqueId a = 0; a < t.node_count(); ++a)
        if (t.degree(a) == 1) out.push_back(a);
    return out;
}

RootedCliqueTree root_at(const CliqueTree& t, CliqueId r) {
    if (r < 0 || r >= t.node_count()) throw std::invalid_argument("root id out of range");
    if (t.node_count() > 1 && t.degree(r) != 1)
        throw std::invalid_argument("root must be a leaf of the clique tree");
    RootedCliqueTree out;
    out.root = r;
    out.parent.assign(t.node_count(), -1);
    out.children.assign(t.node_count(), {});
    std::vector<char> seen(t.node_count(), 0);
    std::vector<CliqueId> stack{r};
    seen[r] = 1;
    while (!stack.empty()) {
        CliqueId v = stack.back();
        stack.pop_back();
        for (CliqueId u : t.adjacent[v]) {
            if (seen[u]) continue;
            seen[u] = 1;
            out.parent[u] = v;
            out.children[v].push_back(u);
            stack.push_back(u);
        }
    }
    for (auto& ch : out.children) std::sort(ch.begin(), ch.end());
    out.tree = t;
    return out;
}

}  // namespace ccf
