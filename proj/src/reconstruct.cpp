#include "ccf/reconstruct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ccf/errors.hpp"

namespace ccf {

NumberClique::NumberClique(std::vector<std::pair<int, int>> raw) {
    std::erase_if(raw, [](const auto& p) { return p.first > p.second; });
    std::sort(raw.begin(), raw.end());
    for (auto [lo, hi] : raw) {
        if (!intervals_.empty() && lo <= intervals_.back().second + 1)
            intervals_.back().second = std::max(intervals_.back().second, hi);
        else
            intervals_.emplace_back(lo, hi);
    }
}

std::vector<int> NumberClique::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (auto [lo, hi] : intervals_)
        for (int x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

int NumberClique::size() const {
    int s = 0;
    for (auto [lo, hi] : intervals_) s += hi - lo + 1;
    return s;
}

bool NumberClique::contains(int x) const {
    for (auto [lo, hi] : intervals_)
        if (lo <= x && x <= hi) return true;
    return false;
}

NodeFlags flags(const CanonColoredTree& t, int node) {
    bool fork = t.color[node].in2children > 0;
    bool child2 = false;
    int p = t.parent[node];
    if (p != -1 && t.color[p].in2children > 0) {
        const auto& pc = t.children[p];
        child2 = pc.size() >= 2 && pc[1] == node;
    }
    return {fork, child2};
}

namespace {

int count_increment(const CanonColoredTree& t, int node) {
    NodeFlags f = flags(t, node);
    if (f.is_fork_clique) return 0;
    if (f.is_fork_child2) return t.color[node].in0children - t.color[t.parent[node]].in2children;
    return t.color[node].in0children;
}

}  // namespace

int count_after(const CanonColoredTree& t, int node, CountMode mode) {
    if (mode == CountMode::memoized) {
        int c = 0;
        for (int m : t.post_order) {
            c += count_increment(t, m);
            if (m == node) return c;
        }
        throw std::invalid_argument("node not in post order");
    }
    // replay the automaton from scratch, keeping only the traversal state
    TraversalState st;
    st.node = t.root();
    while (true) {
        StepResult r = traversal_step(t, st);
        if (r.emitted != -1) {
            st.count += count_increment(t, r.emitted);
            if (r.emitted == node) return st.count;
        }
        if (r.done) throw std::invalid_argument("node not in post order");
    }
}

BuildResult build_cliques(const CanonColoredTree& t, CountMode mode) {
    const std::vector<int> seq =
        mode == CountMode::memoized ? t.post_order : post_order_logspace(t);

    std::vector<int> memo(t.node_count, -1);
    auto count_of = [&](int node) -> int {
        if (mode == CountMode::memoized) {
            if (memo[node] < 0) throw std::logic_error("count of an unvisited node requested");
            return memo[node];
        }
        return count_after(t, node, CountMode::logspace);
    };

    BuildResult out;
    out.cliques.reserve(seq.size());
    out.steps.reserve(seq.size());
    out.count_trace.reserve(seq.size());
    int count = 0;

    for (int m : seq) {
        std::vector<CaseApplication> steps;
        std::vector<std::pair<int, int>> raw;
        auto add = [&](const char* rule, int subject, std::vector<std::pair<int, int>> ivals) {
            raw.insert(raw.end(), ivals.begin(), ivals.end());
            steps.push_back({rule, subject, std::move(ivals)});
        };

        const int count_before = count;
        const NodeFlags f = flags(t, m);
        if (f.is_fork_clique) {
            if (t.children[m].size() != 2) throw StructureError("fork node without exactly two children");
            int first = t.children[m][0], second = t.children[m][1];
            int c1 = count_of(first), c2 = count_of(second);
            add("1", m,
                {{c1 - t.color[first].inparent + 1, c1},
                 {c2 - t.color[second].inparent + t.color[m].in2children + 1, c2}});
        } else {
            for (int mj : t.children[m]) {
                if (t.color[mj].in2children > 0) {  // child is a fork clique
                    if (t.children[mj].size() != 2)
                        throw StructureError("fork node without exactly two children");
                    int a = t.children[mj][0], b = t.children[mj][1];
                    int ca = count_of(a), cb = count_of(b);
                    int shift = t.color[mj].in2children;
                    add("2b", mj,
                        {{ca - t.color[a].inparent + shift + 1, ca},
                         {cb - t.color[b].inparent + shift + 1, cb}});
                } else {
                    int cj = count_of(mj);
                    add("2a", mj, {{cj - t.color[mj].inparent + 1, cj}});
                }
            }
            if (f.is_fork_child2) {
                int p = t.parent[m];
                int sibling = t.children[p][0];
                int cs = count_of(sibling);
                int in2p = t.color[p].in2children;
                count += t.color[m].in0children - in2p;
                add("2d", m,
                    {{cs - t.color[sibling].inparent + 1, cs - t.color[sibling].inparent + in2p},
                     {count - t.color[m].in0children + in2p + 1, count}});
            } else {
                count += t.color[m].in0children;
                add("2c", m, {{count - t.color[m].in0children + 1, count}});
            }
        }
        if (count < count_before || count > t.n)
            throw StructureError("vertex counter left its admissible range");
        memo[m] = count;

        // bounds, and disjointness of the contributing slices
        std::vector<std::pair<int, int>> nonempty;
        for (auto [lo, hi] : raw) {
            if (lo > hi) continue;  // empty slices are legal and contribute nothing
            if (lo < 1 || hi > t.n) throw StructureError("emitted interval leaves [1..n]");
            nonempty.emplace_back(lo, hi);
        }
        std::sort(nonempty.begin(), nonempty.end());
        for (std::size_t i = 1; i < nonempty.size(); ++i)
            if (nonempty[i].first <= nonempty[i - 1].second)
                throw StructureError("emitted slices of one clique overlap");

        NumberClique clique(raw);
        if (clique.empty()) throw StructureError("emitted clique is empty");
        out.cliques.push_back(std::move(clique));
        out.steps.push_back(std::move(steps));
        out.count_trace.push_back(count);
    }

    if (count != t.n) throw StructureError("final count does not equal the vertex count");
    Bitset seen(t.n + 1);
    for (const auto& c : out.cliques)
        for (auto [lo, hi] : c.intervals())
            for (int x = lo; x <= hi; ++x) seen.set(x);
    if (seen.count() != t.n) throw StructureError("emitted cliques do not cover [1..n]");
    out.final_count = count;
    return out;
}

OrderedGraph assemble_ordered_copy(const std::vector<NumberClique>& cliques, int n) {
    std::set<std::pair<int, int>> es;
    for (const auto& c : cliques) {
        if (c.empty()) continue;
        if (c.min() < 1 || c.max() > n) throw std::invalid_argument("clique member outside [1..n]");
        auto mem = c.members();
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j) es.emplace(mem[i], mem[j]);
    }
    return OrderedGraph{n, {es.begin(), es.end()}};
}

WitnessBijection build_witness(const SupplementedCliqueTree& s, const CanonColoredTree& t,
                               const BuildResult& b) {
    const int n = s.n;
    const auto& cs = s.rooted.tree.cliques;
    const int clique_count = s.rooted.tree.node_count();
    if (static_cast<int>(t.back_map.size()) != clique_count)
        throw std::invalid_argument("canon does not correspond to this supplemented tree");

    // ancestor counts: cliques on the root path (the clique itself included)
    // that contain the vertex
    WitnessBijection w;
    w.clique_count = clique_count;
    auto anc = [&](CliqueId a, int v) {
        int c = 0;
        for (CliqueId x = a; x != -1; x = s.rooted.parent[x])
            if (cs.clique_bits[x].test(v)) ++c;
        return c;
    };
    for (CliqueId a = 0; a < clique_count; ++a)
        for (int v : cs.cliques[a]) w.anc_counts[{a, v}] = anc(a, v);

    w.h.assign(n, 0);
    Bitset used(n + 1);
    for (std::size_t k = 0; k < t.post_order.size(); ++k) {
        int m = t.post_order[k];
        CliqueId a = t.back_map[m];
        std::vector<int> fresh;
        for (int x : b.cliques[k].members())
            if (!used.test(x)) fresh.push_back(x);
        std::vector<int> fresh_vertices;
        for (int v : cs.cliques[a])
            if (w.h[v] == 0) fresh_vertices.push_back(v);
        if (flags(t, m).is_fork_clique && !fresh.empty())
            throw std::logic_error("fork clique introduced fresh numbers");
        if (fresh.size() != fresh_vertices.size())
            throw std::logic_error("fresh numbers and fresh vertices disagree");
        std::sort(fresh_vertices.begin(), fresh_vertices.end(), [&](int x, int y) {
            int ax = w.anc_counts.at({a, x}), ay = w.anc_counts.at({a, y});
            return ax != ay ? ax < ay : x < y;
        });
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            w.h[fresh_vertices[i]] = fresh[i];
            used.set(fresh[i]);
        }
    }

    for (int v = 0; v < n; ++v)
        if (w.h[v] == 0) throw std::logic_error("witness left a vertex unmapped");

    // image of every transferred clique must be the emitted clique
    for (std::size_t k = 0; k < t.post_order.size(); ++k) {
        int m = t.post_order[k];
        CliqueId a = t.back_map[m];
        std::vector<int> image;
        for (int v : cs.cliques[a]) image.push_back(w.h[v]);
        std::sort(image.begin(), image.end());
        if (image != b.cliques[k].members())
            throw std::logic_error("witness does not map a source clique onto its copy");

        const NodeFlags f = flags(t, m);
        const int cnt = b.count_trace[k];
        const ColorTriple& col = t.color[m];
        auto slice = [&](int threshold, int lo) {
            std::vector<int> got;
            for (int v : cs.cliques[a])
                if (w.anc_counts.at({a, v}) > threshold) got.push_back(w.h[v]);
            std::sort(got.begin(), got.end());
            std::vector<int> want;
            for (int x = lo; x <= cnt; ++x) want.push_back(x);
            return got == want;
        };
        if (!f.is_fork_clique && !f.is_fork_child2) {
            // monotone ancestor counts along the number order
            auto by_number = cs.cliques[a].ids();
            std::sort(by_number.begin(), by_number.end(),
                      [&](int x, int y) { return w.h[x] < w.h[y]; });
            for (std::size_t i = 1; i < by_number.size(); ++i)
                if (w.anc_counts.at({a, by_number[i - 1]}) > w.anc_counts.at({a, by_number[i]}))
                    throw std::logic_error("witness breaks ancestor-count monotonicity");
            if (!slice(1, cnt - col.inparent + 1))
                throw std::logic_error("parent slice of a clique is not the top interval");
        } else if (f.is_fork_child2) {
            int in2p = t.color[t.parent[m]].in2children;
            if (!slice(2, cnt - col.inparent + in2p + 1))
                throw std::logic_error("grandparent slice of a second fork child is misplaced");
        }
    }
    return w;
}

}  // namespace ccf
