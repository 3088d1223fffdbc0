#include "ccf/tree_canon.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace ccf {

namespace {

void append_be32(Code& c, std::uint32_t x) {
    c.push_back(static_cast<char>(x >> 24));
    c.push_back(static_cast<char>(x >> 16));
    c.push_back(static_cast<char>(x >> 8));
    c.push_back(static_cast<char>(x));
}

Code assemble_code(const ColorTriple& color, const std::vector<const Code*>& child_codes) {
    std::size_t total = 16;
    for (const Code* c : child_codes) total += c->size();
    Code out;
    out.reserve(total);
    append_be32(out, static_cast<std::uint32_t>(total));
    append_be32(out, static_cast<std::uint32_t>(color.in0children));
    append_be32(out, static_cast<std::uint32_t>(color.inparent));
    append_be32(out, static_cast<std::uint32_t>(color.in2children));
    for (const Code* c : child_codes) out += *c;
    return out;
}

// Nodes ordered so children come before parents: plain reverse BFS from the root.
std::vector<CliqueId> bottom_up_order(const RootedCliqueTree& r) {
    std::vector<CliqueId> bfs{r.root};
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (CliqueId ch : r.children[bfs[i]]) bfs.push_back(ch);
    std::reverse(bfs.begin(), bfs.end());
    return bfs;
}

struct CodeTable {
    std::vector<Code> code;                          // per clique id
    std::vector<std::vector<CliqueId>> kids_sorted;  // canonical child order
};

CodeTable compute_codes(const SupplementedCliqueTree& s) {
    const int count = s.rooted.tree.node_count();
    CodeTable t;
    t.code.assign(count, {});
    t.kids_sorted.assign(count, {});
    for (CliqueId a : bottom_up_order(s.rooted)) {
        auto kids = s.rooted.children[a];
        std::stable_sort(kids.begin(), kids.end(), [&](CliqueId x, CliqueId y) {
            if (s.colors[x] != s.colors[y]) return s.colors[x] < s.colors[y];
            return t.code[x] < t.code[y];
        });
        std::vector<const Code*> child_codes;
        child_codes.reserve(kids.size());
        for (CliqueId ch : kids) child_codes.push_back(&t.code[ch]);
        t.code[a] = assemble_code(s.colors[a], child_codes);
        t.kids_sorted[a] = std::move(kids);
    }
    return t;
}

}  // namespace

Code canonical_code(const SupplementedCliqueTree& s, CliqueId node) {
    if (node < 0 || node >= s.rooted.tree.node_count())
        throw std::invalid_argument("clique id out of range");
    return compute_codes(s).code[node];
}

CanonColoredTree canonize_tree(const SupplementedCliqueTree& s) {
    const int count = s.rooted.tree.node_count();
    CodeTable codes = compute_codes(s);

    CanonColoredTree t;
    t.node_count = count;
    t.n = s.n;
    t.parent.assign(count, -1);
    t.children.assign(count, {});
    t.color.resize(count);
    t.back_map.assign(count, -1);

    // preorder ids under the canonical child order
    std::vector<std::pair<CliqueId, int>> stack{{s.rooted.root, -1}};  // (source node, canon parent)
    int next_id = 0;
    while (!stack.empty()) {
        auto [src, canon_parent] = stack.back();
        stack.pop_back();
        int id = next_id++;
        t.parent[id] = canon_parent;
        t.color[id] = s.colors[src];
        t.back_map[id] = src;
        if (canon_parent != -1) t.children[canon_parent].push_back(id);
        const auto& kids = codes.kids_sorted[src];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, id);
    }

    // memoized post-order: children before parents
    t.post_order.reserve(count);
    std::vector<std::pair<int, std::size_t>> walk{{0, 0}};
    while (!walk.empty()) {
        auto& [node, next_child] = walk.back();
        if (next_child < t.children[node].size()) {
            walk.emplace_back(t.children[node][next_child++], 0);
        } else {
            t.post_order.push_back(node);
            walk.pop_back();
        }
    }
    return t;
}

namespace {

int next_sibling(const CanonColoredTree& t, int node) {
    int p = t.parent[node];
    if (p == -1) return -1;
    const auto& ch = t.children[p];
    for (std::size_t i = 0; i + 1 < ch.size(); ++i)
        if (ch[i] == node) return ch[i + 1];
    return -1;
}

}  // namespace

StepResult traversal_step(const CanonColoredTree& t, TraversalState& st) {
    const int node = st.node;
    const bool backtracking = st.last == Move::up;
    if (!backtracking && !t.children[node].empty()) {
        st.node = t.children[node][0];
        st.last = Move::down;
        return {-1, false};
    }
    // this is the last visit of node: the next move is not "down"
    int sib = next_sibling(t, node);
    if (sib != -1) {
        st.node = sib;
        st.last = Move::over;
        return {node, false};
    }
    int p = t.parent[node];
    if (p != -1) {
        st.node = p;
        st.last = Move::up;
        return {node, false};
    }
    return {node, true};
}

std::vector<int> post_order_logspace(const CanonColoredTree& t) {
    std::vector<int> out;
    out.reserve(t.node_count);
    TraversalState st;
    st.node = t.root();
    while (true) {
        StepResult r = traversal_step(t, st);
        if (r.emitted != -1) out.push_back(r.emitted);
        if (r.done) break;
    }
    return out;
}

}  // namespace ccf
