#ifndef CCF_TESTS_FIXTURES_HPP
#define CCF_TESTS_FIXTURES_HPP

#include <utility>
#include <vector>

#include "ccf/reconstruct.hpp"
#include "ccf/tree_canon.hpp"

namespace fixtures {

// Seven-node canon whose reconstruction trace is known in full: root r with a
// single fork child f; f's children are the leaf c1 (first) and c5 (second);
// c5 has leaf children c2, c3, c4. Node ids are preorder ranks:
//   r=0  f=1  c1=2  c5=3  c2=4  c3=5  c4=6
inline ccf::CanonColoredTree t_paper() {
    ccf::CanonColoredTree t;
    t.node_count = 7;
    t.n = 22;
    t.parent = {-1, 0, 1, 1, 3, 3, 3};
    t.children = {{1}, {2, 3}, {}, {4, 5, 6}, {}, {}, {}};
    t.color = {{3, 0, 0}, {0, 3, 1}, {6, 3, 0}, {4, 2, 0}, {3, 1, 0}, {2, 1, 0}, {5, 3, 0}};
    t.post_order = {2, 4, 5, 6, 3, 1, 0};  // c1 c2 c3 c4 c5 f r
    t.back_map = {0, 1, 2, 3, 4, 5, 6};
    return t;
}

struct GoldenRow {
    int position;  // 1-based index in the post-order sequence
    const char* rule;
    std::vector<std::pair<int, int>> intervals;
};

inline std::vector<GoldenRow> t_paper_rows() {
    return {
        {1, "2c", {{1, 6}}},
        {2, "2c", {{7, 9}}},
        {3, "2c", {{10, 11}}},
        {4, "2c", {{12, 16}}},
        {5, "2a", {{9, 9}}},
        {5, "2a", {{11, 11}}},
        {5, "2a", {{14, 16}}},
        {5, "2d", {{4, 4}, {17, 19}}},
        {6, "1", {{4, 6}, {19, 19}}},
        {7, "2b", {{5, 6}, {19, 19}}},
        {7, "2c", {{20, 22}}},
    };
}

inline std::vector<int> t_paper_count_trace() { return {6, 9, 11, 16, 19, 19, 22}; }

inline std::vector<std::vector<int>> t_paper_clique_members() {
    return {
        {1, 2, 3, 4, 5, 6},
        {7, 8, 9},
        {10, 11},
        {12, 13, 14, 15, 16},
        {4, 9, 11, 14, 15, 16, 17, 18, 19},
        {4, 5, 6, 19},
        {5, 6, 19, 20, 21, 22},
    };
}

// Checks the full (case, intervals, count) trace of a build against the table.
inline bool matches_golden_trace(const ccf::BuildResult& b) {
    auto rows = t_paper_rows();
    std::size_t next = 0;
    for (std::size_t pos = 0; pos < b.steps.size(); ++pos) {
        for (const auto& step : b.steps[pos]) {
            if (next >= rows.size()) return false;
            const auto& row = rows[next++];
            if (row.position != static_cast<int>(pos) + 1) return false;
            if (step.rule != row.rule) return false;
            if (step.intervals != row.intervals) return false;
        }
    }
    if (next != rows.size()) return false;
    if (b.count_trace != t_paper_count_trace()) return false;
    auto members = t_paper_clique_members();
    if (b.cliques.size() != members.size()) return false;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (b.cliques[i].members() != members[i]) return false;
    return b.final_count == 22;
}

}  // namespace fixtures

#endif
