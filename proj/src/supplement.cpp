#include "ccf/supplement.hpp"

#include <stdexcept>

#include "ccf/errors.hpp"

namespace ccf {

std::string to_string(const ColorTriple& c) {
    return "(" + std::to_string(c.in0children) + "," + std::to_string(c.inparent) + "," +
           std::to_string(c.in2children) + ")";
}

ColorTriple color_of(const RootedCliqueTree& r, CliqueId a) {
    const auto& cs = r.tree.cliques;
    if (a < 0 || a >= r.tree.node_count()) throw std::invalid_argument("clique id out of range");
    ColorTriple c;
    const CliqueId p = r.parent[a];
    for (int v : cs.cliques[a]) {
        int in_children = 0;
        for (CliqueId ch : r.children[a])
            if (cs.clique_bits[ch].test(v)) ++in_children;
        if (in_children == 0) ++c.in0children;
        if (in_children >= 2) ++c.in2children;
        if (in_children > 2) throw StructureError("vertex lies in more than two child cliques");
        if (p != -1 && cs.clique_bits[p].test(v)) ++c.inparent;
    }
    return c;
}

SupplementedCliqueTree build_supplemented(const RootedCliqueTree& r, int n) {
    if (n != r.tree.cliques.vertex_count)
        throw std::invalid_argument("vertex count does not match the clique set");
    SupplementedCliqueTree s;
    s.n = n;
    s.colors.reserve(r.tree.node_count());
    for (CliqueId a = 0; a < r.tree.node_count(); ++a) s.colors.push_back(color_of(r, a));
    s.rooted = r;
    return s;
}

}  // namespace ccf
