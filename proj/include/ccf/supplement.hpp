#ifndef CCF_SUPPLEMENT_HPP
#define CCF_SUPPLEMENT_HPP

#include <compare>
#include <string>
#include <vector>

#include "ccf/clique_tree.hpp"

namespace ccf {

// Per-node color of the supplemented clique tree, compared lexicographically:
//   in0children  - vertices of the clique lying in no child clique
//   inparent     - vertices shared with the parent clique (0 at the root)
//   in2children  - vertices lying in (at least) two children; positive exactly
//                  for fork cliques
struct ColorTriple {
    int in0children = 0;
    int inparent = 0;
    int in2children = 0;
    auto operator<=>(const ColorTriple&) const = default;
};

std::string to_string(const ColorTriple& c);

ColorTriple color_of(const RootedCliqueTree& r, CliqueId a);

struct SupplementedCliqueTree {
    RootedCliqueTree rooted;
    std::vector<ColorTriple> colors;  // per clique id
    int n = 0;                        // vertex count of the source graph
};

SupplementedCliqueTree build_supplemented(const RootedCliqueTree& r, int n);

}  // namespace ccf

#endif
