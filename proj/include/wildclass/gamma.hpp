#pragma once

#include "wildclass/digraph.hpp"
#include "wildclass/group.hpp"

namespace wildclass {

// The group-to-colored-digraph construction. Nodes are the n group elements
// followed by ordered triples (u,v,w); for every product u o v = w the
// digraph has arcs
//     (u, (u,v,w))  color 1
//     (v, (u,v,w))  color 2
//     ((u,v,w), w)  color 3
// Faithful mode keeps all n^3 triple nodes (invalid ones stay isolated);
// pruned mode keeps only the n^2 valid triples. Arc count is 3n^2 either way.
struct GammaGraph {
    ColoredDigraph digraph;
    int group_order;
    bool pruned;
    // triple_node[u][v] = node index of the valid triple (u, v, u o v)
    std::vector<std::vector<int>> triple_node;

    int element_node(int a) const { return a; }
};

GammaGraph gamma(const FiniteGroup& g, bool pruned = false);

// Reconstructs a group from any digraph in the image of gamma (either mode,
// up to node relabeling). Group nodes are recognized by the degree profile
// (out-degree 2n, in-degree n for a single consistent n); each valid triple
// node contributes one table entry u o v = w read off its color-1/2/3 arcs.
// The result is validated as a group. Throws "not_gamma_image" with a reason
// when the digraph cannot be a gamma image.
FiniteGroup gamma_inverse(const ColoredDigraph& d);

}  // namespace wildclass
