#pragma once

#include <optional>
#include <vector>

#include "wildclass/digraph.hpp"
#include "wildclass/graph.hpp"
#include "wildclass/lattice.hpp"
#include "wildclass/poset.hpp"

namespace wildclass {

// A bijection between the index sets of two structures, map[i] = image of i.
using Isomorphism = std::vector<int>;

struct RefinementPartition {
    std::vector<int> class_of;  // node -> class id
    int num_classes;

    // sorted class sizes; equal for isomorphic inputs
    std::vector<int> class_size_multiset() const;
};

// Iterated signature refinement: two nodes end in the same class only if
// their multisets of (direction, arc color, neighbor class) agree, starting
// from the given initial classes (all-equal when absent). Class ids are
// assigned in signature-sorted order, so they are isomorphism-invariant.
RefinementPartition color_refine(const ColoredDigraph& d,
                                 const std::vector<int>& initial = {});

// Color- and direction-preserving digraph isomorphism via refinement plus
// backtracking. Branches on the least unmapped node with ascending target
// candidates, so the first mapping found (and returned) is the
// lexicographically least one; every returned mapping is post-verified
// arc by arc.
std::optional<Isomorphism> digraph_iso(const ColoredDigraph& a, const ColoredDigraph& b);

// Adapter: each undirected edge becomes two opposite arcs of color 1.
std::optional<Isomorphism> graph_iso(const UndirectedGraph& a, const UndirectedGraph& b);

// Adapter: digraph isomorphism of the Hasse cover digraphs, which for
// finite posets coincides with order isomorphism.
std::optional<Isomorphism> poset_iso(const FinitePoset& a, const FinitePoset& b);

// Lattice isomorphism = order isomorphism of the induced posets; any
// returned mapping transports the meet and join tables exactly.
std::optional<Isomorphism> lattice_iso(const FiniteLattice& a, const FiniteLattice& b);

// --- independent verification ----------------------------------------------

bool verify_digraph_iso(const ColoredDigraph& a, const ColoredDigraph& b, const Isomorphism& f);
bool verify_graph_iso(const UndirectedGraph& a, const UndirectedGraph& b, const Isomorphism& f);
bool verify_poset_iso(const FinitePoset& a, const FinitePoset& b, const Isomorphism& f);
// Checks meet/join transport on all pairs.
bool verify_lattice_iso(const FiniteLattice& a, const FiniteLattice& b, const Isomorphism& f);

}  // namespace wildclass
