#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wildclass/digraph.hpp"
#include "wildclass/graph.hpp"
#include "wildclass/lattice.hpp"
#include "wildclass/poset.hpp"

namespace wildclass {

// Directed incidence graph: one node per vertex, one pair node per edge,
// arcs (p_e, v_i) and (p_e, v_j) for each edge e = {i,j}. Node layout:
// vertices 0..n-1, pair nodes n..n+m-1 in sorted edge order. All arcs
// color 1.
ColoredDigraph incidence(const UndirectedGraph& g);

// Extended incidence graph: the incidence graph plus one atom a_i per
// vertex, one coatom b_e per edge, and global Inf/Sup, with arcs
//   (Sup, b_e), (b_e, p_e), (p_e, v_i), (p_e, v_j), (v_i, a_i), (a_i, Inf).
// Node layout: v_i = i, a_i = n+i, p_e = 2n+e, b_e = 2n+m+e, Inf = 2n+2m,
// Sup = 2n+2m+1 (edges indexed in sorted order). 2n+2m+2 nodes, 4m+2n arcs,
// acyclic by construction.
struct ExtendedIncidenceGraph {
    ColoredDigraph digraph;
    int n;  // source graph vertices
    int m;  // source graph edges
    std::vector<std::pair<int, int>> edge_of_pair_node;  // by edge index

    int v_node(int i) const { return i; }
    int a_node(int i) const { return n + i; }
    int p_node(int e) const { return 2 * n + e; }
    int b_node(int e) const { return 2 * n + m + e; }
    int inf_node() const { return 2 * n + 2 * m; }
    int sup_node() const { return 2 * n + 2 * m + 1; }

    // "v3", "a1", "p{1,2}", "b{1,2}", "Inf", "Sup" (1-based vertex names)
    std::string role_name(int node) const;
};

ExtendedIncidenceGraph extended_incidence(const UndirectedGraph& g);

// Orders a DAG by downward reachability: x <= y iff there is a directed
// path from y to x (reflexive). With force_bounds = (bottom, top), the two
// named nodes are additionally placed below / above every element. Throws
// "cycle" with a witness node sequence if d is not acyclic.
FinitePoset dag_to_poset(const ColoredDigraph& d,
                         std::optional<std::pair<int, int>> force_bounds = std::nullopt);

// Meet = greatest common lower bound, join = least common upper bound,
// computed by exhaustive bound enumeration. Throws "no_meet" / "no_join"
// with the offending pair; that error doubles as the is-lattice witness.
FiniteLattice poset_to_lattice(const FinitePoset& p);

// The induced order: a <= b iff a ^ b = a. Inverse of poset_to_lattice.
FinitePoset lattice_to_poset(const FiniteLattice& l);

// Convenience: extended incidence lattice of a graph, with Inf/Sup forced
// as the global bounds.
FiniteLattice extended_incidence_lattice(const UndirectedGraph& g);

}  // namespace wildclass
