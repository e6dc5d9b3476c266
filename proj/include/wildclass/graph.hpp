#pragma once

#include <utility>
#include <vector>

namespace wildclass {

// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
// (u < v) and sorted, so two graphs compare equal iff they have identical
// vertex counts and edge sets.
class UndirectedGraph {
public:
    // Validates: endpoints in range, no self-loops, no duplicate edges.
    // Throws wildclass::error with codes "out_of_range", "self_loop",
    // "duplicate_edge".
    UndirectedGraph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;

    bool operator==(const UndirectedGraph& other) const = default;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
};

// Relabels vertices: vertex i becomes perm[i]. perm must be a permutation
// of 0..n-1.
UndirectedGraph relabel(const UndirectedGraph& g, const std::vector<int>& perm);

}  // namespace wildclass
