#include "wildclass/graph.hpp"

#include <algorithm>

#include "wildclass/error.hpp"

namespace wildclass {

UndirectedGraph::UndirectedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n) {
    if (n < 0)
        throw error("bad_size", "vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw error("out_of_range",
                        "edge endpoint outside 0.." + std::to_string(n - 1), {u, v});
        if (u == v)
            throw error("self_loop", "self-loop at vertex " + std::to_string(u), {u});
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw error("duplicate_edge",
                    "duplicate edge {" + std::to_string(dup->first) + "," +
                        std::to_string(dup->second) + "}",
                    {dup->first, dup->second});
    edges_ = std::move(edges);
}

bool UndirectedGraph::has_edge(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

UndirectedGraph relabel(const UndirectedGraph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return UndirectedGraph(g.num_vertices(), std::move(edges));
}

}  // namespace wildclass
