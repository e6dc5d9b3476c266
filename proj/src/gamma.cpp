#include "wildclass/gamma.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "wildclass/error.hpp"

namespace wildclass {

GammaGraph gamma(const FiniteGroup& g, bool pruned) {
    int n = g.order();
    // faithful: triples at n + (u*n + v)*n + w; pruned: valid triples packed
    // at n + u*n + v (one per (u,v) since w is determined)
    int num_nodes = pruned ? n + n * n : n + n * n * n;
    std::vector<std::vector<int>> triple_node(n, std::vector<int>(n));
    std::vector<Arc> arcs;
    arcs.reserve(3 * n * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int w = g.op(u, v);
            int t = pruned ? n + u * n + v : n + (u * n + v) * n + w;
            triple_node[u][v] = t;
            arcs.push_back({u, t, 1});
            arcs.push_back({v, t, 2});
            arcs.push_back({t, w, 3});
        }
    return GammaGraph{ColoredDigraph(num_nodes, std::move(arcs)), n, pruned,
                      std::move(triple_node)};
}

FiniteGroup gamma_inverse(const ColoredDigraph& d) {
    int num = d.num_nodes();

    // Group nodes have out-degree 2n and in-degree n; valid triple nodes have
    // out-degree 1 and in-degree 2; everything else must be isolated.
    std::vector<int> group_nodes, triple_nodes;
    int isolated = 0;
    for (int v = 0; v < num; ++v) {
        int od = d.out_degree(v), id = d.in_degree(v);
        if (od == 0 && id == 0)
            ++isolated;
        else if (od == 1 && id == 2)
            triple_nodes.push_back(v);
        else if (id >= 1 && od == 2 * id)
            group_nodes.push_back(v);
        else
            throw error("not_gamma_image",
                        "node " + std::to_string(v) + " has degree profile (out=" +
                            std::to_string(od) + ", in=" + std::to_string(id) +
                            ") which fits no role",
                        {v});
    }

    long long n = static_cast<long long>(group_nodes.size());
    if (n == 0)
        throw error("not_gamma_image", "no candidate group nodes");
    for (int v : group_nodes)
        if (d.out_degree(v) != 2 * n || d.in_degree(v) != n)
            throw error("not_gamma_image",
                        "inconsistent group-node degrees for n=" + std::to_string(n), {v});
    if (static_cast<long long>(triple_nodes.size()) != n * n)
        throw error("not_gamma_image",
                    "expected n^2 triple nodes, found " + std::to_string(triple_nodes.size()));
    if (isolated != 0 && isolated != n * n * n - n * n)
        throw error("not_gamma_image",
                    "isolated node count matches neither faithful nor pruned mode");

    // dense rank of each group node, in node-index order
    std::vector<int> rank(num, -1);
    for (size_t i = 0; i < group_nodes.size(); ++i)
        rank[group_nodes[i]] = static_cast<int>(i);

    // read u o v = w off each triple node's color-1/2/3 arcs
    struct TripleArcs {
        int u = -1, v = -1, w = -1;
    };
    std::map<int, TripleArcs> triples;
    for (int t : triple_nodes)
        triples[t] = TripleArcs{};
    for (const Arc& a : d.arcs()) {
        if (a.color == 1 || a.color == 2) {
            auto it = triples.find(a.dst);
            if (it == triples.end() || rank[a.src] < 0)
                throw error("not_gamma_image", "color-1/2 arc not from group node to triple node",
                            {a.src, a.dst});
            int& slot = a.color == 1 ? it->second.u : it->second.v;
            if (slot != -1)
                throw error("not_gamma_image", "triple node with duplicate color-" +
                                                   std::to_string(a.color) + " arc",
                            {a.dst});
            slot = rank[a.src];
        } else if (a.color == 3) {
            auto it = triples.find(a.src);
            if (it == triples.end() || rank[a.dst] < 0)
                throw error("not_gamma_image", "color-3 arc not from triple node to group node",
                            {a.src, a.dst});
            if (it->second.w != -1)
                throw error("not_gamma_image", "triple node with duplicate color-3 arc", {a.src});
            it->second.w = rank[a.dst];
        } else {
            throw error("not_gamma_image", "unexpected arc color " + std::to_string(a.color));
        }
    }

    int order = static_cast<int>(n);
    std::vector<std::vector<int>> table(order, std::vector<int>(order, -1));
    for (const auto& [t, ta] : triples) {
        if (ta.u < 0 || ta.v < 0 || ta.w < 0)
            throw error("not_gamma_image", "triple node missing one of its three arcs", {t});
        if (table[ta.u][ta.v] != -1)
            throw error("not_gamma_image",
                        "two triple nodes encode the same product", {ta.u, ta.v});
        table[ta.u][ta.v] = ta.w;
    }
    // n^2 triples and no duplicates: the table is complete

    try {
        return FiniteGroup(std::move(table));
    } catch (const error& e) {
        throw error("not_gamma_image",
                    std::string("decoded table violates group axioms (") + e.what() + ")");
    }
}

}  // namespace wildclass
