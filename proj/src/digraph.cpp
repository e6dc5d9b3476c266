#include "wildclass/digraph.hpp"

#include <algorithm>
#include <string>

#include "wildclass/error.hpp"

namespace wildclass {

ColoredDigraph::ColoredDigraph(int n, std::vector<Arc> arcs,
                               std::map<int, std::string> node_labels)
    : n_(n), labels_(std::move(node_labels)) {
    if (n < 0)
        throw error("bad_size", "node count must be non-negative");
    for (const Arc& a : arcs) {
        if (a.src < 0 || a.src >= n || a.dst < 0 || a.dst >= n)
            throw error("out_of_range",
                        "arc endpoint outside 0.." + std::to_string(n - 1),
                        {a.src, a.dst});
        if (a.color < 1)
            throw error("bad_color", "arc color must be positive",
                        {a.src, a.dst, a.color});
    }
    std::sort(arcs.begin(), arcs.end());
    auto dup = std::adjacent_find(arcs.begin(), arcs.end());
    if (dup != arcs.end())
        throw error("duplicate_arc",
                    "parallel arcs must have distinct colors: " +
                        std::to_string(dup->src) + "->" + std::to_string(dup->dst) +
                        " color " + std::to_string(dup->color),
                    {dup->src, dup->dst, dup->color});
    for (auto& [node, label] : labels_)
        if (node < 0 || node >= n)
            throw error("out_of_range", "label for nonexistent node", {node});
    arcs_ = std::move(arcs);
    out_degree_.assign(n_, 0);
    in_degree_.assign(n_, 0);
    for (const Arc& a : arcs_) {
        ++out_degree_[a.src];
        ++in_degree_[a.dst];
    }
}

ColoredDigraph relabel(const ColoredDigraph& d, const std::vector<int>& perm) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size());
    for (const Arc& a : d.arcs())
        arcs.push_back({perm[a.src], perm[a.dst], a.color});
    std::map<int, std::string> labels;
    for (const auto& [node, label] : d.node_labels())
        labels[perm[node]] = label;
    return ColoredDigraph(d.num_nodes(), std::move(arcs), std::move(labels));
}

}  // namespace wildclass
