#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace wildclass {

struct Arc {
    int src;
    int dst;
    int color;  // positive

    auto operator<=>(const Arc&) const = default;
};

// Directed multigraph with integer edge colors, nodes 0..N-1. Parallel arcs
// between the same ordered node pair are allowed only when their colors
// differ, so the arc list is duplicate-free and kept sorted (canonical).
class ColoredDigraph {
public:
    ColoredDigraph(int n, std::vector<Arc> arcs,
                   std::map<int, std::string> node_labels = {});

    int num_nodes() const { return n_; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::map<int, std::string>& node_labels() const { return labels_; }

    int out_degree(int v) const { return out_degree_[v]; }
    int in_degree(int v) const { return in_degree_[v]; }
    bool has_arcs(int v) const { return out_degree_[v] + in_degree_[v] > 0; }

    // Labels are export metadata only; equality and isomorphism ignore them.
    bool operator==(const ColoredDigraph& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

private:
    int n_;
    std::vector<Arc> arcs_;  // sorted, unique
    std::vector<int> out_degree_;
    std::vector<int> in_degree_;
    std::map<int, std::string> labels_;
};

// Relabels nodes: node i becomes perm[i]; labels follow their nodes.
ColoredDigraph relabel(const ColoredDigraph& d, const std::vector<int>& perm);

}  // namespace wildclass
