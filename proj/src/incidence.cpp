#include "wildclass/incidence.hpp"

#include <algorithm>
#include <string>

#include "wildclass/error.hpp"

namespace wildclass {

ColoredDigraph incidence(const UndirectedGraph& g) {
    int n = g.num_vertices();
    int m = g.num_edges();
    std::vector<Arc> arcs;
    arcs.reserve(2 * m);
    for (int e = 0; e < m; ++e) {
        auto [i, j] = g.edges()[e];
        arcs.push_back({n + e, i, 1});
        arcs.push_back({n + e, j, 1});
    }
    return ColoredDigraph(n + m, std::move(arcs));
}

ExtendedIncidenceGraph extended_incidence(const UndirectedGraph& g) {
    int n = g.num_vertices();
    if (n < 1)
        throw error("bad_size", "extended incidence needs at least one vertex");
    int m = g.num_edges();
    ExtendedIncidenceGraph x{ColoredDigraph(0, {}), n, m, g.edges()};
    std::vector<Arc> arcs;
    arcs.reserve(4 * m + 2 * n);
    for (int e = 0; e < m; ++e) {
        auto [i, j] = g.edges()[e];
        arcs.push_back({x.sup_node(), x.b_node(e), 1});
        arcs.push_back({x.b_node(e), x.p_node(e), 1});
        arcs.push_back({x.p_node(e), x.v_node(i), 1});
        arcs.push_back({x.p_node(e), x.v_node(j), 1});
    }
    for (int i = 0; i < n; ++i) {
        arcs.push_back({x.v_node(i), x.a_node(i), 1});
        arcs.push_back({x.a_node(i), x.inf_node(), 1});
    }
    std::map<int, std::string> labels;
    for (int node = 0; node < 2 * n + 2 * m + 2; ++node)
        labels[node] = x.role_name(node);
    x.digraph = ColoredDigraph(2 * n + 2 * m + 2, std::move(arcs), std::move(labels));
    return x;
}

std::string ExtendedIncidenceGraph::role_name(int node) const {
    if (node < n)
        return "v" + std::to_string(node + 1);
    if (node < 2 * n)
        return "a" + std::to_string(node - n + 1);
    if (node < 2 * n + m) {
        auto [i, j] = edge_of_pair_node[node - 2 * n];
        return "p{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
    }
    if (node < 2 * n + 2 * m) {
        auto [i, j] = edge_of_pair_node[node - 2 * n - m];
        return "b{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
    }
    return node == inf_node() ? "Inf" : "Sup";
}

FinitePoset dag_to_poset(const ColoredDigraph& d,
                         std::optional<std::pair<int, int>> force_bounds) {
    int n = d.num_nodes();

    std::vector<std::vector<int>> out(n);
    for (const Arc& a : d.arcs())
        out[a.src].push_back(a.dst);

    // cycle check with an explicit witness path
    {
        std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
        std::vector<int> stack, pos_in_stack(n, -1);
        auto dfs = [&](auto&& self, int v) -> std::vector<int> {
            state[v] = 1;
            pos_in_stack[v] = static_cast<int>(stack.size());
            stack.push_back(v);
            for (int w : out[v]) {
                if (state[w] == 1)
                    return std::vector<int>(stack.begin() + pos_in_stack[w], stack.end());
                if (state[w] == 0) {
                    auto cyc = self(self, w);
                    if (!cyc.empty())
                        return cyc;
                }
            }
            stack.pop_back();
            pos_in_stack[v] = -1;
            state[v] = 2;
            return {};
        };
        for (int v = 0; v < n; ++v)
            if (state[v] == 0) {
                auto cyc = dfs(dfs, v);
                if (!cyc.empty())
                    throw error("cycle", "digraph contains a directed cycle", cyc);
            }
    }

    // x <= y iff y reaches x
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int src = 0; src < n; ++src) {
        std::vector<int> todo{src};
        leq[src][src] = true;
        while (!todo.empty()) {
            int v = todo.back();
            todo.pop_back();
            for (int w : out[v])
                if (!leq[w][src]) {
                    leq[w][src] = true;
                    todo.push_back(w);
                }
        }
    }

    if (force_bounds) {
        auto [bottom, top] = *force_bounds;
        if (bottom < 0 || bottom >= n || top < 0 || top >= n)
            throw error("out_of_range", "forced bound node outside digraph", {bottom, top});
        for (int x = 0; x < n; ++x) {
            leq[bottom][x] = true;
            leq[x][top] = true;
        }
    }

    return FinitePoset(std::move(leq));
}

FiniteLattice poset_to_lattice(const FinitePoset& p) {
    int n = p.size();
    std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
    std::vector<std::vector<int>> join(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            int glb = -1;
            for (int z = 0; z < n; ++z) {
                if (!p.leq(z, x) || !p.leq(z, y))
                    continue;
                if (glb < 0 || p.leq(glb, z))
                    glb = z;
            }
            // glb is the greatest only if it dominates every common lower bound
            if (glb >= 0)
                for (int z = 0; z < n; ++z)
                    if (p.leq(z, x) && p.leq(z, y) && !p.leq(z, glb)) {
                        glb = -1;
                        break;
                    }
            if (glb < 0)
                throw error("no_meet",
                            "elements " + std::to_string(x) + " and " + std::to_string(y) +
                                " have no greatest common lower bound",
                            {x, y});
            int lub = -1;
            for (int z = 0; z < n; ++z) {
                if (!p.leq(x, z) || !p.leq(y, z))
                    continue;
                if (lub < 0 || p.leq(z, lub))
                    lub = z;
            }
            if (lub >= 0)
                for (int z = 0; z < n; ++z)
                    if (p.leq(x, z) && p.leq(y, z) && !p.leq(lub, z)) {
                        lub = -1;
                        break;
                    }
            if (lub < 0)
                throw error("no_join",
                            "elements " + std::to_string(x) + " and " + std::to_string(y) +
                                " have no least common upper bound",
                            {x, y});
            meet[x][y] = meet[y][x] = glb;
            join[x][y] = join[y][x] = lub;
        }
    return FiniteLattice(std::move(meet), std::move(join));
}

FinitePoset lattice_to_poset(const FiniteLattice& l) {
    return l.order();
}

FiniteLattice extended_incidence_lattice(const UndirectedGraph& g) {
    ExtendedIncidenceGraph x = extended_incidence(g);
    FinitePoset p = dag_to_poset(x.digraph, std::make_pair(x.inf_node(), x.sup_node()));
    return poset_to_lattice(p);
}

}  // namespace wildclass
