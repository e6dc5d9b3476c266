#include "wildclass/iso.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "wildclass/error.hpp"

namespace wildclass {

std::vector<int> RefinementPartition::class_size_multiset() const {
    std::vector<int> sizes(num_classes, 0);
    for (int c : class_of)
        ++sizes[c];
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

namespace {

using Sig = std::vector<std::array<int, 3>>;  // (direction, color, neighbor class)

struct Adjacency {
    // per node: (neighbor, color)
    std::vector<std::vector<std::pair<int, int>>> out, in;

    explicit Adjacency(const ColoredDigraph& d)
        : out(d.num_nodes()), in(d.num_nodes()) {
        for (const Arc& a : d.arcs()) {
            out[a.src].emplace_back(a.dst, a.color);
            in[a.dst].emplace_back(a.src, a.color);
        }
    }
};

Sig signature(const Adjacency& adj, const std::vector<int>& cls, int v) {
    Sig s;
    s.reserve(adj.out[v].size() + adj.in[v].size());
    for (auto [w, c] : adj.out[v])
        s.push_back({0, c, cls[w]});
    for (auto [w, c] : adj.in[v])
        s.push_back({1, c, cls[w]});
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

RefinementPartition color_refine(const ColoredDigraph& d, const std::vector<int>& initial) {
    int n = d.num_nodes();
    if (!initial.empty() && static_cast<int>(initial.size()) != n)
        throw error("bad_size", "initial class vector must cover all nodes");

    std::vector<int> cls(n, 0);
    if (!initial.empty()) {
        // densify caller-provided ids, preserving their value order
        std::vector<int> vals = initial;
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (int v = 0; v < n; ++v)
            cls[v] = static_cast<int>(
                std::lower_bound(vals.begin(), vals.end(), initial[v]) - vals.begin());
    }

    Adjacency adj(d);
    int num_classes = 1 + *std::max_element(cls.begin(), cls.end());
    while (true) {
        std::vector<std::pair<std::pair<int, Sig>, int>> keyed(n);
        for (int v = 0; v < n; ++v)
            keyed[v] = {{cls[v], signature(adj, cls, v)}, v};
        std::sort(keyed.begin(), keyed.end());
        int k = 0;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            if (i > 0 && keyed[i].first != keyed[i - 1].first)
                ++k;
            next[keyed[i].second] = k;
        }
        ++k;
        if (k == num_classes)
            break;  // refinement only splits, so equal counts mean a fixed point
        cls = std::move(next);
        num_classes = k;
    }
    return RefinementPartition{std::move(cls), num_classes};
}

namespace {

// Joint individualization-refinement over two digraphs. Only nodes with at
// least one arc participate: arc-free nodes can never split (their signature
// stays empty) and no signature ever references them, so they are matched
// class-wise ascending at the end.
struct IsoSearch {
    const ColoredDigraph& a;
    const ColoredDigraph& b;
    Adjacency adj_a, adj_b;
    std::vector<int> arced_a, arced_b;  // ascending node lists

    IsoSearch(const ColoredDigraph& a_, const ColoredDigraph& b_)
        : a(a_), b(b_), adj_a(a_), adj_b(b_) {
        for (int v = 0; v < a.num_nodes(); ++v)
            if (a.has_arcs(v))
                arced_a.push_back(v);
        for (int v = 0; v < b.num_nodes(); ++v)
            if (b.has_arcs(v))
                arced_b.push_back(v);
    }

    // Refines both class vectors in a shared id space until stable.
    // Returns false if the per-class node counts of the two graphs diverge.
    bool refine(std::vector<int>& cls_a, std::vector<int>& cls_b) const {
        int total = static_cast<int>(arced_a.size() + arced_b.size());
        int num_classes = -1;
        while (true) {
            std::vector<std::pair<std::pair<int, Sig>, int>> keyed;
            keyed.reserve(total);
            for (int v : arced_a)
                keyed.push_back({{cls_a[v], signature(adj_a, cls_a, v)}, v});
            for (int v : arced_b)
                keyed.push_back({{cls_b[v], signature(adj_b, cls_b, v)}, ~v});
            std::sort(keyed.begin(), keyed.end(),
                      [](const auto& l, const auto& r) { return l.first < r.first; });
            int k = 0;
            int balance = 0;  // a-nodes minus b-nodes in the current class
            for (int i = 0; i < total; ++i) {
                if (i > 0 && keyed[i].first != keyed[i - 1].first) {
                    if (balance != 0)
                        return false;
                    ++k;
                }
                int v = keyed[i].second;
                if (v >= 0) {
                    cls_a[v] = k;
                    ++balance;
                } else {
                    cls_b[~v] = k;
                    --balance;
                }
            }
            if (balance != 0)
                return false;
            ++k;
            if (k == num_classes)
                return true;
            num_classes = k;
        }
    }

    std::optional<Isomorphism> search(std::vector<int> cls_a, std::vector<int> cls_b,
                                      int next_id) const {
        // least arced node in a class of size > 1 (paired singletons are pinned)
        std::vector<int> count_a(next_id, 0);
        for (int v : arced_a)
            ++count_a[cls_a[v]];
        int branch = -1;
        for (int v : arced_a)
            if (count_a[cls_a[v]] > 1) {
                branch = v;
                break;
            }

        if (branch < 0)
            return finish(cls_a, cls_b);

        for (int v : arced_b) {
            if (cls_b[v] != cls_a[branch])
                continue;
            std::vector<int> na = cls_a, nb = cls_b;
            na[branch] = next_id;
            nb[v] = next_id;
            if (!refine(na, nb))
                continue;
            int max_id = 0;
            for (int w : arced_a)
                max_id = std::max(max_id, na[w]);
            if (auto r = search(std::move(na), std::move(nb), max_id + 1))
                return r;
        }
        return std::nullopt;
    }

    // All arced classes are singleton-paired: read off the arced mapping,
    // match arc-free nodes class-wise ascending, then post-verify.
    std::optional<Isomorphism> finish(const std::vector<int>& cls_a,
                                      const std::vector<int>& cls_b) const {
        int n = a.num_nodes();
        Isomorphism f(n, -1);
        std::vector<int> owner(static_cast<int>(arced_a.size() + arced_b.size()) + 1, -1);
        for (int v : arced_b)
            owner[cls_b[v]] = v;
        for (int v : arced_a) {
            if (owner[cls_a[v]] < 0)
                return std::nullopt;
            f[v] = owner[cls_a[v]];
        }
        // arc-free nodes form one class per graph (no initial colors here)
        std::vector<int> free_b;
        for (int v = 0; v < n; ++v)
            if (!b.has_arcs(v))
                free_b.push_back(v);
        size_t next = 0;
        for (int v = 0; v < n; ++v)
            if (!a.has_arcs(v))
                f[v] = free_b[next++];
        if (!verify_digraph_iso(a, b, f))
            return std::nullopt;
        return f;
    }
};

}  // namespace

std::optional<Isomorphism> digraph_iso(const ColoredDigraph& a, const ColoredDigraph& b) {
    if (a.num_nodes() != b.num_nodes() || a.num_arcs() != b.num_arcs())
        return std::nullopt;
    // per-color arc counts must match before any search
    {
        std::map<int, int> ca, cb;
        for (const Arc& x : a.arcs())
            ++ca[x.color];
        for (const Arc& x : b.arcs())
            ++cb[x.color];
        if (ca != cb)
            return std::nullopt;
    }

    IsoSearch s(a, b);
    if (s.arced_a.size() != s.arced_b.size())
        return std::nullopt;

    std::vector<int> cls_a(a.num_nodes(), 0), cls_b(b.num_nodes(), 0);
    if (!s.refine(cls_a, cls_b))
        return std::nullopt;
    int max_id = 0;
    for (int v : s.arced_a)
        max_id = std::max(max_id, cls_a[v]);
    return s.search(std::move(cls_a), std::move(cls_b), max_id + 1);
}

bool verify_digraph_iso(const ColoredDigraph& a, const ColoredDigraph& b,
                        const Isomorphism& f) {
    int n = a.num_nodes();
    if (b.num_nodes() != n || static_cast<int>(f.size()) != n)
        return false;
    std::vector<bool> hit(n, false);
    for (int x : f) {
        if (x < 0 || x >= n || hit[x])
            return false;
        hit[x] = true;
    }
    if (a.num_arcs() != b.num_arcs())
        return false;
    // arcs are unique triples, so forward containment plus equal counts
    // makes the arc map a bijection
    for (const Arc& x : a.arcs()) {
        Arc y{f[x.src], f[x.dst], x.color};
        if (!std::binary_search(b.arcs().begin(), b.arcs().end(), y))
            return false;
    }
    return true;
}

namespace {

ColoredDigraph encode_graph(const UndirectedGraph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * g.num_edges());
    for (auto [u, v] : g.edges()) {
        arcs.push_back({u, v, 1});
        arcs.push_back({v, u, 1});
    }
    return ColoredDigraph(g.num_vertices(), std::move(arcs));
}

ColoredDigraph encode_poset(const FinitePoset& p) {
    std::vector<Arc> arcs;
    for (auto [lo, hi] : p.covers())
        arcs.push_back({lo, hi, 1});
    return ColoredDigraph(p.size(), std::move(arcs));
}

}  // namespace

std::optional<Isomorphism> graph_iso(const UndirectedGraph& a, const UndirectedGraph& b) {
    return digraph_iso(encode_graph(a), encode_graph(b));
}

std::optional<Isomorphism> poset_iso(const FinitePoset& a, const FinitePoset& b) {
    return digraph_iso(encode_poset(a), encode_poset(b));
}

std::optional<Isomorphism> lattice_iso(const FiniteLattice& a, const FiniteLattice& b) {
    auto f = poset_iso(a.order(), b.order());
    if (f && !verify_lattice_iso(a, b, *f))
        throw error("internal", "order isomorphism fails to transport meet/join tables");
    return f;
}

bool verify_graph_iso(const UndirectedGraph& a, const UndirectedGraph& b,
                      const Isomorphism& f) {
    return verify_digraph_iso(encode_graph(a), encode_graph(b), f);
}

bool verify_poset_iso(const FinitePoset& a, const FinitePoset& b, const Isomorphism& f) {
    int n = a.size();
    if (b.size() != n || static_cast<int>(f.size()) != n)
        return false;
    std::vector<bool> hit(n, false);
    for (int x : f) {
        if (x < 0 || x >= n || hit[x])
            return false;
        hit[x] = true;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a.leq(x, y) != b.leq(f[x], f[y]))
                return false;
    return true;
}

bool verify_lattice_iso(const FiniteLattice& a, const FiniteLattice& b,
                        const Isomorphism& f) {
    int n = a.size();
    if (b.size() != n || static_cast<int>(f.size()) != n)
        return false;
    std::vector<bool> hit(n, false);
    for (int x : f) {
        if (x < 0 || x >= n || hit[x])
            return false;
        hit[x] = true;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (f[a.meet(x, y)] != b.meet(f[x], f[y]) ||
                f[a.join(x, y)] != b.join(f[x], f[y]))
                return false;
    return true;
}

}  // namespace wildclass
