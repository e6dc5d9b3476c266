#include "wildclass/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "wildclass/error.hpp"
#include "wildclass/matrix.hpp"

namespace wildclass {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table)
    : n_(static_cast<int>(table.size())), table_(std::move(table)) {
    if (n_ == 0)
        throw error("bad_size", "group must be non-empty");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n_)
            throw error("bad_size", "Cayley table must be square");
        for (int v : row)
            if (v < 0 || v >= n_)
                throw error("out_of_range", "table entry outside 0..n-1", {v});
    }

    // Latin square: each row and column is a permutation
    for (int i = 0; i < n_; ++i) {
        std::vector<bool> row_seen(n_, false), col_seen(n_, false);
        for (int j = 0; j < n_; ++j) {
            if (row_seen[table_[i][j]])
                throw error("not_latin", "row " + std::to_string(i) + " repeats a value", {i});
            row_seen[table_[i][j]] = true;
            if (col_seen[table_[j][i]])
                throw error("not_latin", "column " + std::to_string(i) + " repeats a value", {i});
            col_seen[table_[j][i]] = true;
        }
    }

    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            for (int w = 0; w < n_; ++w)
                if (table_[table_[u][v]][w] != table_[u][table_[v][w]])
                    throw error("not_associative",
                                "(u o v) o w != u o (v o w) at (" + std::to_string(u) +
                                    "," + std::to_string(v) + "," + std::to_string(w) + ")",
                                {u, v, w});

    identity_ = -1;
    for (int e = 0; e < n_; ++e) {
        bool neutral = true;
        for (int x = 0; x < n_ && neutral; ++x)
            neutral = table_[e][x] == x && table_[x][e] == x;
        if (neutral) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0)
        throw error("no_identity", "no two-sided identity element");

    inverse_.assign(n_, -1);
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y)
            if (table_[x][y] == identity_ && table_[y][x] == identity_) {
                inverse_[x] = y;
                break;
            }
        if (inverse_[x] < 0)
            throw error("no_inverse", "element " + std::to_string(x) + " has no inverse", {x});
    }
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (table_[a][b] != table_[b][a])
                return false;
    return true;
}

FiniteGroup validate_group(const std::vector<std::vector<int>>& table) {
    return FiniteGroup(table);
}

FiniteGroup make_cyclic(int n) {
    if (n < 1)
        throw error("bad_size", "cyclic group needs n >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup make_dihedral(int k) {
    if (k < 1)
        throw error("bad_size", "dihedral group needs k >= 1");
    // element (eps, a) acts on Z_k as x -> a + (-1)^eps x; index = eps*k + a
    int n = 2 * k;
    auto compose = [k](int e1, int a1, int e2, int a2) {
        int a = ((a1 + (e1 ? -a2 : a2)) % k + k) % k;
        return std::pair<int, int>{e1 ^ e2, a};
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [e, a] = compose(i / k, i % k, j / k, j % k);
            t[i][j] = e * k + a;
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    int ng = g.order(), nh = h.order();
    int n = ng * nh;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int gi = i / nh, hi = i % nh;
            int gj = j / nh, hj = j % nh;
            t[i][j] = g.op(gi, gj) * nh + h.op(hi, hj);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup make_heisenberg(int p) {
    if (!is_prime(p))
        throw error("not_prime", std::to_string(p) + " is not prime", {p});
    // (a,b,c) <-> [[1,a,c],[0,1,b],[0,0,1]]; product adds coordinates plus
    // the cross term a*b' in the corner
    int n = p * p * p;
    auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int a2 = 0; a2 < p; ++a2)
                    for (int b2 = 0; b2 < p; ++b2)
                        for (int c2 = 0; c2 < p; ++c2)
                            t[idx(a, b, c)][idx(a2, b2, c2)] =
                                idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
    return FiniteGroup(std::move(t));
}

FiniteGroup make_quaternion() {
    // elements 0..7 = 1, -1, i, -i, j, -j, k, -k; encode as (sign, axis)
    // with axis 0..3 = 1, i, j, k and index = axis*2 + (sign < 0)
    // axis multiplication: i*j=k, j*k=i, k*i=j, anticommutative, i*i=-1
    auto mul_axis = [](int x, int y) -> std::pair<int, int> {  // (sign, axis)
        if (x == 0) return {+1, y};
        if (y == 0) return {+1, x};
        if (x == y) return {-1, 0};
        // 1,2,3 = i,j,k cyclic
        if ((x % 3) + 1 == y) return {+1, 6 - x - y};
        return {-1, 6 - x - y};
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int ax = i / 2, sx = i % 2 ? -1 : +1;
            int ay = j / 2, sy = j % 2 ? -1 : +1;
            auto [s, a] = mul_axis(ax, ay);
            int sign = s * sx * sy;
            t[i][j] = a * 2 + (sign < 0 ? 1 : 0);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm) {
    int n = g.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[perm[a]][perm[b]] = perm[g.op(a, b)];
    return FiniteGroup(std::move(t));
}

std::vector<int> element_orders(const FiniteGroup& g) {
    std::vector<int> orders(g.order());
    for (int x = 0; x < g.order(); ++x) {
        int acc = x, k = 1;
        while (acc != g.identity()) {
            acc = g.op(acc, x);
            ++k;
        }
        orders[x] = k;
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::vector<int> generating_set(const FiniteGroup& g) {
    int n = g.order();
    std::vector<bool> closed(n, false);
    closed[g.identity()] = true;
    int closed_count = 1;
    std::vector<int> gens;

    auto close_over = [&](int seed) {
        std::vector<int> frontier{seed};
        if (!closed[seed]) {
            closed[seed] = true;
            ++closed_count;
        }
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier)
                for (int y = 0; y < n; ++y) {
                    if (!closed[y])
                        continue;
                    for (int z : {g.op(x, y), g.op(y, x)})
                        if (!closed[z]) {
                            closed[z] = true;
                            ++closed_count;
                            next.push_back(z);
                        }
                }
            frontier = std::move(next);
        }
    };

    for (int x = 0; x < n && closed_count < n; ++x) {
        if (closed[x])
            continue;
        gens.push_back(x);
        close_over(x);
    }
    return gens;
}

namespace {

// Expresses every element as gen-product of a previously discovered element:
// word[x] = (parent, generator index), identity is the root. BFS order, so
// parents are always discovered before children.
struct WordTable {
    std::vector<int> bfs_order;
    std::vector<int> parent;
    std::vector<int> via_gen;
};

WordTable build_words(const FiniteGroup& g, const std::vector<int>& gens) {
    int n = g.order();
    WordTable wt{{}, std::vector<int>(n, -1), std::vector<int>(n, -1)};
    std::vector<bool> seen(n, false);
    seen[g.identity()] = true;
    wt.bfs_order.push_back(g.identity());
    for (size_t head = 0; head < wt.bfs_order.size(); ++head) {
        int x = wt.bfs_order[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int y = g.op(x, gens[gi]);
            if (!seen[y]) {
                seen[y] = true;
                wt.parent[y] = x;
                wt.via_gen[y] = static_cast<int>(gi);
                wt.bfs_order.push_back(y);
            }
        }
    }
    return wt;
}

bool verify_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                         const std::vector<int>& f) {
    int n = g.order();
    std::vector<bool> hit(n, false);
    for (int x : f) {
        if (x < 0 || x >= n || hit[x])
            return false;
        hit[x] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (f[g.op(a, b)] != h.op(f[a], f[b]))
                return false;
    return true;
}

}  // namespace

std::optional<std::vector<int>> group_iso(const FiniteGroup& g, const FiniteGroup& h) {
    int n = g.order();
    if (n != h.order())
        return std::nullopt;
    if (element_orders(g) != element_orders(h))
        return std::nullopt;
    if (g.is_abelian() != h.is_abelian())
        return std::nullopt;

    std::vector<int> gens = generating_set(g);
    WordTable words = build_words(g, gens);
    if (static_cast<int>(words.bfs_order.size()) != n)
        throw error("internal", "generating set does not generate");

    // order of each element, unsorted (for candidate pruning)
    auto order_of = [](const FiniteGroup& grp) {
        std::vector<int> o(grp.order());
        for (int x = 0; x < grp.order(); ++x) {
            int acc = x, k = 1;
            while (acc != grp.identity()) {
                acc = grp.op(acc, x);
                ++k;
            }
            o[x] = k;
        }
        return o;
    };
    std::vector<int> og = order_of(g), oh = order_of(h);

    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        for (int y = 0; y < n; ++y)
            if (oh[y] == og[gens[gi]])
                candidates[gi].push_back(y);
        if (candidates[gi].empty())
            return std::nullopt;
    }

    // Enumerate all generator image assignments; each extends uniquely to a
    // candidate map via the word table, which is then fully verified. All
    // isomorphisms arise this way, so taking the minimum over the valid maps
    // yields the lexicographically least one.
    std::optional<std::vector<int>> best;
    std::vector<int> images(gens.size(), -1);
    std::vector<int> f(n, -1);

    auto extend_and_check = [&]() {
        f.assign(n, -1);
        f[g.identity()] = h.identity();
        for (int x : words.bfs_order) {
            if (x == g.identity())
                continue;
            f[x] = h.op(f[words.parent[x]], images[words.via_gen[x]]);
        }
        if (!verify_homomorphism(g, h, f))
            return;
        if (!best || f < *best)
            best = f;
    };

    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == gens.size()) {
            extend_and_check();
            return;
        }
        for (int y : candidates[gi]) {
            images[gi] = y;
            self(self, gi + 1);
        }
    };
    rec(rec, 0);
    return best;
}

std::vector<NamedGroup> group_catalog() {
    std::vector<NamedGroup> cat;
    cat.push_back({"Z1", make_cyclic(1)});
    cat.push_back({"Z2", make_cyclic(2)});
    cat.push_back({"Z3", make_cyclic(3)});
    cat.push_back({"Z4", make_cyclic(4)});
    cat.push_back({"V4", make_direct_product(make_cyclic(2), make_cyclic(2))});
    cat.push_back({"Z5", make_cyclic(5)});
    cat.push_back({"Z6", make_cyclic(6)});
    cat.push_back({"S3", make_dihedral(3)});
    cat.push_back({"Z8", make_cyclic(8)});
    cat.push_back({"Z4xZ2", make_direct_product(make_cyclic(4), make_cyclic(2))});
    cat.push_back({"Z2^3", make_direct_product(
                               make_direct_product(make_cyclic(2), make_cyclic(2)),
                               make_cyclic(2))});
    cat.push_back({"D4", make_dihedral(4)});
    cat.push_back({"Q8", make_quaternion()});
    cat.push_back({"Heis3", make_heisenberg(3)});
    cat.push_back({"Z27", make_cyclic(27)});
    return cat;
}

}  // namespace wildclass
