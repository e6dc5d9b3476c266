#include "wildclass/lattice.hpp"

#include <string>

#include "wildclass/error.hpp"

namespace wildclass {

namespace {

void check_table(const std::vector<std::vector<int>>& t, int n, const char* which) {
    if (static_cast<int>(t.size()) != n)
        throw error("bad_size", std::string(which) + " table must be square");
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n)
            throw error("bad_size", std::string(which) + " table must be square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw error("out_of_range", std::string(which) + " entry outside 0..n-1", {v});
    }
}

}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::vector<int>> meet,
                             std::vector<std::vector<int>> join)
    : n_(static_cast<int>(meet.size())), meet_(std::move(meet)), join_(std::move(join)) {
    if (n_ == 0)
        throw error("bad_size", "lattice must be non-empty");
    check_table(meet_, n_, "meet");
    check_table(join_, n_, "join");

    for (int x = 0; x < n_; ++x) {
        if (meet_[x][x] != x)
            throw error("not_idempotent", "meet(x,x) != x", {x});
        if (join_[x][x] != x)
            throw error("not_idempotent", "join(x,x) != x", {x});
    }
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (meet_[x][y] != meet_[y][x])
                throw error("not_commutative", "meet(x,y) != meet(y,x)", {x, y});
            if (join_[x][y] != join_[y][x])
                throw error("not_commutative", "join(x,y) != join(y,x)", {x, y});
            // absorption ties the two operations together
            if (meet_[x][join_[x][y]] != x)
                throw error("not_absorptive", "meet(x, join(x,y)) != x", {x, y});
            if (join_[x][meet_[x][y]] != x)
                throw error("not_absorptive", "join(x, meet(x,y)) != x", {x, y});
        }
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            for (int z = 0; z < n_; ++z) {
                if (meet_[meet_[x][y]][z] != meet_[x][meet_[y][z]])
                    throw error("not_associative", "meet", {x, y, z});
                if (join_[join_[x][y]][z] != join_[x][join_[y][z]])
                    throw error("not_associative", "join", {x, y, z});
            }

    bottom_ = -1;
    top_ = -1;
    for (int c = 0; c < n_; ++c) {
        bool is_bottom = true, is_top = true;
        for (int x = 0; x < n_; ++x) {
            if (meet_[x][c] != c)
                is_bottom = false;
            if (join_[x][c] != c)
                is_top = false;
        }
        if (is_bottom)
            bottom_ = c;
        if (is_top)
            top_ = c;
    }
    if (bottom_ < 0)
        throw error("no_bottom", "no element with meet(x, bottom) = bottom for all x");
    if (top_ < 0)
        throw error("no_top", "no element with join(x, top) = top for all x");

    // the induced order must itself be a poset; FinitePoset throws otherwise
    order();
}

FinitePoset FiniteLattice::order() const {
    std::vector<std::vector<bool>> leq(n_, std::vector<bool>(n_, false));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            leq[a][b] = meet_[a][b] == a;
    return FinitePoset(std::move(leq));
}

FiniteLattice relabel(const FiniteLattice& l, const std::vector<int>& perm) {
    int n = l.size();
    std::vector<std::vector<int>> meet(n, std::vector<int>(n));
    std::vector<std::vector<int>> join(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            meet[perm[a]][perm[b]] = perm[l.meet(a, b)];
            join[perm[a]][perm[b]] = perm[l.join(a, b)];
        }
    return FiniteLattice(std::move(meet), std::move(join));
}

}  // namespace wildclass
