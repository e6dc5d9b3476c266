#include "wildclass/poset.hpp"

#include <string>

#include "wildclass/error.hpp"

namespace wildclass {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq)
    : n_(static_cast<int>(leq.size())), leq_(std::move(leq)) {
    for (const auto& row : leq_)
        if (static_cast<int>(row.size()) != n_)
            throw error("bad_size", "relation table must be square");
    for (int x = 0; x < n_; ++x)
        if (!leq_[x][x])
            throw error("not_reflexive", "x <= x fails for x=" + std::to_string(x), {x});
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (x != y && leq_[x][y] && leq_[y][x])
                throw error("not_antisymmetric",
                            std::to_string(x) + " <= " + std::to_string(y) +
                                " and " + std::to_string(y) + " <= " + std::to_string(x),
                            {x, y});
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (!leq_[x][y])
                continue;
            for (int z = 0; z < n_; ++z)
                if (leq_[y][z] && !leq_[x][z])
                    throw error("not_transitive",
                                std::to_string(x) + " <= " + std::to_string(y) +
                                    " <= " + std::to_string(z) + " but not " +
                                    std::to_string(x) + " <= " + std::to_string(z),
                                {x, y, z});
        }
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
    std::vector<std::pair<int, int>> result;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (a == b || !leq_[a][b])
                continue;
            bool covered = true;
            for (int w = 0; w < n_ && covered; ++w)
                if (w != a && w != b && leq_[a][w] && leq_[w][b])
                    covered = false;
            if (covered)
                result.emplace_back(a, b);
        }
    return result;
}

FinitePoset validate_poset(const std::vector<std::vector<bool>>& leq) {
    return FinitePoset(leq);
}

FinitePoset relabel(const FinitePoset& p, const std::vector<int>& perm) {
    int n = p.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.leq(a, b))
                leq[perm[a]][perm[b]] = true;
    return FinitePoset(std::move(leq));
}

}  // namespace wildclass
