#pragma once

#include <utility>
#include <vector>

namespace wildclass {

// Finite partial order on elements 0..N-1, stored as the full N x N
// less-or-equal table. Construction checks reflexivity, antisymmetry and
// transitivity and reports a witness for the first violation found
// (codes "not_reflexive", "not_antisymmetric", "not_transitive").
class FinitePoset {
public:
    explicit FinitePoset(std::vector<std::vector<bool>> leq);

    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[a][b]; }
    const std::vector<std::vector<bool>>& table() const { return leq_; }

    // Cover pairs (a, b) with a strictly below b and nothing in between.
    std::vector<std::pair<int, int>> covers() const;

    bool operator==(const FinitePoset& other) const = default;

private:
    int n_;
    std::vector<std::vector<bool>> leq_;
};

// Validates an arbitrary square boolean table as a partial order.
FinitePoset validate_poset(const std::vector<std::vector<bool>>& leq);

FinitePoset relabel(const FinitePoset& p, const std::vector<int>& perm);

}  // namespace wildclass
