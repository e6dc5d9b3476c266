#pragma once

#include <vector>

#include "wildclass/poset.hpp"

namespace wildclass {

// Finite lattice given by its full meet and join tables over elements
// 0..N-1. Construction verifies the lattice axioms (commutativity,
// associativity, idempotency, absorption), locates bottom and top, checks
// that they absorb correctly, and checks that the induced order
// (x <= y iff meet(x,y) = x) is a valid partial order.
//
// Tables are stored in full; every checker in lattice_checks.hpp is then a
// table lookup.
class FiniteLattice {
public:
    FiniteLattice(std::vector<std::vector<int>> meet,
                  std::vector<std::vector<int>> join);

    int size() const { return n_; }
    int meet(int a, int b) const { return meet_[a][b]; }
    int join(int a, int b) const { return join_[a][b]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    bool leq(int a, int b) const { return meet_[a][b] == a; }

    // The induced order as a poset.
    FinitePoset order() const;

    bool operator==(const FiniteLattice& other) const {
        return meet_ == other.meet_ && join_ == other.join_;
    }

private:
    int n_;
    std::vector<std::vector<int>> meet_;
    std::vector<std::vector<int>> join_;
    int bottom_;
    int top_;
};

FiniteLattice relabel(const FiniteLattice& l, const std::vector<int>& perm);

}  // namespace wildclass
