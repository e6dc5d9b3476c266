#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wildclass {

// Finite group as a Cayley table over elements 0..n-1. Construction checks
// the four group axioms: every row and column is a permutation of 0..n-1
// ("not_latin"), associativity ("not_associative"), a two-sided identity
// exists ("no_identity") and every element has an inverse ("no_inverse").
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<int>> table);

    int order() const { return n_; }
    int op(int a, int b) const { return table_[a][b]; }
    int identity() const { return identity_; }
    int inverse(int a) const { return inverse_[a]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    bool is_abelian() const;

    bool operator==(const FiniteGroup& other) const {
        return table_ == other.table_;
    }

private:
    int n_;
    std::vector<std::vector<int>> table_;
    int identity_;
    std::vector<int> inverse_;
};

FiniteGroup validate_group(const std::vector<std::vector<int>>& table);

// --- generator families ---------------------------------------------------

// Z/n, identity 0, op = addition mod n.
FiniteGroup make_cyclic(int n);

// Dihedral group of the k-gon, order 2k. dihedral(1) = Z/2, dihedral(2) is
// the Klein four-group, dihedral(3) = S3.
FiniteGroup make_dihedral(int k);

FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Upper unitriangular 3x3 matrices over F_p: order p^3, nilpotency class 2,
// exponent p for odd p. Throws "not_prime" if p is composite.
FiniteGroup make_heisenberg(int p);

// Quaternion group of order 8 ({1,-1,i,-i,j,-j,k,-k}).
FiniteGroup make_quaternion();

// Relabels elements by a permutation; the result is isomorphic to g via perm.
FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm);

// --- element-level invariants ----------------------------------------------

// Orders of all n elements, sorted ascending (a multiset invariant under
// isomorphism).
std::vector<int> element_orders(const FiniteGroup& g);

// --- isomorphism -----------------------------------------------------------

// Searches for a bijection f with f(a o b) = f(a) * f(b). The search maps a
// generating set and extends by closure; every candidate is post-verified on
// all n^2 pairs. Returns the lexicographically least isomorphism (as the
// vector f(0), f(1), ...) or nullopt.
std::optional<std::vector<int>> group_iso(const FiniteGroup& g, const FiniteGroup& h);

// Greedy generating set: repeatedly adjoin the least element outside the
// subgroup generated so far.
std::vector<int> generating_set(const FiniteGroup& g);

// --- test/verification catalog ----------------------------------------------

struct NamedGroup {
    std::string name;
    FiniteGroup group;
};

// All groups of order <= 6 up to isomorphism, the five groups of order 8,
// heisenberg(3) and cyclic(27). Order of entries is fixed.
std::vector<NamedGroup> group_catalog();

}  // namespace wildclass
