#pragma once

#include <functional>
#include <map>
#include <vector>

#include "wildclass/matrix.hpp"

namespace wildclass {

// A word in non-commuting variables x_0..x_{a-1}; empty = the unit word.
using Word = std::vector<int>;

// Non-commutative polynomial: finite map word -> coefficient. Zero
// coefficients are never stored.
class NCPolynomial {
public:
    NCPolynomial() = default;
    static NCPolynomial variable(int index);
    static NCPolynomial constant(int c);
    static NCPolynomial monomial(const Word& w, int c = 1);

    NCPolynomial operator+(const NCPolynomial& other) const;
    NCPolynomial operator*(const NCPolynomial& other) const;  // concatenates words
    NCPolynomial scaled(int c) const;

    const std::map<Word, int>& terms() const { return terms_; }
    // largest variable index used, plus one
    int min_arity() const;

    // Substitutes square matrices for the variables; the empty word maps to
    // coefficient * identity.
    PrimeFieldMatrix eval(const std::vector<PrimeFieldMatrix>& args) const;

    bool operator==(const NCPolynomial& other) const = default;

private:
    std::map<Word, int> terms_;
};

// A matrix whose entries are non-commutative polynomials.
struct NCMatrix {
    int rows;
    int cols;
    std::vector<NCPolynomial> entries;  // row-major

    const NCPolynomial& at(int i, int j) const { return entries[i * cols + j]; }
};

// A b-tuple of polynomial matrices sharing one variable arity. Evaluating
// on an a-tuple of n x n matrices yields a b-tuple of block matrices
// (each polynomial entry becomes an n x n block).
struct NCTemplate {
    int arity;
    std::vector<NCMatrix> matrices;
};

std::vector<PrimeFieldMatrix> nc_eval(const NCTemplate& t,
                                      const std::vector<PrimeFieldMatrix>& args);

// Equivalence oracle over matrix tuples, for one fixed problem and size.
using EquivalenceOracle =
    std::function<bool(const std::vector<PrimeFieldMatrix>&, const std::vector<PrimeFieldMatrix>&)>;

struct ContainmentReport {
    bool src_equivalent;
    bool dst_equivalent;
    bool agree;  // src_equivalent == dst_equivalent
};

// Checks the translation condition on ONE instance pair: whether source
// equivalence of (a, a2) agrees with destination equivalence of
// (T(a), T(a2)). A per-instance probe only — it cannot certify the
// universal statement.
ContainmentReport containment_check_instance(const NCTemplate& t,
                                             const std::vector<PrimeFieldMatrix>& a,
                                             const std::vector<PrimeFieldMatrix>& a2,
                                             const EquivalenceOracle& equiv_src,
                                             const EquivalenceOracle& equiv_dst);

}  // namespace wildclass
