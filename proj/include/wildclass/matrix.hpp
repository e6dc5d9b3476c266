#pragma once

#include <optional>
#include <vector>

namespace wildclass {

bool is_prime(int p);

// Dense square matrix over the prime field F_p, entries reduced mod p.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(int p, int n);  // zero matrix
    PrimeFieldMatrix(int p, std::vector<std::vector<int>> rows);

    static PrimeFieldMatrix identity(int p, int n);

    int p() const { return p_; }
    int dim() const { return n_; }
    int at(int i, int j) const { return a_[i * n_ + j]; }
    void set(int i, int j, int v);

    PrimeFieldMatrix operator*(const PrimeFieldMatrix& other) const;
    PrimeFieldMatrix operator+(const PrimeFieldMatrix& other) const;
    PrimeFieldMatrix operator-() const;
    PrimeFieldMatrix scaled(int c) const;
    PrimeFieldMatrix transpose() const;

    int trace() const;
    int rank() const;
    bool invertible() const { return rank() == n_; }
    std::optional<PrimeFieldMatrix> inverse() const;

    bool is_zero() const;
    bool operator==(const PrimeFieldMatrix& other) const = default;
    // lexicographic on (p, n, entries); gives the deterministic enumeration order
    auto operator<=>(const PrimeFieldMatrix& other) const = default;

private:
    int p_;
    int n_;
    std::vector<int> a_;  // row-major
};

struct MatrixPair {
    PrimeFieldMatrix a;
    PrimeFieldMatrix b;
};

// Enumeration of matrix problems is exact but exponential; calls whose
// search space p^(n^2) exceeds this bound throw "scale_guard" instead of
// silently grinding.
constexpr long long kEnumerationGuard = 10'000'000;

// All invertible n x n matrices over F_p in lexicographic entry order.
// |GL(n,p)| = prod_{k=0}^{n-1} (p^n - p^k).
std::vector<PrimeFieldMatrix> gl_enumerate(int n, int p);

// Simultaneous similarity: the first S in lexicographic GL order with
// S A1 S^-1 = A2 and S B1 S^-1 = B2, or nullopt after exhausting GL(n,p).
// The returned conjugator is post-verified.
std::optional<PrimeFieldMatrix> sim_similar(const MatrixPair& p1, const MatrixPair& p2);

// Traces of all products of words in {A, B} of length 1..maxlen, ordered by
// length then lexicographically (A < B). Equal lists are necessary for
// sim_similar to succeed.
std::vector<int> trace_word_invariants(const MatrixPair& pr, int maxlen);

// Congruence of skew-symmetric matrices: the first invertible S with
// S M1 S^T = M2, or nullopt. Inputs must satisfy M^T = -M
// ("not_skew_symmetric"). Found conjugators are post-verified and the
// rank invariant is asserted.
std::optional<PrimeFieldMatrix> skew_congruent(const PrimeFieldMatrix& m1,
                                               const PrimeFieldMatrix& m2);

}  // namespace wildclass
