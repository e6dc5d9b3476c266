#include "wildclass/matrix.hpp"

#include <algorithm>
#include <string>

#include "wildclass/error.hpp"

namespace wildclass {

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace {

int mod_pow(int base, int exp, int p) {
    long long r = 1, b = base % p;
    while (exp > 0) {
        if (exp & 1)
            r = r * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

// multiplicative inverse in F_p, p prime
int field_inv(int a, int p) { return mod_pow(a, p - 2, p); }

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(int p, int n) : p_(p), n_(n), a_(n * n, 0) {
    if (!is_prime(p))
        throw error("not_prime", std::to_string(p) + " is not prime", {p});
    if (n < 1)
        throw error("bad_size", "dimension must be >= 1");
}

PrimeFieldMatrix::PrimeFieldMatrix(int p, std::vector<std::vector<int>> rows)
    : PrimeFieldMatrix(p, static_cast<int>(rows.size())) {
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(rows[i].size()) != n_)
            throw error("bad_size", "matrix must be square");
        for (int j = 0; j < n_; ++j)
            a_[i * n_ + j] = ((rows[i][j] % p_) + p_) % p_;
    }
}

PrimeFieldMatrix PrimeFieldMatrix::identity(int p, int n) {
    PrimeFieldMatrix m(p, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

void PrimeFieldMatrix::set(int i, int j, int v) {
    a_[i * n_ + j] = ((v % p_) + p_) % p_;
}

PrimeFieldMatrix PrimeFieldMatrix::operator*(const PrimeFieldMatrix& other) const {
    if (p_ != other.p_ || n_ != other.n_)
        throw error("mismatch", "matrix dimension or modulus mismatch");
    PrimeFieldMatrix r(p_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            int aik = at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < n_; ++j)
                r.a_[i * n_ + j] = (r.a_[i * n_ + j] + aik * other.at(k, j)) % p_;
        }
    return r;
}

PrimeFieldMatrix PrimeFieldMatrix::operator+(const PrimeFieldMatrix& other) const {
    if (p_ != other.p_ || n_ != other.n_)
        throw error("mismatch", "matrix dimension or modulus mismatch");
    PrimeFieldMatrix r(p_, n_);
    for (int i = 0; i < n_ * n_; ++i)
        r.a_[i] = (a_[i] + other.a_[i]) % p_;
    return r;
}

PrimeFieldMatrix PrimeFieldMatrix::operator-() const {
    PrimeFieldMatrix r(p_, n_);
    for (int i = 0; i < n_ * n_; ++i)
        r.a_[i] = (p_ - a_[i]) % p_;
    return r;
}

PrimeFieldMatrix PrimeFieldMatrix::scaled(int c) const {
    c = ((c % p_) + p_) % p_;
    PrimeFieldMatrix r(p_, n_);
    for (int i = 0; i < n_ * n_; ++i)
        r.a_[i] = a_[i] * c % p_;
    return r;
}

PrimeFieldMatrix PrimeFieldMatrix::transpose() const {
    PrimeFieldMatrix r(p_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            r.a_[j * n_ + i] = at(i, j);
    return r;
}

int PrimeFieldMatrix::trace() const {
    int t = 0;
    for (int i = 0; i < n_; ++i)
        t = (t + at(i, i)) % p_;
    return t;
}

int PrimeFieldMatrix::rank() const {
    std::vector<int> m = a_;
    int rank = 0;
    for (int col = 0; col < n_ && rank < n_; ++col) {
        int pivot = -1;
        for (int r = rank; r < n_; ++r)
            if (m[r * n_ + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        for (int j = 0; j < n_; ++j)
            std::swap(m[rank * n_ + j], m[pivot * n_ + j]);
        int inv = field_inv(m[rank * n_ + col], p_);
        for (int j = 0; j < n_; ++j)
            m[rank * n_ + j] = m[rank * n_ + j] * inv % p_;
        for (int r = 0; r < n_; ++r) {
            if (r == rank || m[r * n_ + col] == 0)
                continue;
            int factor = m[r * n_ + col];
            for (int j = 0; j < n_; ++j)
                m[r * n_ + j] = ((m[r * n_ + j] - factor * m[rank * n_ + j]) % p_ + p_) % p_;
        }
        ++rank;
    }
    return rank;
}

std::optional<PrimeFieldMatrix> PrimeFieldMatrix::inverse() const {
    // Gauss-Jordan on [A | I]
    std::vector<int> m = a_;
    PrimeFieldMatrix inv = identity(p_, n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (m[r * n_ + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return std::nullopt;
        for (int j = 0; j < n_; ++j) {
            std::swap(m[col * n_ + j], m[pivot * n_ + j]);
            int t = inv.at(col, j);
            inv.set(col, j, inv.at(pivot, j));
            inv.set(pivot, j, t);
        }
        int f = field_inv(m[col * n_ + col], p_);
        for (int j = 0; j < n_; ++j) {
            m[col * n_ + j] = m[col * n_ + j] * f % p_;
            inv.set(col, j, inv.at(col, j) * f);
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || m[r * n_ + col] == 0)
                continue;
            int factor = m[r * n_ + col];
            for (int j = 0; j < n_; ++j) {
                m[r * n_ + j] = ((m[r * n_ + j] - factor * m[col * n_ + j]) % p_ + p_) % p_;
                inv.set(r, j, inv.at(r, j) - factor * inv.at(col, j));
            }
        }
    }
    return inv;
}

bool PrimeFieldMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
}

namespace {

long long enumeration_size(int n, int p) {
    long long total = 1;
    for (int i = 0; i < n * n; ++i) {
        total *= p;
        if (total > kEnumerationGuard)
            return total;
    }
    return total;
}

void check_guard(int n, int p) {
    if (enumeration_size(n, p) > kEnumerationGuard)
        throw error("scale_guard",
                    "p^(n^2) exceeds the enumeration guard of " +
                        std::to_string(kEnumerationGuard),
                    {n, p});
}

void check_pair(const MatrixPair& pr, const char* which) {
    if (pr.a.p() != pr.b.p() || pr.a.dim() != pr.b.dim())
        throw error("mismatch", std::string(which) + ": pair members disagree on p or n");
}

}  // namespace

std::vector<PrimeFieldMatrix> gl_enumerate(int n, int p) {
    if (!is_prime(p))
        throw error("not_prime", std::to_string(p) + " is not prime", {p});
    check_guard(n, p);
    std::vector<PrimeFieldMatrix> result;
    PrimeFieldMatrix m(p, n);
    std::vector<int> digits(n * n, 0);
    while (true) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.set(i, j, digits[i * n + j]);
        if (m.rank() == n)
            result.push_back(m);
        int pos = n * n - 1;
        while (pos >= 0 && digits[pos] == p - 1)
            digits[pos--] = 0;
        if (pos < 0)
            break;
        ++digits[pos];
    }
    return result;
}

std::optional<PrimeFieldMatrix> sim_similar(const MatrixPair& p1, const MatrixPair& p2) {
    check_pair(p1, "first pair");
    check_pair(p2, "second pair");
    if (p1.a.p() != p2.a.p() || p1.a.dim() != p2.a.dim())
        throw error("mismatch", "pairs disagree on p or n");
    int n = p1.a.dim(), p = p1.a.p();
    check_guard(n, p);

    for (const PrimeFieldMatrix& s : gl_enumerate(n, p)) {
        PrimeFieldMatrix sinv = *s.inverse();
        if (s * p1.a * sinv == p2.a && s * p1.b * sinv == p2.b) {
            // post-verify before handing the conjugator out
            if (!(s * p1.a * sinv == p2.a) || !(s * p1.b * sinv == p2.b))
                throw error("internal", "conjugator failed post-verification");
            return s;
        }
    }
    return std::nullopt;
}

std::vector<int> trace_word_invariants(const MatrixPair& pr, int maxlen) {
    check_pair(pr, "pair");
    if (maxlen < 1)
        throw error("bad_size", "maxlen must be >= 1");
    std::vector<int> traces;
    // words over {0 = A, 1 = B}, by length then lexicographically
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<int> w(len, 0);
        while (true) {
            PrimeFieldMatrix prod = PrimeFieldMatrix::identity(pr.a.p(), pr.a.dim());
            for (int letter : w)
                prod = prod * (letter == 0 ? pr.a : pr.b);
            traces.push_back(prod.trace());
            int pos = len - 1;
            while (pos >= 0 && w[pos] == 1)
                w[pos--] = 0;
            if (pos < 0)
                break;
            w[pos] = 1;
        }
    }
    return traces;
}

std::optional<PrimeFieldMatrix> skew_congruent(const PrimeFieldMatrix& m1,
                                               const PrimeFieldMatrix& m2) {
    if (m1.p() != m2.p() || m1.dim() != m2.dim())
        throw error("mismatch", "matrices disagree on p or n");
    for (const PrimeFieldMatrix* m : {&m1, &m2})
        if (!(m->transpose() == -*m))
            throw error("not_skew_symmetric", "input must satisfy M^T = -M");
    int n = m1.dim(), p = m1.p();
    check_guard(n, p);

    for (const PrimeFieldMatrix& s : gl_enumerate(n, p)) {
        if (s * m1 * s.transpose() == m2) {
            if (m1.rank() != m2.rank())
                throw error("internal", "congruent matrices with different ranks");
            return s;
        }
    }
    return std::nullopt;
}

}  // namespace wildclass
