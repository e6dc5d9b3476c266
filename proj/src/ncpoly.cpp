#include "wildclass/ncpoly.hpp"

#include <algorithm>

#include "wildclass/error.hpp"

namespace wildclass {

NCPolynomial NCPolynomial::variable(int index) {
    return monomial({index}, 1);
}

NCPolynomial NCPolynomial::constant(int c) {
    return monomial({}, c);
}

NCPolynomial NCPolynomial::monomial(const Word& w, int c) {
    NCPolynomial p;
    if (c != 0)
        p.terms_[w] = c;
    return p;
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& other) const {
    NCPolynomial r = *this;
    for (const auto& [w, c] : other.terms_) {
        int nc = r.terms_[w] + c;
        if (nc == 0)
            r.terms_.erase(w);
        else
            r.terms_[w] = nc;
    }
    return r;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& other) const {
    NCPolynomial r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : other.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            int nc = r.terms_[w] + c1 * c2;
            if (nc == 0)
                r.terms_.erase(w);
            else
                r.terms_[w] = nc;
        }
    return r;
}

NCPolynomial NCPolynomial::scaled(int c) const {
    NCPolynomial r;
    if (c == 0)
        return r;
    for (const auto& [w, coeff] : terms_)
        r.terms_[w] = coeff * c;
    return r;
}

int NCPolynomial::min_arity() const {
    int a = 0;
    for (const auto& [w, c] : terms_)
        for (int v : w)
            a = std::max(a, v + 1);
    return a;
}

PrimeFieldMatrix NCPolynomial::eval(const std::vector<PrimeFieldMatrix>& args) const {
    if (args.empty())
        throw error("mismatch", "polynomial evaluation needs at least one argument matrix");
    int p = args[0].p(), n = args[0].dim();
    for (const auto& m : args)
        if (m.p() != p || m.dim() != n)
            throw error("mismatch", "argument matrices disagree on p or n");
    if (min_arity() > static_cast<int>(args.size()))
        throw error("mismatch", "polynomial uses a variable beyond the argument arity");

    PrimeFieldMatrix acc(p, n);
    for (const auto& [w, c] : terms_) {
        PrimeFieldMatrix prod = PrimeFieldMatrix::identity(p, n);
        for (int v : w)
            prod = prod * args[v];
        acc = acc + prod.scaled(c);
    }
    return acc;
}

std::vector<PrimeFieldMatrix> nc_eval(const NCTemplate& t,
                                      const std::vector<PrimeFieldMatrix>& args) {
    if (static_cast<int>(args.size()) != t.arity)
        throw error("mismatch", "argument tuple size differs from template arity");
    if (args.empty())
        throw error("mismatch", "template arity must be positive");
    int p = args[0].p(), n = args[0].dim();

    std::vector<PrimeFieldMatrix> out;
    out.reserve(t.matrices.size());
    for (const NCMatrix& tm : t.matrices) {
        if (tm.rows != tm.cols)
            throw error("mismatch", "template matrices must be square");
        // each polynomial entry evaluates to an n x n block
        PrimeFieldMatrix big(p, tm.rows * n);
        for (int i = 0; i < tm.rows; ++i)
            for (int j = 0; j < tm.cols; ++j) {
                PrimeFieldMatrix block = tm.at(i, j).eval(args);
                for (int bi = 0; bi < n; ++bi)
                    for (int bj = 0; bj < n; ++bj)
                        big.set(i * n + bi, j * n + bj, block.at(bi, bj));
            }
        out.push_back(std::move(big));
    }
    return out;
}

ContainmentReport containment_check_instance(const NCTemplate& t,
                                             const std::vector<PrimeFieldMatrix>& a,
                                             const std::vector<PrimeFieldMatrix>& a2,
                                             const EquivalenceOracle& equiv_src,
                                             const EquivalenceOracle& equiv_dst) {
    ContainmentReport r{};
    r.src_equivalent = equiv_src(a, a2);
    r.dst_equivalent = equiv_dst(nc_eval(t, a), nc_eval(t, a2));
    r.agree = r.src_equivalent == r.dst_equivalent;
    return r;
}

}  // namespace wildclass
