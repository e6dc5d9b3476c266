#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "wildclass/incidence.hpp"
#include "wildclass/iso.hpp"
#include "wildclass/lattice_checks.hpp"

using namespace wildclass;

namespace {

// Boolean lattice of subsets of {0..k-1}, ordered by inclusion.
FiniteLattice boolean_lattice(int k) {
    int n = 1 << k;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            leq[a][b] = (a & b) == a;
    return poset_to_lattice(FinitePoset(leq));
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("distributivity verdicts") {
    CHECK(is_distributive(chain_lattice(1)).distributive);
    CHECK(is_distributive(chain_lattice(4)).distributive);
    CHECK(is_distributive(boolean_lattice(2)).distributive);
    CHECK(is_distributive(boolean_lattice(3)).distributive);

    auto v = is_distributive(diamond_m3());
    REQUIRE_FALSE(v.distributive);
    REQUIRE(v.witness.has_value());
    // witness variables sit among the three middles and reproduce lhs != rhs
    for (int e : {v.witness->x, v.witness->y, v.witness->z})
        CHECK((e >= 1 && e <= 3));
    const FiniteLattice m3 = diamond_m3();
    int lhs = m3.join(m3.meet(v.witness->x, v.witness->y), m3.meet(v.witness->x, v.witness->z));
    int rhs = m3.meet(v.witness->x, m3.join(v.witness->y, v.witness->z));
    CHECK(lhs == v.witness->lhs);
    CHECK(rhs == v.witness->rhs);
    CHECK(lhs != rhs);

    CHECK_FALSE(is_distributive(pentagon_n5()).distributive);
}

TEST_CASE("modularity verdicts") {
    CHECK(is_modular(diamond_m3()).modular);
    auto v = is_modular(pentagon_n5());
    REQUIRE_FALSE(v.modular);
    REQUIRE(v.witness.has_value());
    // re-evaluate the modular law at the witness
    const FiniteLattice n5 = pentagon_n5();
    int x = v.witness->x, a = v.witness->y, b = v.witness->z;
    CHECK(n5.leq(x, b));
    CHECK(n5.join(x, n5.meet(a, b)) != n5.meet(n5.join(x, a), b));

    CHECK(is_modular(chain_lattice(5)).modular);
    CHECK(is_modular(boolean_lattice(3)).modular);
}

TEST_CASE("find_sublattice locates and refutes the patterns") {
    auto in_m3 = find_sublattice(diamond_m3(), SublatticePattern::M3);
    REQUIRE(in_m3.has_value());
    auto els = in_m3->elements();
    std::sort(els.begin(), els.end());
    CHECK(els == std::vector<int>{0, 1, 2, 3, 4});

    CHECK_FALSE(find_sublattice(chain_lattice(7), SublatticePattern::M3));
    CHECK_FALSE(find_sublattice(chain_lattice(7), SublatticePattern::N5));
    CHECK_FALSE(find_sublattice(boolean_lattice(3), SublatticePattern::N5));
    CHECK_FALSE(find_sublattice(boolean_lattice(3), SublatticePattern::M3));

    auto in_n5 = find_sublattice(pentagon_n5(), SublatticePattern::N5);
    REQUIRE(in_n5.has_value());
    CHECK(verify_embedding(pentagon_n5(), *in_n5));
    CHECK_FALSE(find_sublattice(pentagon_n5(), SublatticePattern::M3));
    CHECK_FALSE(find_sublattice(diamond_m3(), SublatticePattern::N5));
}

TEST_CASE("embeddings returned are closed under meet and join") {
    // M3 sits inside the boolean lattice? no — but inside M3 + chains glued,
    // use the direct product of M3 with a 2-chain (10 elements)
    const FiniteLattice m3 = diamond_m3();
    int n = m3.size();
    std::vector<std::vector<int>> meet(2 * n, std::vector<int>(2 * n));
    std::vector<std::vector<int>> join(2 * n, std::vector<int>(2 * n));
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) {
            int ax = a % n, ay = a / n, bx = b % n, by = b / n;
            meet[a][b] = m3.meet(ax, bx) + n * std::min(ay, by);
            join[a][b] = m3.join(ax, bx) + n * std::max(ay, by);
        }
    FiniteLattice prod(meet, join);
    auto e = find_sublattice(prod, SublatticePattern::M3);
    REQUIRE(e.has_value());
    CHECK(verify_embedding(prod, *e));
    CHECK_FALSE(find_sublattice(prod, SublatticePattern::N5));
}

TEST_CASE("birkhoff crosscheck on the reference lattices") {
    BirkhoffReport m3 = birkhoff_crosscheck(diamond_m3());
    CHECK_FALSE(m3.distributive);
    CHECK(m3.modular);
    CHECK(m3.m3.has_value());
    CHECK_FALSE(m3.n5.has_value());

    BirkhoffReport n5 = birkhoff_crosscheck(pentagon_n5());
    CHECK_FALSE(n5.distributive);
    CHECK_FALSE(n5.modular);
    CHECK(n5.n5.has_value());
}

TEST_CASE("enumerate_lattices produces the oracle counts") {
    CHECK(enumerate_lattices(1).size() == 1);
    CHECK(enumerate_lattices(2).size() == 1);
    CHECK(enumerate_lattices(3).size() == 1);
    CHECK(enumerate_lattices(4).size() == 2);
    CHECK(enumerate_lattices(5).size() == 5);
    CHECK(enumerate_lattices(6).size() == 15);
    CHECK(enumerate_lattices(7).size() == 53);

    CHECK_THROWS(enumerate_lattices(0));
    CHECK_THROWS(enumerate_lattices(8));
}

TEST_CASE("enumerated lattices are pairwise non-isomorphic and crosscheck clean") {
    for (int k = 1; k <= 6; ++k) {
        auto lats = enumerate_lattices(k);
        for (size_t i = 0; i < lats.size(); ++i) {
            CHECK(lats[i].size() == k);
            CHECK_NOTHROW(birkhoff_crosscheck(lats[i]));
            for (size_t j = i + 1; j < lats.size(); ++j)
                CHECK_FALSE(lattice_iso(lats[i], lats[j]));
        }
    }
}

TEST_CASE("distributive implies modular on every enumerated lattice") {
    for (int k = 1; k <= 6; ++k)
        for (const FiniteLattice& l : enumerate_lattices(k))
            if (is_distributive(l).distributive)
                CHECK(is_modular(l).modular);
}

TEST_CASE("checker verdicts are invariant under relabeling") {
    std::mt19937 rng(31337);
    std::vector<FiniteLattice> sample{diamond_m3(), pentagon_n5(), boolean_lattice(3),
                                      chain_lattice(6)};
    for (const FiniteLattice& l : enumerate_lattices(5))
        sample.push_back(l);
    for (const FiniteLattice& l : sample) {
        FiniteLattice shuffled = relabel(l, random_permutation(l.size(), rng));
        CHECK(is_distributive(l).distributive == is_distributive(shuffled).distributive);
        CHECK(is_modular(l).modular == is_modular(shuffled).modular);
        CHECK(find_sublattice(l, SublatticePattern::M3).has_value() ==
              find_sublattice(shuffled, SublatticePattern::M3).has_value());
        CHECK(find_sublattice(l, SublatticePattern::N5).has_value() ==
              find_sublattice(shuffled, SublatticePattern::N5).has_value());
    }
}

TEST_CASE("the single-edge extended incidence lattice contains a pentagon") {
    // the five elements {Inf, a1, v1, v2, p12} form an N5: chain
    // Inf < a1 < v1 < p12 with side v2
    UndirectedGraph p2(2, {{0, 1}});
    FiniteLattice l = extended_incidence_lattice(p2);
    auto e = find_sublattice(l, SublatticePattern::N5);
    REQUIRE(e.has_value());
    CHECK(verify_embedding(l, *e));
    CHECK_FALSE(is_modular(l).modular);
    CHECK_FALSE(is_distributive(l).distributive);

    ExtendedIncidenceGraph x = extended_incidence(p2);
    SublatticeEmbedding hand{SublatticePattern::N5, x.inf_node(), x.a_node(0),
                             x.v_node(0), x.v_node(1), x.p_node(0)};
    CHECK(verify_embedding(l, hand));
}
