#include "wildclass/lattice_checks.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>

#include "wildclass/error.hpp"
#include "wildclass/incidence.hpp"
#include "wildclass/iso.hpp"

namespace wildclass {

DistributivityVerdict is_distributive(const FiniteLattice& l) {
    int n = l.size();
    DistributivityVerdict v{true, std::nullopt};
    for (int x = 0; x < n && v.distributive; ++x)
        for (int y = 0; y < n && v.distributive; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = l.join(l.meet(x, y), l.meet(x, z));
                int rhs = l.meet(x, l.join(y, z));
                if (lhs != rhs) {
                    v.distributive = false;
                    v.witness = WitnessTriple{x, y, z, lhs, rhs};
                    break;
                }
            }
    // the dual identity must give the same verdict (lattice duality)
    bool dual_holds = true;
    for (int x = 0; x < n && dual_holds; ++x)
        for (int y = 0; y < n && dual_holds; ++y)
            for (int z = 0; z < n; ++z)
                if (l.meet(l.join(x, y), l.join(x, z)) != l.join(x, l.meet(y, z))) {
                    dual_holds = false;
                    break;
                }
    if (dual_holds != v.distributive)
        throw error("crosscheck_failed",
                    "the two distributivity identities disagree; implementation bug");
    return v;
}

ModularityVerdict is_modular(const FiniteLattice& l) {
    int n = l.size();
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!l.leq(x, b))
                    continue;
                int lhs = l.join(x, l.meet(a, b));
                int rhs = l.meet(l.join(x, a), b);
                if (lhs != rhs)
                    return {false, WitnessTriple{x, a, b, lhs, rhs}};
            }
    return {true, std::nullopt};
}

bool verify_embedding(const FiniteLattice& l, const SublatticeEmbedding& e) {
    std::vector<int> els = e.elements();
    std::sort(els.begin(), els.end());
    if (std::adjacent_find(els.begin(), els.end()) != els.end())
        return false;
    for (int x : els)
        if (x < 0 || x >= l.size())
            return false;
    // closure under the host operations
    for (int x : els)
        for (int y : els) {
            if (!std::binary_search(els.begin(), els.end(), l.meet(x, y)))
                return false;
            if (!std::binary_search(els.begin(), els.end(), l.join(x, y)))
                return false;
        }
    int o = e.bottom, i = e.top;
    auto strictly_between = [&](int w) {
        return l.meet(o, w) == o && l.join(w, i) == i && w != o && w != i;
    };
    if (!strictly_between(e.x) || !strictly_between(e.y) || !strictly_between(e.z))
        return false;
    if (e.pattern == SublatticePattern::M3) {
        // three middles meeting pairwise in bottom and joining pairwise in top
        for (auto [s, t] : {std::pair{e.x, e.y}, {e.x, e.z}, {e.y, e.z}})
            if (l.meet(s, t) != o || l.join(s, t) != i)
                return false;
        return true;
    }
    // N5: chain x < y, side z incomparable to both
    if (l.meet(e.x, e.y) != e.x || e.x == e.y)
        return false;
    return l.meet(e.x, e.z) == o && l.join(e.x, e.z) == i &&
           l.meet(e.y, e.z) == o && l.join(e.y, e.z) == i;
}

std::optional<SublatticeEmbedding> find_sublattice(const FiniteLattice& l,
                                                   SublatticePattern pattern) {
    int n = l.size();
    // Any M3 sublattice is determined by its middles {x,y,z}: the bottom and
    // top are then forced to be the pairwise meets/joins. Likewise an N5 is
    // determined by its chain pair (x,y) and side z. Scanning all triples is
    // therefore exhaustive.
    if (pattern == SublatticePattern::M3) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                int o = l.meet(x, y), i = l.join(x, y);
                if (o == x || o == y || i == x || i == y)
                    continue;
                for (int z = y + 1; z < n; ++z) {
                    if (z == o || z == i)
                        continue;
                    if (l.meet(x, z) != o || l.meet(y, z) != o)
                        continue;
                    if (l.join(x, z) != i || l.join(y, z) != i)
                        continue;
                    SublatticeEmbedding e{pattern, o, x, y, z, i};
                    if (!verify_embedding(l, e))
                        throw error("crosscheck_failed", "M3 candidate fails re-verification");
                    return e;
                }
            }
        return std::nullopt;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || l.meet(x, y) != x)
                continue;  // need the strict chain x < y
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y)
                    continue;
                int o = l.meet(x, z), i = l.join(x, z);
                if (o == x || o == z || i == x || i == z)
                    continue;  // z comparable to x
                if (l.meet(y, z) != o || l.join(y, z) != i)
                    continue;
                if (o == y || i == y)
                    continue;
                SublatticeEmbedding e{pattern, o, x, y, z, i};
                if (!verify_embedding(l, e))
                    throw error("crosscheck_failed", "N5 candidate fails re-verification");
                return e;
            }
        }
    return std::nullopt;
}

BirkhoffReport birkhoff_crosscheck(const FiniteLattice& l) {
    BirkhoffReport r{};
    r.distributive = is_distributive(l).distributive;
    r.modular = is_modular(l).modular;
    r.m3 = find_sublattice(l, SublatticePattern::M3);
    r.n5 = find_sublattice(l, SublatticePattern::N5);
    if (r.distributive != (!r.m3 && !r.n5))
        throw error("crosscheck_failed",
                    "distributivity disagrees with M3/N5 absence; implementation bug");
    if (r.modular != !r.n5)
        throw error("crosscheck_failed",
                    "modularity disagrees with N5 absence; implementation bug");
    if (r.distributive && !r.modular)
        throw error("crosscheck_failed", "distributive lattice claimed non-modular");
    r.consistent = true;
    return r;
}

namespace {

FiniteLattice lattice_from_order(const std::vector<std::vector<bool>>& leq) {
    return poset_to_lattice(FinitePoset(leq));
}

}  // namespace

FiniteLattice diamond_m3() {
    // 0 bottom, 1/2/3 middles, 4 top
    std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
    for (int i = 0; i < 5; ++i)
        leq[i][i] = true;
    for (int mid : {1, 2, 3}) {
        leq[0][mid] = true;
        leq[mid][4] = true;
    }
    leq[0][4] = true;
    return lattice_from_order(leq);
}

FiniteLattice pentagon_n5() {
    // 0 bottom, chain 1 < 2, side 3, top 4
    std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
    for (int i = 0; i < 5; ++i)
        leq[i][i] = true;
    leq[0][1] = leq[0][2] = leq[0][3] = leq[0][4] = true;
    leq[1][2] = leq[1][4] = true;
    leq[2][4] = true;
    leq[3][4] = true;
    return lattice_from_order(leq);
}

FiniteLattice chain_lattice(int k) {
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            leq[i][j] = true;
    return lattice_from_order(leq);
}

namespace {

// cheap isomorphism invariant: sorted (down-set size, up-set size) profile
std::vector<std::pair<int, int>> updown_profile(const FinitePoset& p) {
    std::vector<std::pair<int, int>> prof(p.size());
    for (int x = 0; x < p.size(); ++x) {
        int down = 0, up = 0;
        for (int y = 0; y < p.size(); ++y) {
            down += p.leq(y, x);
            up += p.leq(x, y);
        }
        prof[x] = {down, up};
    }
    std::sort(prof.begin(), prof.end());
    return prof;
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(int k) {
    if (k < 1 || k > 7)
        throw error("scale_guard", "enumerate_lattices supports 1 <= k <= 7", {k});

    // Every finite poset admits a linear extension, so every isomorphism
    // class shows up among the strict orders contained in 0 < 1 < ... < k-1.
    // Enumerate those via the k(k-1)/2 upper-triangle bits, keep the
    // transitive ones that carry bottom and top and are lattices, and
    // deduplicate by poset isomorphism.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            slots.emplace_back(i, j);
    int bits = static_cast<int>(slots.size());

    std::vector<FiniteLattice> found;
    std::vector<std::vector<std::pair<int, int>>> found_profiles;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
        std::array<unsigned, 8> up{};  // up[i] = bitset of j > i with i < j
        for (int s = 0; s < bits; ++s)
            if (mask >> s & 1)
                up[slots[s].first] |= 1u << slots[s].second;
        bool transitive = true;
        for (int i = 0; i < k && transitive; ++i)
            for (unsigned rest = up[i]; rest;) {
                int j = std::countr_zero(rest);
                rest &= rest - 1;
                if ((up[j] & ~up[i]) != 0) {
                    transitive = false;
                    break;
                }
            }
        if (!transitive)
            continue;
        // bottom: below all others; top: above all others
        bool has_bottom = false, has_top = false;
        for (int i = 0; i < k; ++i) {
            unsigned below = 0;
            for (int j = 0; j < k; ++j)
                if (up[j] >> i & 1)
                    below |= 1u << j;
            if (static_cast<int>(std::popcount(up[i])) == k - 1)
                has_bottom = true;
            if (static_cast<int>(std::popcount(below)) == k - 1)
                has_top = true;
        }
        if (!has_bottom || !has_top)
            continue;

        std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
        for (int i = 0; i < k; ++i) {
            leq[i][i] = true;
            for (int j = 0; j < k; ++j)
                if (up[i] >> j & 1)
                    leq[i][j] = true;
        }
        FinitePoset poset(std::move(leq));
        std::optional<FiniteLattice> lat;
        try {
            lat = poset_to_lattice(poset);
        } catch (const error&) {
            continue;  // some pair has no meet or no join
        }

        auto profile = updown_profile(poset);
        bool duplicate = false;
        for (size_t i = 0; i < found.size(); ++i) {
            if (found_profiles[i] != profile)
                continue;
            if (lattice_iso(found[i], *lat)) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            found.push_back(std::move(*lat));
            found_profiles.push_back(std::move(profile));
        }
    }
    return found;
}

}  // namespace wildclass
