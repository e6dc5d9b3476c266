#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wildclass/lattice.hpp"

namespace wildclass {

// Witness for a violated three-variable lattice identity: evaluating the
// identity at (x,y,z) gives lhs != rhs.
struct WitnessTriple {
    int x, y, z;
    int lhs, rhs;
};

struct DistributivityVerdict {
    bool distributive;
    std::optional<WitnessTriple> witness;  // lexicographically least
};

// Checks (x ^ y) v (x ^ z) = x ^ (y v z) over all triples; also evaluates
// the dual identity and asserts both verdicts agree (they must, by lattice
// duality — a mismatch throws "crosscheck_failed").
DistributivityVerdict is_distributive(const FiniteLattice& l);

struct ModularityVerdict {
    bool modular;
    // least (x,a,b) with x <= b and x v (a ^ b) != (x v a) ^ b
    std::optional<WitnessTriple> witness;
};

ModularityVerdict is_modular(const FiniteLattice& l);

enum class SublatticePattern { M3, N5 };

// Five host elements closed under meet and join whose induced tables match
// the pattern. Layout: {bottom, x, y, z, top} where for M3 x,y,z are the
// pairwise-incomparable middles and for N5 x < y is the chain and z the
// side element.
struct SublatticeEmbedding {
    SublatticePattern pattern;
    int bottom, x, y, z, top;

    std::vector<int> elements() const { return {bottom, x, y, z, top}; }
};

// Exhaustive search for a sublattice isomorphic to the pattern. Every M3
// (resp. N5) sublattice is determined by its three middles (resp. chain +
// side), so scanning all element triples is exhaustive. The returned
// embedding is re-verified for closure before being handed out.
std::optional<SublatticeEmbedding> find_sublattice(const FiniteLattice& l,
                                                   SublatticePattern pattern);

// Checks the embedding's five elements are distinct, closed under the
// host's meet/join, and shaped like the pattern.
bool verify_embedding(const FiniteLattice& l, const SublatticeEmbedding& e);

struct BirkhoffReport {
    bool distributive;
    bool modular;
    std::optional<SublatticeEmbedding> m3;
    std::optional<SublatticeEmbedding> n5;
    bool consistent;  // always true on return; inconsistency throws
};

// Cross-validates the identity-based checkers against forbidden-sublattice
// search: distributive <=> no M3 and no N5; modular <=> no N5. A violated
// equivalence signals an implementation bug and throws "crosscheck_failed".
BirkhoffReport birkhoff_crosscheck(const FiniteLattice& l);

// All isomorphism classes of lattices with exactly k elements (1 <= k <= 7),
// computed by enumerating order relations compatible with the natural
// linear order, filtering by lattice-ness and deduplicating by poset
// isomorphism. Independent oracle for the checkers above.
std::vector<FiniteLattice> enumerate_lattices(int k);

// Fixed 5-element reference lattices.
FiniteLattice diamond_m3();
FiniteLattice pentagon_n5();
FiniteLattice chain_lattice(int k);

}  // namespace wildclass
