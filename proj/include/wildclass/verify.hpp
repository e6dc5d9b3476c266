#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wildclass/graph.hpp"
#include "wildclass/group.hpp"
#include "wildclass/lattice.hpp"
#include "wildclass/lattice_checks.hpp"

namespace wildclass {

// --- small-graph enumeration -------------------------------------------------

// All 2^C(n,2) labeled graphs on exactly n vertices.
std::vector<UndirectedGraph> all_labeled_graphs(int n);

// One representative per isomorphism class of graphs on exactly n vertices
// (1,2,4,11 classes for n = 1..4).
std::vector<UndirectedGraph> graph_classes(int n);

// --- pipeline: group <-> gamma-digraph equivalence ----------------------------

struct PairAgreement {
    std::string left, right;
    bool first_equivalent;   // source-side verdict
    bool second_equivalent;  // image-side verdict
    bool agree;
};

struct Theorem2Report {
    std::vector<std::pair<int, int>> groups_per_order;  // (order, count), ascending
    std::vector<PairAgreement> pairs;  // all unordered pairs incl. reflexive
    int disagreements;
    bool all_agree;
};

// Exhaustively checks, over the group catalog restricted to order <= max_order
// (the order-27 negative pair heisenberg(3) / cyclic(27) is always included),
// that two groups are isomorphic iff their gamma digraphs are. max_order <= 8.
Theorem2Report verify_theorem2(int max_order);

// --- pipeline: graph <-> extended-incidence-lattice equivalence ---------------

struct Theorem3Report {
    std::vector<int> classes_per_size;  // index v = #classes on v vertices
    std::vector<PairAgreement> pairs;
    int disagreements;
    bool all_agree;
};

// Exhaustively checks, over all graph classes with 1..max_n vertices, that
// two graphs are isomorphic iff their extended incidence lattices are.
// max_n <= 4.
Theorem3Report verify_theorem3(int max_n);

// --- pipeline: lattice-property adjudication -----------------------------------

// The construction behind verify_theorem3 is claimed to always produce
// distributive (hence modular, M3-free and N5-free) lattices. This pipeline
// runs all four checkers on every extended incidence lattice at scale and
// reports, per lattice, where the exhaustive search agrees or disagrees
// with that claim.
struct LatticeAdjudication {
    std::string graph_name;  // e.g. "n=2 edges={1-2}"
    int lattice_size;
    bool distributive;
    bool modular;
    std::optional<SublatticeEmbedding> m3;
    std::optional<SublatticeEmbedding> n5;
    bool matches_claim;  // claim: distributive, modular, no M3, no N5
};

struct Theorem4Report {
    std::vector<LatticeAdjudication> rows;
    int refuting;       // rows where the claim fails
    bool claim_holds;   // true iff refuting == 0
};

Theorem4Report verify_theorem4(int max_n);

// Human-readable report renderings used by the CLI.
std::string render(const Theorem2Report& r);
std::string render(const Theorem3Report& r);
std::string render(const Theorem4Report& r);

}  // namespace wildclass
