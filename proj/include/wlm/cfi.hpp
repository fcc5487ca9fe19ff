#pragma once

#include <optional>

#include "wlm/config.hpp"
#include "wlm/gf2.hpp"
#include "wlm/labeled_graph.hpp"
#include "wlm/rational.hpp"

namespace wlm {

// CCFI(base, U): one product vertex per (base vertex v, incident-edge subset
// S) with |S| congruent mod 2 to membership of v in U; an edge between
// (v,S) and (u,T) exactly when {v,u} is a base edge outside the symmetric
// difference of S and T. Vertex and edge labels are inherited from the base.
struct CfiGraph {
    LabeledGraph base;
    std::vector<Vertex> twist_set; // U, sorted
    LabeledGraph product;
    // provenance[p] = (base vertex, sorted incident base-edge indices of S)
    std::vector<std::pair<Vertex, std::vector<int>>> provenance;

    Vertex project(Vertex product_vertex) const { return provenance[product_vertex].first; }
};

CfiGraph ccfi(const LabeledGraph& base, std::vector<Vertex> twist,
              const RunConfig& cfg = RunConfig::defaults());

// CCFI(base, {v0}) with v0 the lowest vertex index; any odd twist set gives
// an isomorphic graph.
CfiGraph ccfi_twist(const LabeledGraph& base, const RunConfig& cfg = RunConfig::defaults());

// is_isomorphic(ccfi(g,u), ccfi(g,u2)); true whenever |u| = |u2| mod 2.
bool verify_parity_iso(const LabeledGraph& base, const std::vector<Vertex>& u,
                       const std::vector<Vertex>& u2, const RunConfig& cfg = RunConfig::defaults());

enum class Parity { Odd, Even, Neither };

const char* to_string(Parity p);

// Parity of |N_F(a) cap phi^-1(v)| quantified over every neighbor v of
// phi(a); Neither when the parities disagree. An image without neighbors is
// vacuously both; reported odd so that singleton preimages over a one-vertex
// target satisfy the oddomorphism counting condition.
Parity classify_vertex(const Homomorphism& phi, const LabeledGraph& f, const LabeledGraph& g,
                       Vertex a);

struct OddomorphismWitness {
    std::vector<Vertex> subgraph_vertices;                  // F', sorted
    std::vector<std::pair<Vertex, Vertex>> subgraph_edges;  // edges of F'
    Homomorphism phi;                                       // on all of V(F)
    std::vector<Vertex> odd_vertices;                       // sorted
};

// Searches Hom(F,G) in lexicographic order for a homomorphism whose twist
// system is inconsistent and extracts the oddomorphism witness from the
// Fredholm certificate; falls back to exhaustive subgraph search when the
// target is disconnected. Returns nothing when no weak oddomorphism exists.
std::optional<OddomorphismWitness> find_weak_oddomorphism(
    const LabeledGraph& f, const LabeledGraph& g, const RunConfig& cfg = RunConfig::defaults());

// Independent re-check of both oddomorphism conditions.
bool validate_oddomorphism(const OddomorphismWitness& witness, const LabeledGraph& f,
                           const LabeledGraph& g);

// Number of Z_2 solutions of the per-vertex parity equations plus the
// per-edge agreement equations for phi; equals |Hom_phi(F, CCFI(G,U))|.
BigInt gf2_hom_count(const LabeledGraph& f, const LabeledGraph& g, const std::vector<Vertex>& u,
                     const Homomorphism& phi, const RunConfig& cfg = RunConfig::defaults());

// Builds the agreement system itself (vertex rows first, then edge rows).
Gf2System cfi_hom_system(const LabeledGraph& f, const LabeledGraph& g,
                         const std::vector<Vertex>& u, const Homomorphism& phi);

// Connected gadget with positive homomorphism counts from every labeled
// graph with at most n vertices over the given alphabets: all labeled
// n-cliques up to isomorphism plus an apex wired to one vertex of each,
// apex labels lexicographically smallest.
LabeledGraph rainbow_anchor(const std::vector<std::string>& sigma,
                            const std::vector<std::string>& delta, int n,
                            const RunConfig& cfg = RunConfig::defaults());

// The lower-bound witnesses for a pattern of treewidth >= 2: CCFI of a
// maximal-treewidth component (plain and twisted) each joined with the
// rainbow anchor. The pair is (tw-1)WL-equivalent yet has different
// homomorphism counts from the pattern.
struct CounterexamplePair {
    LabeledGraph left, right;
    int k = 1;
};

CounterexamplePair counterexample_pair(const LabeledGraph& f,
                                       const RunConfig& cfg = RunConfig::defaults());

} // namespace wlm
