#pragma once

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>

#include "wlm/config.hpp"
#include "wlm/labeled_graph.hpp"
#include "wlm/rational.hpp"
#include "wlm/treewidth.hpp"
#include "wlm/wl_refine.hpp"

namespace wlm {

// Exact count of label- and edge-preserving maps by backtracking.
BigInt count_homs_bruteforce(const LabeledGraph& f, const LabeledGraph& g,
                             const RunConfig& cfg = RunConfig::defaults());

// Enumerates Hom(f,g) in lexicographic order of the image tuple (vertex 0
// first). fn may return false to stop. Guarded by `budget` candidate maps.
void enumerate_homomorphisms(const LabeledGraph& f, const LabeledGraph& g, long long budget,
                             const std::function<bool(const std::vector<Vertex>&)>& fn);

// Junction-tree counting over a nice tree decomposition; agrees with the
// brute force on the overlap of their guards.
BigInt count_homs_td(const LabeledGraph& f, const LabeledGraph& g,
                     const RunConfig& cfg = RunConfig::defaults());

// |{h in Hom(f,g) : h(anchor_j) = pin_j for all j}|. The anchor entries must
// be distinct and realizable as a bag of a width-|anchor| nice decomposition
// of f (checked via the treewidth of f plus a clique on the anchor).
BigInt count_homs_extending(const LabeledGraph& f, const VertexTuple& anchor,
                            const LabeledGraph& g, const VertexTuple& pin,
                            const RunConfig& cfg = RunConfig::defaults());

// All partial counts extending anchor -> * at once: assignments of the
// sorted anchor set to target vertices, with their extension counts.
// Assignments absent from the map extend to zero homomorphisms.
struct PartialCounts {
    std::vector<Vertex> anchor_set; // sorted, distinct
    std::map<std::vector<Vertex>, BigInt> counts;
};
PartialCounts partial_hom_counts(const LabeledGraph& f, const std::vector<Vertex>& anchor_set,
                                 const LabeledGraph& g,
                                 const RunConfig& cfg = RunConfig::defaults());

// Per-stable-color partial homomorphism counts. Within one session any two
// k-tuples with equal stable color must have equal partial counts; a
// violation fails loudly (WellDefinednessError).
struct EtaTable {
    LabeledGraph pattern;
    VertexTuple anchor;
    int k = 1;
    std::map<ColorId, BigInt> counts;
};

EtaTable build_eta_table(const LabeledGraph& f, const VertexTuple& anchor,
                         const std::vector<LabeledGraph>& graphs, int k, ColorRegistry& reg,
                         const RunConfig& cfg = RunConfig::defaults());

// Anchor used when the caller does not supply one: a size-<=k bag of an
// optimal decomposition, ascending vertex order, padded to length k by
// repeating the last entry.
VertexTuple default_eta_anchor(const LabeledGraph& f, int k,
                               const RunConfig& cfg = RunConfig::defaults());

// eta table variant against already-computed joint colorings.
EtaTable build_eta_table_for(const LabeledGraph& f, const VertexTuple& anchor,
                             const std::vector<LabeledGraph>& graphs,
                             const std::vector<Coloring>& colorings, ColorRegistry& reg,
                             const RunConfig& cfg = RunConfig::defaults());

} // namespace wlm
