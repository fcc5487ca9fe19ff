#pragma once

#include <string>

#include "wlm/config.hpp"
#include "wlm/labeled_graph.hpp"

namespace wlm {

// Opaque code, equal exactly for isomorphic labeled graphs. Built by
// exhaustive class-respecting permutation search after invariant refinement;
// guarded by cfg.canonical_max_n.
using CanonicalCode = std::string;

CanonicalCode canonical_form(const LabeledGraph& g,
                             const RunConfig& cfg = RunConfig::defaults());

// Label-preserving bijection with the edge biconditional. Backtracking
// search over refinement-compatible maps; guarded by cfg.iso_max_n.
bool is_isomorphic(const LabeledGraph& g, const LabeledGraph& h,
                   const RunConfig& cfg = RunConfig::defaults());

// Number of label-preserving self-isomorphisms; guarded by cfg.aut_max_n.
long long automorphism_count(const LabeledGraph& g,
                             const RunConfig& cfg = RunConfig::defaults());

// Atomic type of a k-tuple: equal codes exactly when the entrywise mapping
// between the tuples is an isomorphism of the induced labeled subgraphs,
// position- and repetition-aware.
using AtpCode = std::string;

AtpCode atomic_type(const LabeledGraph& g, const VertexTuple& t);

} // namespace wlm
