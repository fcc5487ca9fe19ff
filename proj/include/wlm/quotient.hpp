#pragma once

#include <variant>
#include <vector>

#include "wlm/canonical.hpp"
#include "wlm/config.hpp"
#include "wlm/labeled_graph.hpp"

namespace wlm {

enum class QuotientReject {
    LoopCreated,            // a block contains adjacent vertices
    VertexLabelClash,       // a block mixes vertex labels
    ParallelEdgeLabelClash, // two blocks joined by edges of distinct labels
};

struct QuotientRejection {
    QuotientReject kind;
    std::string detail;
};

const char* to_string(QuotientReject kind);

// G/p with blocks identified; labeled validity checked. Block i of the
// result is the block containing the i-th smallest block-minimum.
std::variant<LabeledGraph, QuotientRejection> quotient(const LabeledGraph& g, const Partition& p);

struct SpasmMember {
    CanonicalCode code;
    LabeledGraph graph;
    Partition witness; // first partition (in RGS order) producing this member
};

// All valid labeled quotients of h up to isomorphism, sorted by canonical
// code. Always contains h itself. Guarded by cfg.spasm_max_n with a
// Bell-number estimate in the error.
std::vector<SpasmMember> enumerate_spasm(const LabeledGraph& h,
                                         const RunConfig& cfg = RunConfig::defaults());

} // namespace wlm
