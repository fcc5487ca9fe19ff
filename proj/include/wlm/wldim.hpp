#pragma once

#include "wlm/config.hpp"
#include "wlm/motif.hpp"

namespace wlm {

// WL-dimension verdict: the minimal k > 0 such that kWL distinguishes the
// parameter equals the maximum support treewidth, floored at 1 because 0WL
// is undefined.
struct DimensionReport {
    int dimension = 1;
    LabeledGraph witness;      // support member of maximal treewidth
    int witness_treewidth = 0;
    std::size_t support_size = 0;
    struct Member {
        CanonicalCode code;
        int vertices = 0;
        int edges = 0;
        int treewidth = 0;
    };
    std::vector<Member> members; // canonical order
    bool floor_applied = false;  // true when the max treewidth was 0
};

DimensionReport wl_dimension_parameter(const MotifParameter& p,
                                       const RunConfig& cfg = RunConfig::defaults());

// Subgraph counting: spasm enumeration plus a treewidth sweep (the practical
// route; the forbidden-minor algorithm is out of scope by design).
DimensionReport wl_dimension_sub(const LabeledGraph& h,
                                 const RunConfig& cfg = RunConfig::defaults());

// Induced counting: max(1, |V(H)|-1) by the clique-completion argument;
// cross-checked against the parameter route for small patterns.
DimensionReport wl_dimension_ind(const LabeledGraph& h,
                                 const RunConfig& cfg = RunConfig::defaults());

// max treewidth over spasm(h); no dimension floor.
int hereditary_treewidth(const LabeledGraph& h, const RunConfig& cfg = RunConfig::defaults());

// k-graphlet counting has dimension k-1 with the k-clique as witness.
DimensionReport wl_dimension_graphlet(int k, const RunConfig& cfg = RunConfig::defaults());

} // namespace wlm
