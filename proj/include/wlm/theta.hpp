#pragma once

#include "wlm/homcount.hpp"
#include "wlm/motif.hpp"

namespace wlm {

// Per-stable-color rational combination theta(c) = sum of mu_i * eta_i(c);
// summed over all k-tuples of a graph it recovers the parameter value.
struct ThetaTable {
    int k = 1;
    std::map<ColorId, Rational> values;
};

// Requires max support treewidth <= k (a k-dimensional coloring cannot
// determine the parameter otherwise; that maximum is its WL-dimension).
ThetaTable build_theta_table(const MotifParameter& p, const std::vector<LabeledGraph>& graphs,
                             int k, ColorRegistry& reg,
                             const RunConfig& cfg = RunConfig::defaults());

Rational evaluate_theta(const MotifParameter& p, const LabeledGraph& g, int k, ColorRegistry& reg,
                        const RunConfig& cfg = RunConfig::defaults());

} // namespace wlm
