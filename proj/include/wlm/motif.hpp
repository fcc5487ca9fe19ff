#pragma once

#include <functional>
#include <map>

#include "wlm/canonical.hpp"
#include "wlm/config.hpp"
#include "wlm/labeled_graph.hpp"
#include "wlm/quotient.hpp"
#include "wlm/rational.hpp"
#include "wlm/treewidth.hpp"

namespace wlm {

// Finite rational linear combination of homomorphism counts, keyed by
// canonical code; representatives pairwise non-isomorphic, coefficients
// nonzero after normalization.
struct MotifMember {
    LabeledGraph graph;
    Rational coeff;
};

struct MotifParameter {
    std::map<CanonicalCode, MotifMember> support;

    void add(const LabeledGraph& g, const Rational& c,
             const RunConfig& cfg = RunConfig::defaults());
    void add_scaled(const MotifParameter& other, const Rational& scale);
    void normalize(); // drop exact zeros
    std::size_t size() const { return support.size(); }
};

MotifParameter single_hom_parameter(const LabeledGraph& f, const Rational& mu,
                                    const RunConfig& cfg = RunConfig::defaults());

// sum of mu_i * homs(F_i, G), exact.
Rational evaluate_parameter(const MotifParameter& p, const LabeledGraph& g,
                            const RunConfig& cfg = RunConfig::defaults());

// Subgraph counting in the homomorphism basis: Moebius inversion over the
// partition lattice (invalid labeled quotients contribute zero), divided by
// the automorphism count. The surviving support is exactly spasm(H).
MotifParameter sub_to_hom(const LabeledGraph& h, const RunConfig& cfg = RunConfig::defaults());

// Injective-homomorphism counts in the homomorphism basis (sub_to_hom
// without the automorphism division).
MotifParameter inj_to_hom(const LabeledGraph& h, const RunConfig& cfg = RunConfig::defaults());

// Induced-subgraph counting: signed sum over labeled edge-supersets (each
// missing pair absent or carrying one of the |Delta| labels), composed with
// the injective expansion and normalized.
MotifParameter ind_to_hom(const LabeledGraph& h, const RunConfig& cfg = RunConfig::defaults());

// Connected induced k-vertex subgraph counting, single-label alphabets.
MotifParameter graphlet_parameter(int k, const RunConfig& cfg = RunConfig::defaults());

// Number of independent vertex sets of size exactly k, single-label
// alphabets (Ind of the edgeless pattern).
MotifParameter independent_set_parameter(int k, const RunConfig& cfg = RunConfig::defaults());

int max_support_treewidth(const MotifParameter& p, const RunConfig& cfg = RunConfig::defaults());

// Alternating sum over edge-subsets of K_k whose subgraph satisfies the
// predicate; nonzero for connectedness exactly when the k-clique is in the
// graphlet support.
long long clique_coefficient_criterion(int k, const std::function<bool(const Shape&)>& property,
                                       const RunConfig& cfg = RunConfig::defaults());

bool shape_connected(const Shape& s);

} // namespace wlm
