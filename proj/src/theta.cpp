#include "wlm/theta.hpp"

#include "wlm/errors.hpp"

namespace wlm {

namespace {

void check_support(const MotifParameter& p, int k, const RunConfig& cfg) {
    int width = max_support_treewidth(p, cfg);
    if (width > k)
        throw GuardError("theta_support_treewidth",
                         std::to_string(width) +
                             " (the parameter's WL-dimension exceeds the coloring dimension)",
                         std::to_string(k));
    for (const auto& [code, member] : p.support)
        if (member.graph.vertex_count() == 0)
            throw std::invalid_argument("support members must be nonempty graphs");
}

ThetaTable theta_from_colorings(const MotifParameter& p, const std::vector<LabeledGraph>& graphs,
                                const std::vector<Coloring>& colorings, ColorRegistry& reg,
                                int k, const RunConfig& cfg) {
    ThetaTable theta;
    theta.k = k;
    for (const auto& [code, member] : p.support) {
        VertexTuple anchor = default_eta_anchor(member.graph, k, cfg);
        EtaTable eta = build_eta_table_for(member.graph, anchor, graphs, colorings, reg, cfg);
        for (const auto& [color, count] : eta.counts)
            theta.values[color] += member.coeff * Rational(count);
    }
    return theta;
}

} // namespace

ThetaTable build_theta_table(const MotifParameter& p, const std::vector<LabeledGraph>& graphs,
                             int k, ColorRegistry& reg, const RunConfig& cfg) {
    check_support(p, k, cfg);
    reg.bind_dimension(k);
    std::vector<const LabeledGraph*> ptrs;
    ptrs.reserve(graphs.size());
    for (const auto& g : graphs) ptrs.push_back(&g);
    auto [colorings, rounds] = joint_colorings(ptrs, k, reg, -1, cfg);
    (void)rounds;
    return theta_from_colorings(p, graphs, colorings, reg, k, cfg);
}

Rational evaluate_theta(const MotifParameter& p, const LabeledGraph& g, int k, ColorRegistry& reg,
                        const RunConfig& cfg) {
    check_support(p, k, cfg);
    reg.bind_dimension(k);
    std::vector<LabeledGraph> graphs{g};
    auto [colorings, rounds] = joint_colorings({&g}, k, reg, -1, cfg);
    (void)rounds;
    ThetaTable theta = theta_from_colorings(p, graphs, colorings, reg, k, cfg);
    Rational total = 0;
    for (ColorId id : colorings.front().colors) total += theta.values.at(id);
    return total;
}

} // namespace wlm
