#include "wlm/wldim.hpp"

#include <algorithm>

#include "wlm/errors.hpp"
#include "wlm/parallel.hpp"

namespace wlm {

namespace {

struct SweepEntry {
    CanonicalCode code;
    const LabeledGraph* graph;
};

DimensionReport report_from_sweep(const std::vector<SweepEntry>& entries, const RunConfig& cfg) {
    DimensionReport report;
    report.support_size = entries.size();
    std::vector<int> widths(entries.size(), 0);
    parallel_for(static_cast<int>(entries.size()), cfg.parallelism,
                 [&](int i) { widths[i] = exact_treewidth(*entries[i].graph, cfg); });
    int mx = 0;
    for (int w : widths) mx = std::max(mx, w);
    report.dimension = std::max(1, mx);
    report.floor_applied = mx < 1;
    report.members.reserve(entries.size());
    bool have_witness = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        report.members.push_back({entries[i].code, entries[i].graph->vertex_count(),
                                  entries[i].graph->edge_count(), widths[i]});
        if (!have_witness && widths[i] == mx) {
            report.witness = *entries[i].graph;
            report.witness_treewidth = widths[i];
            have_witness = true;
        }
    }
    return report;
}

} // namespace

DimensionReport wl_dimension_parameter(const MotifParameter& p, const RunConfig& cfg) {
    std::vector<SweepEntry> entries;
    entries.reserve(p.support.size());
    for (const auto& [code, member] : p.support) entries.push_back({code, &member.graph});
    if (entries.empty()) {
        DimensionReport report;
        report.dimension = 1;
        report.floor_applied = true;
        return report;
    }
    return report_from_sweep(entries, cfg);
}

DimensionReport wl_dimension_sub(const LabeledGraph& h, const RunConfig& cfg) {
    auto spasm = enumerate_spasm(h, cfg);
    std::vector<SweepEntry> entries;
    entries.reserve(spasm.size());
    for (const auto& member : spasm) entries.push_back({member.code, &member.graph});
    return report_from_sweep(entries, cfg);
}

int hereditary_treewidth(const LabeledGraph& h, const RunConfig& cfg) {
    auto spasm = enumerate_spasm(h, cfg);
    std::vector<int> widths(spasm.size(), 0);
    parallel_for(static_cast<int>(spasm.size()), cfg.parallelism,
                 [&](int i) { widths[i] = exact_treewidth(spasm[i].graph, cfg); });
    int mx = 0;
    for (int w : widths) mx = std::max(mx, w);
    return mx;
}

DimensionReport wl_dimension_ind(const LabeledGraph& h, const RunConfig& cfg) {
    const int n = h.vertex_count();

    // clique completion with the smallest edge symbol; it stays in the
    // support with a nonzero coefficient and realizes the maximum treewidth
    std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
    for (const auto& e : h.edges()) edges.emplace_back(e.u, e.v, h.edge_symbol(e));
    if (!h.delta().empty()) {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!h.has_edge(u, v)) edges.emplace_back(u, v, h.delta().front());
    }
    std::vector<std::string> vlabels;
    for (Vertex v = 0; v < n; ++v) vlabels.push_back(h.vertex_symbol(v));
    LabeledGraph completion =
        LabeledGraph::make(h.sigma(), h.delta(), std::move(vlabels), std::move(edges));

    DimensionReport report;
    report.dimension = std::max(1, n - 1);
    report.witness = completion;
    report.witness_treewidth = std::max(0, n - 1);
    report.floor_applied = n - 1 < 1;

    // parameter-route cross-check for small patterns; a mismatch would
    // falsify the completion argument, so it is an internal error
    if (n <= cfg.ind_crosscheck_max_n) {
        MotifParameter p = ind_to_hom(h, cfg);
        DimensionReport via_param = wl_dimension_parameter(p, cfg);
        if (via_param.dimension != report.dimension)
            throw WellDefinednessError("induced dimension formula " +
                                       std::to_string(report.dimension) +
                                       " disagrees with the support sweep " +
                                       std::to_string(via_param.dimension));
        report.support_size = via_param.support_size;
        report.members = std::move(via_param.members);
    }
    return report;
}

DimensionReport wl_dimension_graphlet(int k, const RunConfig& cfg) {
    MotifParameter p = graphlet_parameter(k, cfg);
    DimensionReport report = wl_dimension_parameter(p, cfg);
    if (report.dimension != k - 1)
        throw WellDefinednessError("graphlet dimension came out " +
                                   std::to_string(report.dimension) + ", expected " +
                                   std::to_string(k - 1));
    return report;
}

} // namespace wlm
