#include "wlm/quotient.hpp"

#include <algorithm>
#include <map>

#include "wlm/errors.hpp"
#include "wlm/partitions.hpp"

namespace wlm {

const char* to_string(QuotientReject kind) {
    switch (kind) {
        case QuotientReject::LoopCreated: return "LoopCreated";
        case QuotientReject::VertexLabelClash: return "VertexLabelClash";
        case QuotientReject::ParallelEdgeLabelClash: return "ParallelEdgeLabelClash";
    }
    return "?";
}

std::variant<LabeledGraph, QuotientRejection> quotient(const LabeledGraph& g, const Partition& p) {
    const int n = g.vertex_count();
    if (!p.is_partition_of(n)) throw std::invalid_argument("not a partition of the vertex set");

    std::vector<int> block_of(n, -1);
    // stable block numbering: order blocks by their minimum element
    std::vector<int> order(p.blocks.size());
    for (std::size_t b = 0; b < p.blocks.size(); ++b) order[b] = static_cast<int>(b);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return *std::min_element(p.blocks[a].begin(), p.blocks[a].end()) <
               *std::min_element(p.blocks[b].begin(), p.blocks[b].end());
    });
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex v : p.blocks[order[i]]) block_of[v] = static_cast<int>(i);

    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& block = p.blocks[order[i]];
        for (Vertex v : block)
            if (g.vertex_label(v) != g.vertex_label(block.front()))
                return QuotientRejection{QuotientReject::VertexLabelClash,
                                         "block containing vertex " + std::to_string(block.front())};
    }

    std::map<std::pair<int, int>, int> merged; // block pair -> delta index
    for (const auto& e : g.edges()) {
        int a = block_of[e.u], b = block_of[e.v];
        if (a == b)
            return QuotientRejection{QuotientReject::LoopCreated,
                                     "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                         "} inside one block"};
        auto key = std::minmax(a, b);
        auto [it, inserted] = merged.insert({{key.first, key.second}, e.label});
        if (!inserted && it->second != e.label)
            return QuotientRejection{QuotientReject::ParallelEdgeLabelClash,
                                     "blocks " + std::to_string(key.first) + " and " +
                                         std::to_string(key.second)};
    }

    std::vector<std::string> vlabels(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        vlabels[i] = g.vertex_symbol(p.blocks[order[i]].front());
    std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
    edges.reserve(merged.size());
    for (const auto& [key, lbl] : merged)
        edges.emplace_back(key.first, key.second, g.delta()[lbl]);
    return LabeledGraph::make(g.sigma(), g.delta(), std::move(vlabels), std::move(edges));
}

std::vector<SpasmMember> enumerate_spasm(const LabeledGraph& h, const RunConfig& cfg) {
    const int n = h.vertex_count();
    if (n > cfg.spasm_max_n)
        throw GuardError("spasm_max_n",
                         std::to_string(n) + " vertices (Bell ~" + bell_number_string(n) + ")",
                         std::to_string(cfg.spasm_max_n));

    std::map<CanonicalCode, SpasmMember> members;
    for_each_partition(n, [&](const std::vector<int>& rgs) {
        Partition p = Partition::from_rgs(rgs);
        auto q = quotient(h, p);
        if (auto* graph = std::get_if<LabeledGraph>(&q)) {
            CanonicalCode code = canonical_form(*graph, cfg);
            members.try_emplace(code, SpasmMember{code, std::move(*graph), std::move(p)});
        }
        return true;
    });

    std::vector<SpasmMember> out;
    out.reserve(members.size());
    for (auto& [code, m] : members) out.push_back(std::move(m));
    return out;
}

} // namespace wlm
