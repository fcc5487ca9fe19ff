#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wlm/config.hpp"
#include "wlm/labeled_graph.hpp"

namespace wlm {

// Unlabeled view of a graph; treewidth ignores labels.
struct Shape {
    int n = 0;
    std::vector<std::uint64_t> adj; // bitmask rows

    bool has_edge(Vertex u, Vertex v) const { return (adj[u] >> v) & 1; }
    void add_edge(Vertex u, Vertex v) {
        adj[u] |= std::uint64_t(1) << v;
        adj[v] |= std::uint64_t(1) << u;
    }
    static Shape of(const LabeledGraph& g);
};

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;      // each bag sorted
    std::vector<std::pair<int, int>> tree_edges;

    int width() const;
};

struct TdReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Exact treewidth via subset DP over elimination orderings; empty and
// edgeless graphs have treewidth 0. Guarded by cfg.tw_max_n.
int exact_treewidth(const Shape& s, const RunConfig& cfg = RunConfig::defaults());
int exact_treewidth(const LabeledGraph& g, const RunConfig& cfg = RunConfig::defaults());

// Optimal-width decomposition from an optimal elimination ordering.
TreeDecomposition tree_decomposition(const Shape& s, const RunConfig& cfg = RunConfig::defaults());
TreeDecomposition tree_decomposition(const LabeledGraph& g,
                                     const RunConfig& cfg = RunConfig::defaults());

// Checks both tree-decomposition conditions (plus tree-ness and vertex
// coverage); violations are reported, not thrown.
TdReport validate_td(const Shape& s, const TreeDecomposition& td);
TdReport validate_td(const LabeledGraph& g, const TreeDecomposition& td);

// Rooted decomposition whose non-root nodes are introduce / forget / split
// nodes relative to their parent; childless non-root bags are singletons.
struct NiceTreeDecomposition {
    enum class Kind { Root, Introduce, Forget, Split };
    struct Node {
        std::vector<Vertex> bag; // sorted
        Kind kind = Kind::Root;
        int parent = -1;
        std::vector<int> children;
        Vertex pivot = -1; // the introduced / forgotten vertex
    };
    std::vector<Node> nodes;
    int root = 0;

    int width() const;
};

// Same width as td. When root_bag is nonempty it must be a subset of some
// bag; the result is rooted at a node whose bag equals root_bag exactly.
NiceTreeDecomposition make_nice(const TreeDecomposition& td,
                                const std::vector<Vertex>& root_bag = {});

TdReport validate_nice(const Shape& s, const NiceTreeDecomposition& ntd);

} // namespace wlm
