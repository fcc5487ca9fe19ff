#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace wlm {

using Vertex = int;

// Ordered tuple of vertices, repeats allowed. Houses the k-tuples the WL
// test colors as well as anchors and pins for partial homomorphism counts.
using VertexTuple = std::vector<Vertex>;

// Vertex map from a source graph into a target graph.
struct Homomorphism {
    std::vector<Vertex> map; // map[source vertex] = target vertex
};

// Partition of 0..n-1 into disjoint nonempty blocks.
struct Partition {
    std::vector<std::vector<Vertex>> blocks;

    static Partition singletons(int n);
    static Partition from_rgs(const std::vector<int>& rgs);
    bool is_partition_of(int n) const;
};

// Finite simple graph with vertex labels over sigma and edge labels over
// delta. No self-loops, at most one (labeled) edge per unordered pair.
// Vertices are 0..n-1; alphabets are kept sorted so that lexicographic label
// order is reproducible. Immutable after construction.
class LabeledGraph {
public:
    struct Edge {
        Vertex u, v; // u < v
        int label;   // index into delta()
    };

    LabeledGraph() = default;

    // Validates every invariant; throws ParseError naming the violation.
    static LabeledGraph make(std::vector<std::string> sigma,
                             std::vector<std::string> delta,
                             std::vector<std::string> vertex_labels,
                             std::vector<std::tuple<Vertex, Vertex, std::string>> edges);

    int vertex_count() const { return static_cast<int>(vlabel_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& sigma() const { return sigma_; }
    const std::vector<std::string>& delta() const { return delta_; }

    int vertex_label(Vertex v) const { return vlabel_[v]; }
    const std::string& vertex_symbol(Vertex v) const { return sigma_[vlabel_[v]]; }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& edge_symbol(const Edge& e) const { return delta_[e.label]; }

    // neighbors of v as (neighbor, delta index), sorted by neighbor
    const std::vector<std::pair<Vertex, int>>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(Vertex u, Vertex v) const { return edge_label(u, v).has_value(); }
    std::optional<int> edge_label(Vertex u, Vertex v) const;

    bool same_alphabets(const LabeledGraph& other) const {
        return sigma_ == other.sigma_ && delta_ == other.delta_;
    }

    bool is_connected() const;
    // vertex sets of connected components, each sorted, ordered by minimum vertex
    std::vector<std::vector<Vertex>> components() const;
    // induced subgraph on the given (sorted) vertices, reindexed to 0..k-1
    LabeledGraph induced(const std::vector<Vertex>& vertices) const;

private:
    std::vector<std::string> sigma_, delta_;
    std::vector<int> vlabel_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, int>>> adj_;
};

// Vertex-disjoint union; the second graph's indices are shifted by
// |V(g)|. Requires shared alphabets.
LabeledGraph disjoint_union(const LabeledGraph& g, const LabeledGraph& h);

// Collapses vertex labels into composite edge labels (vertex alphabet
// becomes the singleton {"1"}): an edge {a,b} with lambda(a) <= lambda(b)
// carries the label (lambda(a), lambda(b), kappa({a,b})). Homomorphisms are
// preserved in both arguments simultaneously.
LabeledGraph el_transform(const LabeledGraph& g);

// Uniformly labeled builders used throughout the tests and the CFI pipeline.
LabeledGraph path_graph(int n, const std::string& sigma = "a", const std::string& delta = "x");
LabeledGraph cycle_graph(int n, const std::string& sigma = "a", const std::string& delta = "x");
LabeledGraph complete_graph(int n, const std::string& sigma = "a", const std::string& delta = "x");
LabeledGraph edgeless_graph(int n, const std::string& sigma = "a", const std::string& delta = "x");

// Plain graph on n vertices from an explicit edge list.
LabeledGraph plain_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         const std::string& sigma = "a", const std::string& delta = "x");

bool is_homomorphism(const LabeledGraph& f, const LabeledGraph& g, const std::vector<Vertex>& map);

} // namespace wlm
