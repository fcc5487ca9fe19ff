#include "wlm/labeled_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wlm/errors.hpp"

namespace wlm {

Partition Partition::singletons(int n) {
    Partition p;
    p.blocks.reserve(n);
    for (Vertex v = 0; v < n; ++v) p.blocks.push_back({v});
    return p;
}

Partition Partition::from_rgs(const std::vector<int>& rgs) {
    Partition p;
    for (int i = 0; i < static_cast<int>(rgs.size()); ++i) {
        if (rgs[i] >= static_cast<int>(p.blocks.size())) p.blocks.resize(rgs[i] + 1);
        p.blocks[rgs[i]].push_back(i);
    }
    return p;
}

bool Partition::is_partition_of(int n) const {
    std::vector<char> seen(n, 0);
    for (const auto& block : blocks) {
        if (block.empty()) return false;
        for (Vertex v : block) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
        }
    }
    for (char c : seen)
        if (!c) return false;
    return true;
}

namespace {

int symbol_index(const std::vector<std::string>& alphabet, const std::string& s) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
    if (it == alphabet.end() || *it != s) return -1;
    return static_cast<int>(it - alphabet.begin());
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

LabeledGraph LabeledGraph::make(std::vector<std::string> sigma, std::vector<std::string> delta,
                                std::vector<std::string> vertex_labels,
                                std::vector<std::tuple<Vertex, Vertex, std::string>> edges) {
    LabeledGraph g;
    if (sigma.empty()) throw ParseError("vertex alphabet sigma is empty");
    g.sigma_ = sorted_unique(std::move(sigma));
    g.delta_ = sorted_unique(std::move(delta));

    const int n = static_cast<int>(vertex_labels.size());
    g.vlabel_.reserve(n);
    for (int v = 0; v < n; ++v) {
        int idx = symbol_index(g.sigma_, vertex_labels[v]);
        if (idx < 0)
            throw ParseError("vertex " + std::to_string(v) + " carries undeclared label '" +
                             vertex_labels[v] + "'");
        g.vlabel_.push_back(idx);
    }

    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto& [u, v, label] : edges) {
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} references a vertex outside 0.." + std::to_string(n - 1));
        Vertex a = std::min(u, v), b = std::max(u, v);
        if (!seen.insert({a, b}).second)
            throw ParseError("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
        int idx = symbol_index(g.delta_, label);
        if (idx < 0)
            throw ParseError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                             "} carries undeclared label '" + label + "'");
        g.edges_.push_back({a, b, idx});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });

    g.adj_.assign(n, {});
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back({e.v, e.label});
        g.adj_[e.v].push_back({e.u, e.label});
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

std::optional<int> LabeledGraph::edge_label(Vertex u, Vertex v) const {
    if (u == v) return std::nullopt;
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::make_pair(v, -1));
    if (it != nb.end() && it->first == v) return it->second;
    return std::nullopt;
}

bool LabeledGraph::is_connected() const {
    return components().size() <= 1;
}

std::vector<std::vector<Vertex>> LabeledGraph::components() const {
    const int n = vertex_count();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<Vertex> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto [w, lbl] : adj_[v]) {
                (void)lbl;
                if (comp[w] < 0) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    std::vector<std::vector<Vertex>> result(count);
    for (Vertex v = 0; v < n; ++v) result[comp[v]].push_back(v);
    return result;
}

LabeledGraph LabeledGraph::induced(const std::vector<Vertex>& vertices) const {
    std::vector<int> pos(vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) pos[vertices[i]] = i;

    std::vector<std::string> vlabels;
    vlabels.reserve(vertices.size());
    for (Vertex v : vertices) vlabels.push_back(vertex_symbol(v));

    std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
    for (const Edge& e : edges_) {
        if (pos[e.u] >= 0 && pos[e.v] >= 0)
            edges.emplace_back(pos[e.u], pos[e.v], delta_[e.label]);
    }
    return make(sigma_, delta_, std::move(vlabels), std::move(edges));
}

LabeledGraph disjoint_union(const LabeledGraph& g, const LabeledGraph& h) {
    if (!g.same_alphabets(h))
        throw ParseError("disjoint_union requires shared alphabets");
    std::vector<std::string> vlabels;
    for (Vertex v = 0; v < g.vertex_count(); ++v) vlabels.push_back(g.vertex_symbol(v));
    for (Vertex v = 0; v < h.vertex_count(); ++v) vlabels.push_back(h.vertex_symbol(v));

    std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v, g.edge_symbol(e));
    const int shift = g.vertex_count();
    for (const auto& e : h.edges()) edges.emplace_back(e.u + shift, e.v + shift, h.edge_symbol(e));
    return LabeledGraph::make(g.sigma(), g.delta(), std::move(vlabels), std::move(edges));
}

namespace {

// Unambiguous composite symbol for the EL transform; '\x1f' cannot clash
// with itself inside a component after escaping.
std::string composite_symbol(const std::string& a, const std::string& b, const std::string& c) {
    std::string out;
    for (const std::string* part : {&a, &b, &c}) {
        for (char ch : *part) {
            if (ch == '\\' || ch == '\x1f') out.push_back('\\');
            out.push_back(ch);
        }
        out.push_back('\x1f');
    }
    return out;
}

} // namespace

LabeledGraph el_transform(const LabeledGraph& g) {
    std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
    std::vector<std::string> labels;
    for (const auto& e : g.edges()) {
        const std::string& la = g.vertex_symbol(e.u);
        const std::string& lb = g.vertex_symbol(e.v);
        const std::string& composite = la <= lb ? composite_symbol(la, lb, g.edge_symbol(e))
                                                : composite_symbol(lb, la, g.edge_symbol(e));
        edges.emplace_back(e.u, e.v, composite);
        labels.push_back(composite);
    }
    std::vector<std::string> vlabels(g.vertex_count(), "1");
    if (labels.empty()) labels.push_back(composite_symbol("", "", ""));
    return LabeledGraph::make({"1"}, std::move(labels), std::move(vlabels), std::move(edges));
}

LabeledGraph plain_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                         const std::string& sigma, const std::string& delta) {
    std::vector<std::tuple<Vertex, Vertex, std::string>> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.emplace_back(u, v, delta);
    return LabeledGraph::make({sigma}, {delta}, std::vector<std::string>(n, sigma), std::move(es));
}

LabeledGraph path_graph(int n, const std::string& sigma, const std::string& delta) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return plain_graph(n, edges, sigma, delta);
}

LabeledGraph cycle_graph(int n, const std::string& sigma, const std::string& delta) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    if (n >= 3) edges.push_back({0, n - 1});
    return plain_graph(n, edges, sigma, delta);
}

LabeledGraph complete_graph(int n, const std::string& sigma, const std::string& delta) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return plain_graph(n, edges, sigma, delta);
}

LabeledGraph edgeless_graph(int n, const std::string& sigma, const std::string& delta) {
    return plain_graph(n, {}, sigma, delta);
}

bool is_homomorphism(const LabeledGraph& f, const LabeledGraph& g, const std::vector<Vertex>& map) {
    if (static_cast<int>(map.size()) != f.vertex_count()) return false;
    for (Vertex v = 0; v < f.vertex_count(); ++v) {
        if (map[v] < 0 || map[v] >= g.vertex_count()) return false;
        if (f.vertex_symbol(v) != g.vertex_symbol(map[v])) return false;
    }
    for (const auto& e : f.edges()) {
        auto lbl = g.edge_label(map[e.u], map[e.v]);
        if (!lbl || g.delta()[*lbl] != f.edge_symbol(e)) return false;
    }
    return true;
}

} // namespace wlm
