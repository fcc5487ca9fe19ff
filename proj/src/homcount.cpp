#include "wlm/homcount.hpp"

#include <algorithm>
#include <cmath>

#include "wlm/errors.hpp"

namespace wlm {

namespace {

// translation of f's label indices into g's (or -1 when the symbol is absent)
struct LabelMap {
    std::vector<int> sigma, delta;
};

LabelMap label_map(const LabeledGraph& f, const LabeledGraph& g) {
    LabelMap m;
    m.sigma.resize(f.sigma().size());
    for (std::size_t i = 0; i < f.sigma().size(); ++i) {
        auto it = std::lower_bound(g.sigma().begin(), g.sigma().end(), f.sigma()[i]);
        m.sigma[i] = (it != g.sigma().end() && *it == f.sigma()[i])
                         ? static_cast<int>(it - g.sigma().begin())
                         : -1;
    }
    m.delta.resize(f.delta().size());
    for (std::size_t i = 0; i < f.delta().size(); ++i) {
        auto it = std::lower_bound(g.delta().begin(), g.delta().end(), f.delta()[i]);
        m.delta[i] = (it != g.delta().end() && *it == f.delta()[i])
                         ? static_cast<int>(it - g.delta().begin())
                         : -1;
    }
    return m;
}

bool product_within(double base, int exp, long long budget) {
    return exp * std::log(std::max(base, 1.0)) <= std::log(static_cast<double>(budget)) + 1e-9;
}

// visiting order that keeps each next vertex adjacent to an earlier one when
// possible, per component
std::vector<Vertex> bfs_order(const LabeledGraph& f) {
    std::vector<Vertex> order;
    order.reserve(f.vertex_count());
    for (const auto& comp : f.components()) {
        std::vector<char> seen(f.vertex_count(), 0);
        std::size_t head = order.size();
        order.push_back(comp[0]);
        seen[comp[0]] = 1;
        while (head < order.size()) {
            Vertex v = order[head++];
            for (auto [w, lbl] : f.neighbors(v)) {
                (void)lbl;
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            }
        }
    }
    return order;
}

} // namespace

BigInt count_homs_bruteforce(const LabeledGraph& f, const LabeledGraph& g, const RunConfig& cfg) {
    const int nf = f.vertex_count(), ng = g.vertex_count();
    if (!((nf <= cfg.brute_pattern_max_n && ng <= cfg.brute_target_max_n) ||
          product_within(ng, nf, cfg.hom_product_budget)))
        throw GuardError("hom_product_budget",
                         std::to_string(ng) + "^" + std::to_string(nf),
                         std::to_string(cfg.hom_product_budget));
    if (nf == 0) return 1;
    if (ng == 0) return 0;

    const LabelMap lm = label_map(f, g);
    const auto order = bfs_order(f);
    std::vector<Vertex> image(nf, -1);
    BigInt total = 0;

    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == nf) {
            ++total;
            return;
        }
        Vertex v = order[idx];
        int want = lm.sigma[f.vertex_label(v)];
        if (want < 0) return;

        // prefer iterating over the neighborhood of an assigned neighbor
        Vertex anchor = -1;
        int anchor_label = -1;
        for (auto [w, lbl] : f.neighbors(v)) {
            if (image[w] >= 0) {
                anchor = w;
                anchor_label = lm.delta[lbl];
                break;
            }
        }
        auto try_candidate = [&](Vertex c) {
            if (g.vertex_label(c) != want) return;
            for (auto [w, lbl] : f.neighbors(v)) {
                if (image[w] < 0) continue;
                auto gl = g.edge_label(c, image[w]);
                if (!gl || *gl != lm.delta[lbl]) return;
            }
            image[v] = c;
            self(self, idx + 1);
            image[v] = -1;
        };
        if (anchor >= 0) {
            if (anchor_label < 0) return;
            for (auto [c, lbl] : g.neighbors(image[anchor])) {
                if (lbl != anchor_label) continue;
                try_candidate(c);
            }
        } else {
            for (Vertex c = 0; c < ng; ++c) try_candidate(c);
        }
    };
    rec(rec, 0);
    return total;
}

void enumerate_homomorphisms(const LabeledGraph& f, const LabeledGraph& g, long long budget,
                             const std::function<bool(const std::vector<Vertex>&)>& fn) {
    const int nf = f.vertex_count(), ng = g.vertex_count();
    if (!product_within(ng, nf, budget))
        throw GuardError("hom_enumeration_budget", std::to_string(ng) + "^" + std::to_string(nf),
                         std::to_string(budget));
    if (nf == 0) {
        fn({});
        return;
    }
    if (ng == 0) return;
    const LabelMap lm = label_map(f, g);
    std::vector<Vertex> image(nf, -1);
    bool stop = false;
    auto rec = [&](auto&& self, Vertex v) -> void {
        if (stop) return;
        if (v == nf) {
            if (!fn(image)) stop = true;
            return;
        }
        int want = lm.sigma[f.vertex_label(v)];
        if (want < 0) return;
        for (Vertex c = 0; c < ng && !stop; ++c) {
            if (g.vertex_label(c) != want) continue;
            bool ok = true;
            for (auto [w, lbl] : f.neighbors(v)) {
                if (w >= v) continue;
                auto gl = g.edge_label(c, image[w]);
                if (!gl || *gl != lm.delta[lbl]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = c;
            self(self, v + 1);
        }
        image[v] = -1;
    };
    rec(rec, 0);
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

using Table = std::unordered_map<std::vector<Vertex>, BigInt, VecHash>;

// Bottom-up table computation over a nice decomposition. An entry at node u
// maps an assignment of u's bag to the number of homomorphisms of
// f[subtree-union] extending it; the assignment itself is validated as a
// partial homomorphism along the way.
struct HomDp {
    const LabeledGraph& f;
    const LabeledGraph& g;
    const NiceTreeDecomposition& ntd;
    const LabelMap lm;
    const RunConfig& cfg;
    long long table_entries = 0;

    HomDp(const LabeledGraph& f_, const LabeledGraph& g_, const NiceTreeDecomposition& ntd_,
          const RunConfig& cfg_)
        : f(f_), g(g_), ntd(ntd_), lm(label_map(f_, g_)), cfg(cfg_) {}

    void charge(std::size_t entries) {
        table_entries += static_cast<long long>(entries);
        if (table_entries > cfg.hom_table_budget)
            throw GuardError("hom_table_budget", std::to_string(table_entries),
                             std::to_string(cfg.hom_table_budget));
    }

    Table run(int node) {
        const auto& nd = ntd.nodes[node];
        if (nd.children.empty()) {
            Table t;
            if (nd.bag.empty()) {
                t[{}] = 1;
            } else {
                // leaves are singletons by construction
                Vertex a = nd.bag.front();
                int want = lm.sigma[f.vertex_label(a)];
                for (Vertex c = 0; c < g.vertex_count(); ++c)
                    if (want >= 0 && g.vertex_label(c) == want) t[{c}] = 1;
            }
            charge(t.size());
            return t;
        }
        if (nd.children.size() == 2) {
            Table left = run(nd.children[0]);
            Table right = run(nd.children[1]);
            if (right.size() < left.size()) std::swap(left, right);
            Table t;
            for (const auto& [key, cnt] : left) {
                auto it = right.find(key);
                if (it != right.end()) t[key] = cnt * it->second;
            }
            charge(t.size());
            return t;
        }

        const auto& child = ntd.nodes[nd.children[0]];
        Table sub = run(nd.children[0]);
        Table t;
        if (child.bag.size() == nd.bag.size() + 1) {
            // child introduced child.pivot; marginalize it out going up
            std::size_t drop = std::lower_bound(child.bag.begin(), child.bag.end(), child.pivot) -
                               child.bag.begin();
            std::vector<Vertex> key;
            key.reserve(nd.bag.size());
            for (const auto& [ckey, cnt] : sub) {
                key.clear();
                for (std::size_t i = 0; i < ckey.size(); ++i)
                    if (i != drop) key.push_back(ckey[i]);
                t[key] += cnt;
            }
        } else {
            // child forgot child.pivot relative to us; reintroduce it with
            // its label and its edges into the bag validated here
            Vertex x = child.pivot;
            std::size_t at = std::lower_bound(nd.bag.begin(), nd.bag.end(), x) - nd.bag.begin();
            int want = lm.sigma[f.vertex_label(x)];
            std::vector<std::pair<std::size_t, int>> checks; // (bag position in child key, delta)
            for (auto [w, lbl] : f.neighbors(x)) {
                auto it = std::lower_bound(child.bag.begin(), child.bag.end(), w);
                if (it != child.bag.end() && *it == w)
                    checks.push_back({static_cast<std::size_t>(it - child.bag.begin()), lm.delta[lbl]});
            }
            std::vector<Vertex> key;
            key.reserve(nd.bag.size());
            for (const auto& [ckey, cnt] : sub) {
                for (Vertex c = 0; c < g.vertex_count(); ++c) {
                    if (want < 0 || g.vertex_label(c) != want) continue;
                    bool ok = true;
                    for (auto [pos, dl] : checks) {
                        auto gl = g.edge_label(c, ckey[pos]);
                        if (!gl || dl < 0 || *gl != dl) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    key.assign(ckey.begin(), ckey.end());
                    key.insert(key.begin() + at, c);
                    t[key] += cnt;
                }
            }
        }
        charge(t.size());
        return t;
    }
};

NiceTreeDecomposition anchored_nice_decomposition(const LabeledGraph& f,
                                                  const std::vector<Vertex>& anchor_set,
                                                  const RunConfig& cfg) {
    Shape shape = Shape::of(f);
    for (std::size_t i = 0; i < anchor_set.size(); ++i)
        for (std::size_t j = i + 1; j < anchor_set.size(); ++j)
            shape.add_edge(anchor_set[i], anchor_set[j]);
    const int k = static_cast<int>(anchor_set.size());
    int width = exact_treewidth(shape, cfg);
    if (k > 0 && width > k)
        throw std::invalid_argument(
            "anchor not realizable as a bag of a width-" + std::to_string(k) +
            " nice decomposition (needs width " + std::to_string(width) + ")");
    if (width > cfg.td_width_guard)
        throw GuardError("td_width_guard", std::to_string(width), std::to_string(cfg.td_width_guard));
    return make_nice(tree_decomposition(shape, cfg), anchor_set);
}

} // namespace

BigInt count_homs_td(const LabeledGraph& f, const LabeledGraph& g, const RunConfig& cfg) {
    if (f.vertex_count() == 0) return 1;
    Shape shape = Shape::of(f);
    int width = exact_treewidth(shape, cfg);
    if (width > cfg.td_width_guard)
        throw GuardError("td_width_guard", std::to_string(width), std::to_string(cfg.td_width_guard));
    NiceTreeDecomposition ntd = make_nice(tree_decomposition(shape, cfg));
    HomDp dp(f, g, ntd, cfg);
    Table root = dp.run(ntd.root);
    BigInt total = 0;
    for (const auto& [key, cnt] : root) total += cnt;
    return total;
}

PartialCounts partial_hom_counts(const LabeledGraph& f, const std::vector<Vertex>& anchor_set,
                                 const LabeledGraph& g, const RunConfig& cfg) {
    for (Vertex a : anchor_set)
        if (a < 0 || a >= f.vertex_count())
            throw std::invalid_argument("anchor entry outside the pattern");
    std::vector<Vertex> sorted = anchor_set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("anchor entries must be distinct");

    NiceTreeDecomposition ntd = anchored_nice_decomposition(f, sorted, cfg);
    HomDp dp(f, g, ntd, cfg);
    Table root = dp.run(ntd.root);
    PartialCounts out;
    out.anchor_set = sorted;
    for (auto& [key, cnt] : root)
        if (cnt != 0) out.counts.emplace(key, std::move(cnt));
    return out;
}

BigInt count_homs_extending(const LabeledGraph& f, const VertexTuple& anchor,
                            const LabeledGraph& g, const VertexTuple& pin, const RunConfig& cfg) {
    if (anchor.size() != pin.size())
        throw std::invalid_argument("anchor/pin dimension mismatch");
    for (Vertex v : pin)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("pin entry outside the graph");

    PartialCounts pc = partial_hom_counts(f, anchor, g, cfg);
    std::vector<Vertex> assignment(pc.anchor_set.size());
    for (std::size_t i = 0; i < anchor.size(); ++i) {
        std::size_t pos =
            std::lower_bound(pc.anchor_set.begin(), pc.anchor_set.end(), anchor[i]) -
            pc.anchor_set.begin();
        assignment[pos] = pin[i];
    }
    auto it = pc.counts.find(assignment);
    return it == pc.counts.end() ? BigInt(0) : it->second;
}

VertexTuple default_eta_anchor(const LabeledGraph& f, int k, const RunConfig& cfg) {
    if (f.vertex_count() == 0) throw std::invalid_argument("pattern has no vertices");
    TreeDecomposition td = tree_decomposition(f, cfg);
    const std::vector<Vertex>* largest = &td.bags.front();
    for (const auto& bag : td.bags)
        if (bag.size() > largest->size()) largest = &bag;
    VertexTuple anchor;
    for (Vertex v : *largest) {
        if (static_cast<int>(anchor.size()) == k) break;
        anchor.push_back(v);
    }
    while (static_cast<int>(anchor.size()) < k) anchor.push_back(anchor.back());
    return anchor;
}

EtaTable build_eta_table_for(const LabeledGraph& f, const VertexTuple& anchor,
                             const std::vector<LabeledGraph>& graphs,
                             const std::vector<Coloring>& colorings, ColorRegistry& reg,
                             const RunConfig& cfg) {
    const int k = reg.dimension();
    if (static_cast<int>(anchor.size()) != k)
        throw std::invalid_argument("anchor length must equal the registry dimension");

    // distinct part of the anchor, with the positions mapped onto it
    std::vector<Vertex> distinct;
    for (Vertex a : anchor)
        if (std::find(distinct.begin(), distinct.end(), a) == distinct.end()) distinct.push_back(a);
    std::sort(distinct.begin(), distinct.end());

    EtaTable table;
    table.pattern = f;
    table.anchor = anchor;
    table.k = k;

    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const LabeledGraph& g = graphs[gi];
        const Coloring& coloring = colorings[gi];
        PartialCounts pc = partial_hom_counts(f, distinct, g, cfg);

        const int n = g.vertex_count();
        std::vector<Vertex> assignment(distinct.size());
        for (std::size_t idx = 0; idx < coloring.tuple_count(); ++idx) {
            VertexTuple t = tuple_at(idx, n, k);
            // repeated anchor entries force equal pins
            bool compatible = true;
            for (int i = 0; i < k && compatible; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (anchor[i] == anchor[j] && t[i] != t[j]) {
                        compatible = false;
                        break;
                    }
            BigInt value = 0;
            if (compatible) {
                for (std::size_t d = 0; d < distinct.size(); ++d) {
                    for (int i = 0; i < k; ++i)
                        if (anchor[i] == distinct[d]) {
                            assignment[d] = t[i];
                            break;
                        }
                }
                auto it = pc.counts.find(assignment);
                if (it != pc.counts.end()) value = it->second;
            }
            ColorId c = coloring.colors[idx];
            auto [it, inserted] = table.counts.try_emplace(c, value);
            if (!inserted && it->second != value)
                throw WellDefinednessError(
                    "two tuples with stable color " + std::to_string(c) +
                    " have partial counts " + it->second.str() + " and " + value.str());
        }
    }
    return table;
}

EtaTable build_eta_table(const LabeledGraph& f, const VertexTuple& anchor,
                         const std::vector<LabeledGraph>& graphs, int k, ColorRegistry& reg,
                         const RunConfig& cfg) {
    reg.bind_dimension(k);
    std::vector<const LabeledGraph*> ptrs;
    ptrs.reserve(graphs.size());
    for (const auto& g : graphs) ptrs.push_back(&g);
    auto [colorings, rounds] = joint_colorings(ptrs, k, reg, -1, cfg);
    (void)rounds;
    return build_eta_table_for(f, anchor, graphs, colorings, reg, cfg);
}

} // namespace wlm
