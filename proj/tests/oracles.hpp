#pragma once

// Test-only brute-force oracles, deliberately independent of the library
// code paths they are used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "wlm/labeled_graph.hpp"
#include "wlm/rng.hpp"

namespace oracles {

using wlm::LabeledGraph;
using wlm::Vertex;

// isomorphism by trying every bijection (n <= 8)
inline bool iso_by_permutations(const LabeledGraph& g, const LabeledGraph& h) {
    const int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v)
            if (g.vertex_symbol(v) != h.vertex_symbol(perm[v])) ok = false;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = u + 1; v < n && ok; ++v) {
                auto le = g.edge_label(u, v);
                auto re = h.edge_label(perm[u], perm[v]);
                if (le.has_value() != re.has_value())
                    ok = false;
                else if (le && g.delta()[*le] != h.delta()[*re])
                    ok = false;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// all maps V(F) -> V(G), counted when label- and edge-preserving
inline long long homs_by_enumeration(const LabeledGraph& f, const LabeledGraph& g) {
    const int nf = f.vertex_count(), ng = g.vertex_count();
    if (nf == 0) return 1;
    if (ng == 0) return 0;
    std::vector<Vertex> map(nf, 0);
    long long count = 0;
    for (;;) {
        if (wlm::is_homomorphism(f, g, map)) ++count;
        int i = 0;
        while (i < nf && map[i] == ng - 1) map[i++] = 0;
        if (i == nf) break;
        ++map[i];
    }
    return count;
}

inline long long permutation_automorphisms(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v)
            if (g.vertex_symbol(v) != g.vertex_symbol(perm[v])) ok = false;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = u + 1; v < n && ok; ++v) {
                auto le = g.edge_label(u, v);
                auto re = g.edge_label(perm[u], perm[v]);
                if (le.has_value() != re.has_value())
                    ok = false;
                else if (le && *le != *re)
                    ok = false;
            }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// number of subgraphs of g isomorphic to h: injective edge-preserving maps
// divided by |Aut(h)|
inline long long subgraph_copies(const LabeledGraph& h, const LabeledGraph& g) {
    const int nh = h.vertex_count(), ng = g.vertex_count();
    if (nh > ng) return 0;
    std::vector<Vertex> choice(nh, -1);
    std::vector<char> used(ng, 0);
    long long embeddings = 0;
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == nh) {
            ++embeddings;
            return;
        }
        for (Vertex c = 0; c < ng; ++c) {
            if (used[c] || h.vertex_symbol(idx) != g.vertex_symbol(c)) continue;
            bool ok = true;
            for (Vertex w = 0; w < idx && ok; ++w) {
                auto he = h.edge_label(idx, w);
                if (!he) continue;
                auto ge = g.edge_label(c, choice[w]);
                if (!ge || g.delta()[*ge] != h.delta()[*he]) ok = false;
            }
            if (!ok) continue;
            choice[idx] = c;
            used[c] = 1;
            self(self, idx + 1);
            used[c] = 0;
        }
    };
    rec(rec, 0);
    return embeddings / permutation_automorphisms(h);
}

// induced copies: size-|V(h)| subsets of g whose induced subgraph is
// isomorphic to h (label-aware)
inline long long induced_copies(const LabeledGraph& h, const LabeledGraph& g) {
    const int nh = h.vertex_count(), ng = g.vertex_count();
    if (nh > ng) return 0;
    std::vector<Vertex> subset;
    long long count = 0;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(subset.size()) == nh) {
            if (iso_by_permutations(h, g.induced(subset))) ++count;
            return;
        }
        for (Vertex v = from; v < ng; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

inline long long connected_k_subsets(const LabeledGraph& g, int k) {
    const int n = g.vertex_count();
    long long count = 0;
    std::vector<Vertex> subset;
    auto connected = [&](const std::vector<Vertex>& vs) {
        std::set<Vertex> in(vs.begin(), vs.end());
        std::set<Vertex> seen{vs[0]};
        std::vector<Vertex> stack{vs[0]};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto [w, lbl] : g.neighbors(v)) {
                (void)lbl;
                if (in.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        return seen.size() == vs.size();
    };
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(subset.size()) == k) {
            if (connected(subset)) ++count;
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

inline long long independent_k_subsets(const LabeledGraph& g, int k) {
    const int n = g.vertex_count();
    long long count = 0;
    std::vector<Vertex> subset;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(subset.size()) == k) {
            ++count;
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            bool ok = true;
            for (Vertex u : subset)
                if (g.has_edge(u, v)) ok = false;
            if (!ok) continue;
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

// treewidth as the best elimination ordering, by trying all of them
inline int treewidth_by_orderings(const LabeledGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<std::set<Vertex>> base(n);
    for (const auto& e : g.edges()) {
        base[e.u].insert(e.v);
        base[e.v].insert(e.u);
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        auto adj = base;
        int width = 0;
        for (Vertex v : order) {
            width = std::max(width, static_cast<int>(adj[v].size()));
            std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
            for (Vertex a : nb) {
                adj[a].erase(v);
                for (Vertex b : nb)
                    if (a != b) adj[a].insert(b);
            }
            adj[v].clear();
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

} // namespace oracles
