#include "wlm/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "wlm/errors.hpp"

namespace wlm {

namespace {

void append_escaped(std::string& out, const std::string& s) {
    for (char ch : s) {
        if (ch == '\\' || ch == ';' || ch == ',' || ch == '|') out.push_back('\\');
        out.push_back(ch);
    }
}

// Iterated degree/label refinement. The per-vertex keys are built purely
// from label symbols and multiset structure, so they are comparable across
// graphs and invariant under isomorphism.
std::vector<std::string> refinement_keys(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::string> key(n);
    for (Vertex v = 0; v < n; ++v) {
        append_escaped(key[v], g.vertex_symbol(v));
        key[v] += "#" + std::to_string(g.degree(v));
    }
    std::size_t classes = 0;
    for (int round = 0; round < n; ++round) {
        std::vector<std::string> next(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::string> items;
            items.reserve(g.degree(v));
            for (auto [w, lbl] : g.neighbors(v)) {
                std::string item;
                append_escaped(item, g.delta()[lbl]);
                item += "~" + key[w];
                items.push_back(std::move(item));
            }
            std::sort(items.begin(), items.end());
            next[v] = key[v] + "|";
            for (const auto& item : items) next[v] += item + ",";
        }
        std::vector<std::string> sorted = next;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        key = std::move(next);
        if (sorted.size() == classes) break;
        classes = sorted.size();
    }
    return key;
}

std::vector<std::vector<Vertex>> classes_in_key_order(const std::vector<std::string>& keys) {
    std::map<std::string, std::vector<Vertex>> by_key;
    for (Vertex v = 0; v < static_cast<int>(keys.size()); ++v) by_key[keys[v]].push_back(v);
    std::vector<std::vector<Vertex>> out;
    out.reserve(by_key.size());
    for (auto& [k, vs] : by_key) out.push_back(std::move(vs));
    return out;
}

// Row of a candidate vertex against the already placed prefix: one entry per
// earlier position, "" for a non-edge, else the escaped edge symbol.
using Row = std::vector<std::string>;

Row row_of(const LabeledGraph& g, Vertex v, const std::vector<Vertex>& placed) {
    Row row;
    row.reserve(placed.size());
    for (Vertex p : placed) {
        auto lbl = g.edge_label(v, p);
        if (!lbl) {
            row.emplace_back();
        } else {
            std::string s;
            append_escaped(s, g.delta()[*lbl]);
            row.push_back(std::move(s));
        }
    }
    return row;
}

// Lexicographically minimal row sequence over all orderings that list the
// refinement classes in key order. The minimum over that space is reached by
// both of two isomorphic graphs, which makes the resulting encoding canonical.
struct CanonicalSearch {
    const LabeledGraph& g;
    std::vector<std::vector<Vertex>> classes;
    std::vector<char> used;
    std::vector<Vertex> placed;
    std::vector<Row> cur;
    std::vector<Row> best;
    std::vector<Vertex> best_order;
    bool have_best = false;

    explicit CanonicalSearch(const LabeledGraph& graph)
        : g(graph), used(graph.vertex_count(), 0) {}

    int compare_prefix() const {
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] < best[i]) return -1;
            if (cur[i] > best[i]) return 1;
        }
        return 0;
    }

    void dfs(std::size_t class_idx, std::size_t used_in_class) {
        if (have_best && compare_prefix() > 0) return;
        if (class_idx == classes.size()) {
            if (!have_best || compare_prefix() < 0) {
                best = cur;
                best_order = placed;
                have_best = true;
            }
            return;
        }
        const auto& cls = classes[class_idx];
        if (used_in_class == cls.size()) {
            dfs(class_idx + 1, 0);
            return;
        }
        std::vector<std::pair<Row, Vertex>> cands;
        for (Vertex v : cls)
            if (!used[v]) cands.push_back({row_of(g, v, placed), v});
        std::sort(cands.begin(), cands.end());
        for (auto& [row, v] : cands) {
            used[v] = 1;
            placed.push_back(v);
            cur.push_back(row);
            dfs(class_idx, used_in_class + 1);
            cur.pop_back();
            placed.pop_back();
            used[v] = 0;
        }
    }
};

} // namespace

CanonicalCode canonical_form(const LabeledGraph& g, const RunConfig& cfg) {
    const int n = g.vertex_count();
    if (n > cfg.canonical_max_n)
        throw GuardError("canonical_max_n", std::to_string(n), std::to_string(cfg.canonical_max_n));

    std::vector<Vertex> perm;
    if (n > 0) {
        CanonicalSearch search(g);
        search.classes = classes_in_key_order(refinement_keys(g));
        search.dfs(0, 0);
        perm = search.best_order; // position -> original vertex
    }

    std::string code = "n" + std::to_string(n) + ";";
    for (Vertex v : perm) {
        append_escaped(code, g.vertex_symbol(v));
        code += ",";
    }
    code += ";";
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) pos[perm[i]] = i;
    std::vector<std::tuple<int, int, std::string>> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        int a = pos[e.u], b = pos[e.v];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b, g.edge_symbol(e));
    }
    std::sort(edges.begin(), edges.end());
    for (auto& [a, b, s] : edges) {
        code += std::to_string(a) + "-" + std::to_string(b) + ":";
        append_escaped(code, s);
        code += ",";
    }
    return code;
}

namespace {

bool backtrack_iso(const LabeledGraph& g, const LabeledGraph& h,
                   const std::vector<std::string>& gkeys, const std::vector<std::string>& hkeys,
                   std::vector<Vertex>& map, std::vector<char>& used, int idx,
                   const std::vector<Vertex>& order) {
    if (idx == static_cast<int>(order.size())) return true;
    Vertex v = order[idx];
    for (Vertex w = 0; w < h.vertex_count(); ++w) {
        if (used[w] || gkeys[v] != hkeys[w]) continue;
        bool ok = true;
        for (int j = 0; j < idx && ok; ++j) {
            Vertex pv = order[j];
            auto lg = g.edge_label(v, pv);
            auto lh = h.edge_label(w, map[pv]);
            if (lg.has_value() != lh.has_value())
                ok = false;
            else if (lg && g.delta()[*lg] != h.delta()[*lh])
                ok = false;
        }
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (backtrack_iso(g, h, gkeys, hkeys, map, used, idx + 1, order)) return true;
        used[w] = 0;
    }
    return false;
}

// small clique counts as cheap non-isomorphism certificates; 1-WL style
// refinement cannot separate CFI twins but these can
long long triangle_count(const LabeledGraph& g) {
    long long t = 0;
    for (const auto& e : g.edges())
        for (auto [w, lbl] : g.neighbors(e.u)) {
            (void)lbl;
            if (w > e.v && g.has_edge(e.v, w)) ++t;
        }
    return t;
}

long long k4_count(const LabeledGraph& g) {
    const int n = g.vertex_count();
    if (n > 32) return -1;
    long long c = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int x = b + 1; x < n; ++x) {
                if (!g.has_edge(a, x) || !g.has_edge(b, x)) continue;
                for (int y = x + 1; y < n; ++y)
                    if (g.has_edge(a, y) && g.has_edge(b, y) && g.has_edge(x, y)) ++c;
            }
        }
    return c;
}

} // namespace

bool is_isomorphic(const LabeledGraph& g, const LabeledGraph& h, const RunConfig& cfg) {
    const int n = g.vertex_count();
    int guard = std::max(n, h.vertex_count());
    if (guard > cfg.iso_max_n)
        throw GuardError("iso_max_n", std::to_string(guard), std::to_string(cfg.iso_max_n));
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (n == 0) return true;

    auto gkeys = refinement_keys(g);
    auto hkeys = refinement_keys(h);
    {
        auto gs = gkeys, hs = hkeys;
        std::sort(gs.begin(), gs.end());
        std::sort(hs.begin(), hs.end());
        if (gs != hs) return false;
    }
    if (triangle_count(g) != triangle_count(h)) return false;
    if (k4_count(g) != k4_count(h)) return false;

    // BFS order per component so adjacency constraints bind early
    std::vector<Vertex> order;
    order.reserve(n);
    for (const auto& comp : g.components()) {
        std::vector<char> seen(n, 0);
        std::size_t head = order.size();
        order.push_back(comp[0]);
        seen[comp[0]] = 1;
        while (head < order.size()) {
            Vertex v = order[head++];
            for (auto [w, lbl] : g.neighbors(v)) {
                (void)lbl;
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            }
        }
    }

    std::vector<Vertex> map(n, -1);
    std::vector<char> used(n, 0);
    return backtrack_iso(g, h, gkeys, hkeys, map, used, 0, order);
}

long long automorphism_count(const LabeledGraph& g, const RunConfig& cfg) {
    const int n = g.vertex_count();
    if (n > cfg.aut_max_n)
        throw GuardError("aut_max_n", std::to_string(n), std::to_string(cfg.aut_max_n));
    if (n == 0) return 1;
    auto keys = refinement_keys(g);

    long long count = 0;
    std::vector<Vertex> map(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || keys[v] != keys[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                auto l1 = g.edge_label(v, u);
                auto l2 = g.edge_label(w, map[u]);
                if (l1.has_value() != l2.has_value())
                    ok = false;
                else if (l1 && *l1 != *l2)
                    ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

AtpCode atomic_type(const LabeledGraph& g, const VertexTuple& t) {
    const int n = g.vertex_count();
    for (Vertex v : t)
        if (v < 0 || v >= n) throw std::invalid_argument("tuple entry outside the graph");
    std::string code = "k" + std::to_string(t.size()) + ";";
    for (Vertex v : t) {
        append_escaped(code, g.vertex_symbol(v));
        code += ",";
    }
    code += ";";
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j]) {
                code += "=,";
                continue;
            }
            auto lbl = g.edge_label(t[i], t[j]);
            if (!lbl) {
                code += "-,";
            } else {
                append_escaped(code, g.delta()[*lbl]);
                code += ",";
            }
        }
    return code;
}

} // namespace wlm
