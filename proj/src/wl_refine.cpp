#include "wlm/wl_refine.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wlm/errors.hpp"

namespace wlm {

namespace {

constexpr std::int64_t kAtpTag = 0;
constexpr std::int64_t kRoundTag1 = 1;
constexpr std::int64_t kRoundTagK = 2;

} // namespace

ColorId ColorRegistry::intern(const std::vector<std::int64_t>& payload) {
    auto [it, inserted] = table_.try_emplace(payload, static_cast<ColorId>(table_.size()));
    (void)inserted;
    return it->second;
}

int ColorRegistry::symbol_id(const std::string& symbol) {
    auto [it, inserted] = symbols_.try_emplace(symbol, static_cast<int>(symbols_.size()));
    (void)inserted;
    return it->second;
}

void ColorRegistry::bind_dimension(int k) {
    if (k_ == 0) k_ = k;
    if (k_ != k)
        throw std::invalid_argument("registry bound to dimension " + std::to_string(k_) +
                                    ", got " + std::to_string(k));
}

std::size_t tuple_index(const VertexTuple& t, int n) {
    std::size_t idx = 0;
    for (Vertex v : t) idx = idx * n + static_cast<std::size_t>(v);
    return idx;
}

VertexTuple tuple_at(std::size_t index, int n, int k) {
    VertexTuple t(k, 0);
    for (int i = k - 1; i >= 0; --i) {
        t[i] = static_cast<Vertex>(index % n);
        index /= n;
    }
    return t;
}

ColorId Coloring::color(const VertexTuple& t) const {
    return colors[tuple_index(t, n)];
}

std::size_t Coloring::class_count() const {
    std::vector<ColorId> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return sorted.size();
}

namespace {

void check_tuple_budget(const LabeledGraph& g, int k, const RunConfig& cfg) {
    if (k < 1) throw std::invalid_argument("dimension k must be >= 1");
    const double n = std::max(1, g.vertex_count());
    if (std::pow(n, k) > static_cast<double>(cfg.wl_tuple_budget))
        throw GuardError("wl_tuple_budget",
                         std::to_string(g.vertex_count()) + "^" + std::to_string(k),
                         std::to_string(cfg.wl_tuple_budget));
}

std::size_t power(std::size_t base, int exp) {
    std::size_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

} // namespace

Coloring wl_initial(const LabeledGraph& g, int k, ColorRegistry& reg, const RunConfig& cfg) {
    check_tuple_budget(g, k, cfg);
    reg.bind_dimension(k);
    const int n = g.vertex_count();
    Coloring c;
    c.k = k;
    c.n = n;
    c.round = 0;
    const std::size_t total = n == 0 ? 0 : power(static_cast<std::size_t>(n), k);
    c.colors.resize(total);

    // atomic type payload: vertex label symbols plus the equality/edge
    // pattern over positions, all via session symbol ids
    std::vector<std::int64_t> payload;
    VertexTuple t(k, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int i = k - 1; i >= 0; --i) {
            t[i] = static_cast<Vertex>(rem % n);
            rem /= n;
        }
        payload.clear();
        payload.push_back(kAtpTag);
        payload.push_back(k);
        for (Vertex v : t) payload.push_back(reg.symbol_id(g.vertex_symbol(v)));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                if (t[i] == t[j]) {
                    payload.push_back(-2);
                } else if (auto lbl = g.edge_label(t[i], t[j])) {
                    payload.push_back(reg.symbol_id(g.delta()[*lbl]));
                } else {
                    payload.push_back(-1);
                }
            }
        c.colors[idx] = reg.intern(payload);
    }
    return c;
}

Coloring wl_round(const LabeledGraph& g, const Coloring& prev, ColorRegistry& reg) {
    if (prev.k != reg.dimension())
        throw std::invalid_argument("coloring/registry dimension mismatch");
    if (prev.n != g.vertex_count())
        throw std::invalid_argument("coloring does not belong to this graph");
    const int n = g.vertex_count();
    const int k = prev.k;

    Coloring next;
    next.k = k;
    next.n = n;
    next.round = prev.round + 1;
    next.colors.resize(prev.colors.size());

    std::vector<std::int64_t> payload;
    if (k == 1) {
        std::vector<std::pair<std::int64_t, std::int64_t>> items;
        for (Vertex v = 0; v < n; ++v) {
            items.clear();
            for (auto [w, lbl] : g.neighbors(v))
                items.push_back({reg.symbol_id(g.delta()[lbl]), prev.colors[w]});
            std::sort(items.begin(), items.end());
            payload.clear();
            payload.push_back(kRoundTag1);
            payload.push_back(prev.colors[v]);
            for (auto [a, b] : items) {
                payload.push_back(a);
                payload.push_back(b);
            }
            next.colors[v] = reg.intern(payload);
        }
        return next;
    }

    const std::size_t total = prev.colors.size();
    std::vector<std::size_t> stride(k);
    {
        std::size_t s = 1;
        for (int j = k - 1; j >= 0; --j) {
            stride[j] = s;
            s *= n;
        }
    }
    VertexTuple t(k, 0);
    std::vector<ColorId> ct_flat(static_cast<std::size_t>(n) * k);
    std::vector<int> ct_order(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (int i = k - 1; i >= 0; --i) {
            t[i] = static_cast<Vertex>(rem % n);
            rem /= n;
        }
        // color tuple for each substituted w, then sorted as a multiset
        for (Vertex w = 0; w < n; ++w) {
            for (int j = 0; j < k; ++j) {
                std::size_t sub = idx + (static_cast<std::size_t>(w) - t[j]) * stride[j];
                ct_flat[static_cast<std::size_t>(w) * k + j] = prev.colors[sub];
            }
            ct_order[w] = w;
        }
        std::sort(ct_order.begin(), ct_order.end(), [&](int a, int b) {
            return std::lexicographical_compare(ct_flat.begin() + a * k, ct_flat.begin() + (a + 1) * k,
                                                ct_flat.begin() + b * k, ct_flat.begin() + (b + 1) * k);
        });
        payload.clear();
        payload.push_back(kRoundTagK);
        payload.push_back(prev.colors[idx]);
        for (int w : ct_order)
            for (int j = 0; j < k; ++j) payload.push_back(ct_flat[w * k + j]);
        next.colors[idx] = reg.intern(payload);
    }
    return next;
}

std::pair<std::vector<Coloring>, int> joint_colorings(const std::vector<const LabeledGraph*>& graphs,
                                                      int k, ColorRegistry& reg, int rounds,
                                                      const RunConfig& cfg) {
    std::vector<Coloring> cur;
    cur.reserve(graphs.size());
    for (const LabeledGraph* g : graphs) cur.push_back(wl_initial(*g, k, reg, cfg));

    auto union_class_count = [&]() {
        std::vector<ColorId> all;
        for (const Coloring& c : cur) all.insert(all.end(), c.colors.begin(), c.colors.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return all.size();
    };

    if (rounds >= 0) {
        for (int r = 0; r < rounds; ++r)
            for (std::size_t i = 0; i < graphs.size(); ++i) cur[i] = wl_round(*graphs[i], cur[i], reg);
        return {std::move(cur), rounds};
    }

    std::size_t classes = union_class_count();
    for (int r = 0;; ++r) {
        std::vector<Coloring> next;
        next.reserve(graphs.size());
        for (std::size_t i = 0; i < graphs.size(); ++i) next.push_back(wl_round(*graphs[i], cur[i], reg));
        std::vector<ColorId> all;
        for (const Coloring& c : next) all.insert(all.end(), c.colors.begin(), c.colors.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        // refinement only splits classes, so equal counts mean a fixpoint
        if (all.size() == classes) return {std::move(cur), r};
        classes = all.size();
        cur = std::move(next);
    }
}

std::pair<Coloring, int> stable_coloring(const LabeledGraph& g, int k, ColorRegistry& reg,
                                         const RunConfig& cfg) {
    auto [colorings, rounds] = joint_colorings({&g}, k, reg, -1, cfg);
    return {std::move(colorings.front()), rounds};
}

namespace {

std::map<ColorId, std::size_t> color_histogram(const Coloring& c) {
    std::map<ColorId, std::size_t> h;
    for (ColorId id : c.colors) ++h[id];
    return h;
}

} // namespace

bool wl_equivalent(const LabeledGraph& g, const LabeledGraph& h, int k, const RunConfig& cfg) {
    if (!g.same_alphabets(h)) throw std::invalid_argument("wl_equivalent requires shared alphabets");
    ColorRegistry reg;
    std::vector<const LabeledGraph*> graphs{&g, &h};
    std::vector<Coloring> cur;
    cur.push_back(wl_initial(g, k, reg, cfg));
    cur.push_back(wl_initial(h, k, reg, cfg));

    auto union_classes = [&]() {
        std::vector<ColorId> all;
        for (const Coloring& c : cur) all.insert(all.end(), c.colors.begin(), c.colors.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return all.size();
    };

    std::size_t classes = union_classes();
    for (;;) {
        // colors at round i are a function of those at round i+1, so an
        // unequal multiset now stays unequal forever
        if (color_histogram(cur[0]) != color_histogram(cur[1])) return false;
        std::vector<Coloring> next;
        next.push_back(wl_round(g, cur[0], reg));
        next.push_back(wl_round(h, cur[1], reg));
        cur = std::move(next);
        std::size_t c = union_classes();
        if (c == classes) break;
        classes = c;
    }
    return color_histogram(cur[0]) == color_histogram(cur[1]);
}

bool wl_equivalent_bounded(const LabeledGraph& g, const LabeledGraph& h, int k, int rounds,
                           const RunConfig& cfg) {
    if (!g.same_alphabets(h)) throw std::invalid_argument("wl_equivalent requires shared alphabets");
    if (rounds < 0) throw std::invalid_argument("rounds must be >= 0");
    ColorRegistry reg;
    auto [colorings, r] = joint_colorings({&g, &h}, k, reg, rounds, cfg);
    (void)r;
    return color_histogram(colorings[0]) == color_histogram(colorings[1]);
}

} // namespace wlm
