#include "wlm/motif.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "wlm/errors.hpp"
#include "wlm/homcount.hpp"
#include "wlm/parallel.hpp"
#include "wlm/partitions.hpp"

namespace wlm {

void MotifParameter::add(const LabeledGraph& g, const Rational& c, const RunConfig& cfg) {
    if (c == 0) return;
    CanonicalCode code = canonical_form(g, cfg);
    auto it = support.find(code);
    if (it == support.end())
        support.emplace(std::move(code), MotifMember{g, c});
    else
        it->second.coeff += c;
}

void MotifParameter::add_scaled(const MotifParameter& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [code, member] : other.support) {
        auto it = support.find(code);
        if (it == support.end())
            support.emplace(code, MotifMember{member.graph, member.coeff * scale});
        else
            it->second.coeff += member.coeff * scale;
    }
}

void MotifParameter::normalize() {
    for (auto it = support.begin(); it != support.end();) {
        if (it->second.coeff == 0)
            it = support.erase(it);
        else
            ++it;
    }
}

MotifParameter single_hom_parameter(const LabeledGraph& f, const Rational& mu, const RunConfig& cfg) {
    MotifParameter p;
    p.add(f, mu, cfg);
    return p;
}

Rational evaluate_parameter(const MotifParameter& p, const LabeledGraph& g, const RunConfig& cfg) {
    Rational total = 0;
    for (const auto& [code, member] : p.support)
        total += member.coeff * Rational(count_homs_td(member.graph, g, cfg));
    return total;
}

namespace {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Moebius value of the partition lattice between the discrete partition and
// rgs: product over blocks of (-1)^(|B|-1) (|B|-1)!.
BigInt partition_moebius(const Partition& p) {
    BigInt m = 1;
    for (const auto& block : p.blocks) {
        const int b = static_cast<int>(block.size());
        BigInt f = factorial(b - 1);
        m *= (b % 2 == 0) ? -f : f;
    }
    return m;
}

} // namespace

MotifParameter inj_to_hom(const LabeledGraph& h, const RunConfig& cfg) {
    MotifParameter p;
    for_each_partition(h.vertex_count(), [&](const std::vector<int>& rgs) {
        Partition part = Partition::from_rgs(rgs);
        auto q = quotient(h, part);
        if (auto* graph = std::get_if<LabeledGraph>(&q))
            p.add(*graph, Rational(partition_moebius(part)), cfg);
        return true;
    });
    p.normalize();
    return p;
}

MotifParameter sub_to_hom(const LabeledGraph& h, const RunConfig& cfg) {
    const int n = h.vertex_count();
    if (n > cfg.spasm_max_n)
        throw GuardError("spasm_max_n",
                         std::to_string(n) + " vertices (Bell ~" + bell_number_string(n) + ")",
                         std::to_string(cfg.spasm_max_n));
    MotifParameter p = inj_to_hom(h, cfg);
    Rational inv_aut = Rational(1) / Rational(automorphism_count(h, cfg));
    for (auto& [code, member] : p.support) member.coeff *= inv_aut;
    return p;
}

MotifParameter ind_to_hom(const LabeledGraph& h, const RunConfig& cfg) {
    const int n = h.vertex_count();
    if (n > cfg.ind_max_n)
        throw GuardError("ind_max_n", std::to_string(n), std::to_string(cfg.ind_max_n));

    std::vector<std::pair<Vertex, Vertex>> missing;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!h.has_edge(u, v)) missing.push_back({u, v});

    const int states = static_cast<int>(h.delta().size()) + 1;
    double supersets = std::pow(static_cast<double>(states), static_cast<double>(missing.size()));
    if (supersets > static_cast<double>(cfg.ind_superset_budget))
        throw GuardError("ind_superset_budget",
                         std::to_string(states) + "^" + std::to_string(missing.size()),
                         std::to_string(cfg.ind_superset_budget));

    // group the labeled edge-supersets by isomorphism class first; the
    // signed multiplicities then need only one injective expansion per class
    struct ClassData {
        LabeledGraph rep;
        BigInt signed_count = 0;
    };
    std::map<CanonicalCode, ClassData> classes;

    std::vector<int> state(missing.size(), 0);
    for (;;) {
        std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
        for (const auto& e : h.edges()) edges.emplace_back(e.u, e.v, h.edge_symbol(e));
        int added = 0;
        for (std::size_t i = 0; i < missing.size(); ++i) {
            if (state[i] > 0) {
                edges.emplace_back(missing[i].first, missing[i].second, h.delta()[state[i] - 1]);
                ++added;
            }
        }
        std::vector<std::string> vlabels;
        for (Vertex v = 0; v < n; ++v) vlabels.push_back(h.vertex_symbol(v));
        LabeledGraph superset = LabeledGraph::make(h.sigma(), h.delta(), vlabels, std::move(edges));
        CanonicalCode code = canonical_form(superset, cfg);
        auto [it, inserted] = classes.try_emplace(code, ClassData{superset, 0});
        it->second.signed_count += (added % 2 == 0) ? 1 : -1;

        std::size_t i = 0;
        while (i < state.size() && state[i] == states - 1) state[i++] = 0;
        if (i == state.size()) break;
        ++state[i];
    }

    MotifParameter p;
    Rational inv_aut = Rational(1) / Rational(automorphism_count(h, cfg));
    for (const auto& [code, data] : classes) {
        if (data.signed_count == 0) continue;
        MotifParameter expansion = inj_to_hom(data.rep, cfg);
        p.add_scaled(expansion, Rational(data.signed_count) * inv_aut);
    }
    p.normalize();
    return p;
}

bool shape_connected(const Shape& s) {
    if (s.n <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t rest = frontier;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            next |= s.adj[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == s.n;
}

namespace {

std::vector<std::pair<Vertex, Vertex>> clique_pairs(int k) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v) pairs.push_back({u, v});
    return pairs;
}

} // namespace

MotifParameter graphlet_parameter(int k, const RunConfig& cfg) {
    if (k < 2 || k > cfg.graphlet_max_k)
        throw GuardError("graphlet_max_k", std::to_string(k),
                         "2.." + std::to_string(cfg.graphlet_max_k));
    auto pairs = clique_pairs(k);
    std::map<CanonicalCode, LabeledGraph> connected_classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
        Shape s;
        s.n = k;
        s.adj.assign(k, 0);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1) {
                s.add_edge(pairs[i].first, pairs[i].second);
                edges.push_back(pairs[i]);
            }
        if (!shape_connected(s)) continue;
        LabeledGraph g = plain_graph(k, edges);
        connected_classes.try_emplace(canonical_form(g, cfg), std::move(g));
    }
    MotifParameter p;
    for (const auto& [code, rep] : connected_classes) p.add_scaled(ind_to_hom(rep, cfg), 1);
    p.normalize();
    return p;
}

MotifParameter independent_set_parameter(int k, const RunConfig& cfg) {
    if (k < 2 || k > cfg.graphlet_max_k)
        throw GuardError("graphlet_max_k", std::to_string(k),
                         "2.." + std::to_string(cfg.graphlet_max_k));
    return ind_to_hom(edgeless_graph(k), cfg);
}

int max_support_treewidth(const MotifParameter& p, const RunConfig& cfg) {
    std::vector<const MotifMember*> members;
    members.reserve(p.support.size());
    for (const auto& [code, member] : p.support) members.push_back(&member);
    std::vector<int> widths(members.size(), 0);
    parallel_for(static_cast<int>(members.size()), cfg.parallelism,
                 [&](int i) { widths[i] = exact_treewidth(members[i]->graph, cfg); });
    int mx = 0;
    for (int w : widths) mx = std::max(mx, w);
    return mx;
}

long long clique_coefficient_criterion(int k, const std::function<bool(const Shape&)>& property,
                                       const RunConfig& cfg) {
    if (k < 2 || k > cfg.graphlet_max_k)
        throw GuardError("graphlet_max_k", std::to_string(k),
                         "2.." + std::to_string(cfg.graphlet_max_k));
    auto pairs = clique_pairs(k);
    long long sum = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
        Shape s;
        s.n = k;
        s.adj.assign(k, 0);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1) s.add_edge(pairs[i].first, pairs[i].second);
        if (!property(s)) continue;
        sum += (std::popcount(mask) % 2 == 0) ? 1 : -1;
    }
    return sum;
}

} // namespace wlm
