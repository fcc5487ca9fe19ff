#include "wlm/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "wlm/canonical.hpp"
#include "wlm/cfi.hpp"
#include "wlm/errors.hpp"
#include "wlm/homcount.hpp"
#include "wlm/motif.hpp"
#include "wlm/rng.hpp"
#include "wlm/theta.hpp"
#include "wlm/wl_refine.hpp"
#include "wlm/wldim.hpp"

namespace wlm {

namespace {

struct Check {
    std::vector<std::string>& notes;
    bool ok = true;

    void expect(bool condition, const std::string& message) {
        if (!condition) {
            ok = false;
            notes.push_back(message);
        }
    }

    template <typename A, typename B>
    void expect_eq(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) {
            ok = false;
            std::ostringstream os;
            os << what << ": got " << got << ", expected " << want;
            notes.push_back(os.str());
        }
    }
};

// ---- small catalogs -------------------------------------------------------

std::vector<LabeledGraph> all_plain_graphs(int n, const RunConfig& cfg) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
    std::map<CanonicalCode, LabeledGraph> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1) edges.push_back(pairs[i]);
        LabeledGraph g = plain_graph(n, edges);
        classes.try_emplace(canonical_form(g, cfg), std::move(g));
    }
    std::vector<LabeledGraph> out;
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

std::vector<LabeledGraph> all_plain_graphs_up_to(int n, const RunConfig& cfg) {
    std::vector<LabeledGraph> out;
    for (int i = 1; i <= n; ++i) {
        auto batch = all_plain_graphs(i, cfg);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

LabeledGraph tree_from_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<int> work = seq;
    for (int s : work) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({std::min(leaf, s), std::max(leaf, s)});
        if (--degree[s] == 1) leaves.insert(s);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back({std::min(a, b), std::max(a, b)});
    return plain_graph(n, edges);
}

std::vector<LabeledGraph> trees_up_to(int n, const RunConfig& cfg) {
    std::vector<LabeledGraph> out;
    out.push_back(plain_graph(1, {}));
    if (n >= 2) out.push_back(path_graph(2));
    for (int k = 3; k <= n; ++k) {
        std::map<CanonicalCode, LabeledGraph> classes;
        std::vector<int> seq(k - 2, 0);
        for (;;) {
            LabeledGraph t = tree_from_pruefer(seq, k);
            classes.try_emplace(canonical_form(t, cfg), std::move(t));
            int i = 0;
            while (i < k - 2 && seq[i] == k - 1) seq[i++] = 0;
            if (i == k - 2) break;
            ++seq[i];
        }
        for (auto& [code, t] : classes) out.push_back(std::move(t));
    }
    return out;
}

std::vector<LabeledGraph> cfi_base_catalog() {
    std::vector<LabeledGraph> bases;
    bases.push_back(complete_graph(3));                                           // K3
    bases.push_back(cycle_graph(4));                                              // C4
    bases.push_back(cycle_graph(5));                                              // C5
    bases.push_back(cycle_graph(6));                                              // C6
    bases.push_back(complete_graph(4));                                           // K4
    bases.push_back(plain_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));    // diamond
    bases.push_back(plain_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}));            // paw
    bases.push_back(plain_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}})); // house
    bases.push_back(plain_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})); // bowtie
    bases.push_back(plain_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})); // K_{2,3}
    return bases;
}

std::vector<std::vector<Vertex>> subsets_up_to(int n, int max_size) {
    std::vector<std::vector<Vertex>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > max_size) continue;
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

long long p3_copies_oracle(const LabeledGraph& g) {
    long long total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        long long d = g.degree(v);
        total += d * (d - 1) / 2;
    }
    return total;
}

// ---- the ten criteria -----------------------------------------------------

void criterion_cycles_paths(const RunConfig& cfg, Check& c) {
    for (int len = 3; len <= 7; ++len)
        c.expect_eq(wl_dimension_sub(cycle_graph(len), cfg).dimension, 2,
                    "dim Sub_C" + std::to_string(len));
    c.expect_eq(wl_dimension_sub(cycle_graph(8), cfg).dimension, 3, "dim Sub_C8");
    for (int edges = 1; edges <= 2; ++edges)
        c.expect_eq(wl_dimension_sub(path_graph(edges + 1), cfg).dimension, 1,
                    "dim Sub_P (" + std::to_string(edges) + " edges)");
    for (int edges = 3; edges <= 7; ++edges)
        c.expect_eq(wl_dimension_sub(path_graph(edges + 1), cfg).dimension, 2,
                    "dim Sub_P (" + std::to_string(edges) + " edges)");
    c.expect_eq(wl_dimension_sub(path_graph(9), cfg).dimension, 3, "dim Sub_P (8 edges)");

    // The 7-edge row above cannot come out 2: the 7-edge path maps onto K4,
    // witnessed by the quotient with blocks {0,4},{1,6},{2,5},{3,7} (the
    // walk 0,1,2,3,0,2,1,3 covers all six clique edges), so its maximal
    // quotient treewidth is 3. Re-derive that witness here so the failure
    // line documents itself.
    auto q = quotient(path_graph(8), Partition{{{0, 4}, {1, 6}, {2, 5}, {3, 7}}});
    if (auto* k4 = std::get_if<LabeledGraph>(&q)) {
        if (k4->vertex_count() == 4 && k4->edge_count() == 6)
            c.notes.push_back(
                "note: the 7-edge path has K4 among its quotients (blocks "
                "{0,4},{1,6},{2,5},{3,7}); dimension 3 is forced, the stated expectation 2 "
                "is not attainable");
    }
}

void criterion_ind_formula(const RunConfig& cfg, Check& c) {
    // exhaustive patterns with <= 4 vertices, |Delta| = 1, |Sigma| <= 2
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
        std::set<CanonicalCode> seen;
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            for (std::uint32_t labels = 0; labels < (1u << n); ++labels) {
                std::vector<std::string> vlabels;
                for (int v = 0; v < n; ++v) vlabels.push_back(((labels >> v) & 1) ? "b" : "a");
                std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if ((mask >> i) & 1) edges.emplace_back(pairs[i].first, pairs[i].second, "x");
                LabeledGraph h =
                    LabeledGraph::make({"a", "b"}, {"x"}, std::move(vlabels), std::move(edges));
                if (!seen.insert(canonical_form(h, cfg)).second) continue;
                DimensionReport formula = wl_dimension_ind(h, cfg);
                c.expect_eq(formula.dimension, std::max(1, n - 1),
                            "Ind formula on " + std::to_string(n) + " vertices");
                DimensionReport via_param = wl_dimension_parameter(ind_to_hom(h, cfg), cfg);
                c.expect_eq(via_param.dimension, formula.dimension,
                            "Ind parameter route on " + std::to_string(n) + " vertices");
            }
        }
    }
    // 5-vertex patterns over |Sigma|,|Delta| <= 2 (seeded sample), formula path
    Rng rng(cfg.seed ^ 0x1d5ull);
    for (int trial = 0; trial < 20; ++trial) {
        int sigma_count = 1 + rng.below(2);
        int delta_count = 1 + rng.below(2);
        LabeledGraph h = random_labeled_graph(rng, 5, sigma_count, delta_count);
        c.expect_eq(wl_dimension_ind(h, cfg).dimension, 4, "Ind formula on 5 vertices");
    }
    // and a few |Delta| = 1 five-vertex patterns through the support sweep
    for (int trial = 0; trial < 5; ++trial) {
        LabeledGraph h = random_labeled_graph(rng, 5, 1 + rng.below(2), 1);
        c.expect_eq(wl_dimension_parameter(ind_to_hom(h, cfg), cfg).dimension, 4,
                    "Ind parameter route on 5 vertices");
    }
}

void criterion_graphlets(const RunConfig& cfg, Check& c) {
    const long long factorial[6] = {1, 1, 2, 6, 24, 120};
    for (int k = 2; k <= 5; ++k) {
        DimensionReport r = wl_dimension_graphlet(k, cfg);
        c.expect_eq(r.dimension, k - 1, "graphlet dimension k=" + std::to_string(k));
        c.expect_eq(r.witness.vertex_count(), k, "graphlet witness vertices k=" + std::to_string(k));
        c.expect_eq(r.witness.edge_count(), k * (k - 1) / 2,
                    "graphlet witness is the clique k=" + std::to_string(k));
        long long conn = clique_coefficient_criterion(k, shape_connected, cfg);
        long long disc = clique_coefficient_criterion(
            k, [](const Shape& s) { return !shape_connected(s); }, cfg);
        c.expect(conn != 0, "clique criterion (connected) is zero for k=" + std::to_string(k));
        c.expect_eq(conn + disc, 0ll, "complementary criterion sum k=" + std::to_string(k));
        if (k >= 3)
            c.expect_eq(std::abs(disc), factorial[k - 1],
                        "|criterion(k,disconnected)| k=" + std::to_string(k));
    }
}

void criterion_cfi_pairs(const RunConfig& cfg, Check& c) {
    struct Case {
        const char* name;
        LabeledGraph f;
        int k;
    };
    std::vector<Case> cases;
    cases.push_back({"K3", complete_graph(3), 1});
    cases.push_back({"C5", cycle_graph(5), 1});
    cases.push_back({"K4", complete_graph(4), 2});
    for (const auto& cs : cases) {
        CounterexamplePair pair = counterexample_pair(cs.f, cfg);
        c.expect_eq(pair.k, cs.k, std::string(cs.name) + ": k");
        c.expect(wl_equivalent(pair.left, pair.right, pair.k, cfg),
                 std::string(cs.name) + ": pair is not " + std::to_string(pair.k) + "WL-equivalent");
        BigInt l = count_homs_bruteforce(cs.f, pair.left, cfg);
        BigInt r = count_homs_bruteforce(cs.f, pair.right, cfg);
        c.expect(l != r, std::string(cs.name) + ": hom counts agree (" + l.str() + ")");
    }
    LabeledGraph k3 = complete_graph(3);
    c.expect_eq(count_homs_bruteforce(k3, ccfi(k3, {}, cfg).product, cfg), BigInt(12),
                "homs(K3, CCFI(K3))");
    c.expect_eq(count_homs_bruteforce(k3, ccfi_twist(k3, cfg).product, cfg), BigInt(0),
                "homs(K3, twisted CCFI(K3))");
}

void criterion_gf2(const RunConfig& cfg, Check& c) {
    auto patterns = all_plain_graphs_up_to(4, cfg);
    auto targets = all_plain_graphs_up_to(4, cfg);
    for (const auto& g : targets) {
        if (!g.is_connected()) continue;
        for (const std::vector<Vertex>& u :
             std::vector<std::vector<Vertex>>{{}, {0}}) {
            CfiGraph product = ccfi(g, u, cfg);
            for (const auto& f : patterns) {
                BigInt total = 0;
                enumerate_homomorphisms(f, g, cfg.oddo_hom_budget,
                                        [&](const std::vector<Vertex>& phi) {
                                            total += gf2_hom_count(f, g, u, Homomorphism{phi}, cfg);
                                            return true;
                                        });
                BigInt brute = count_homs_bruteforce(f, product.product, cfg);
                if (total != brute) {
                    c.expect(false, "GF(2) certificate mismatch: " + total.str() + " vs " +
                                        brute.str());
                    return;
                }
            }
        }
    }
}

void criterion_parity_iso(const RunConfig& cfg, Check& c) {
    std::vector<LabeledGraph> bases{complete_graph(3), cycle_graph(4), complete_graph(4)};
    const char* names[] = {"K3", "C4", "K4"};
    for (std::size_t b = 0; b < bases.size(); ++b) {
        auto subsets = subsets_up_to(bases[b].vertex_count(), 2);
        for (const auto& u : subsets)
            for (const auto& u2 : subsets) {
                bool expected = (u.size() % 2) == (u2.size() % 2);
                bool got = verify_parity_iso(bases[b], u, u2, cfg);
                if (got != expected) {
                    c.expect(false, std::string(names[b]) + ": parity isomorphism verdict wrong for |U|=" +
                                        std::to_string(u.size()) + ", |U'|=" + std::to_string(u2.size()));
                    return;
                }
            }
    }
}

void criterion_eta_theta(const RunConfig& cfg, Check& c) {
    Rng rng(cfg.seed ^ 0xe7a);
    std::vector<LabeledGraph> graphs;
    for (int i = 0; i < 20; ++i) {
        int n = 4 + rng.below(5);
        graphs.push_back(random_labeled_graph(rng, n, 1, 1));
    }
    struct Case {
        const char* name;
        LabeledGraph f;
        int k;
    };
    std::vector<Case> cases;
    cases.push_back({"K2", path_graph(2), 1});
    cases.push_back({"P3", path_graph(3), 1});
    cases.push_back({"P4", path_graph(4), 1});
    cases.push_back({"K3", complete_graph(3), 2});
    for (const auto& cs : cases) {
        ColorRegistry reg;
        reg.bind_dimension(cs.k);
        VertexTuple anchor = default_eta_anchor(cs.f, cs.k, cfg);
        try {
            std::vector<const LabeledGraph*> ptrs;
            for (const auto& g : graphs) ptrs.push_back(&g);
            auto [colorings, rounds] = joint_colorings(ptrs, cs.k, reg, -1, cfg);
            (void)rounds;
            EtaTable eta = build_eta_table_for(cs.f, anchor, graphs, colorings, reg, cfg);
            for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
                BigInt sum = 0;
                for (ColorId id : colorings[gi].colors) sum += eta.counts.at(id);
                BigInt direct = count_homs_bruteforce(cs.f, graphs[gi], cfg);
                if (sum != direct) {
                    c.expect(false, std::string(cs.name) + ": eta sum " + sum.str() +
                                        " != homs " + direct.str());
                    return;
                }
            }
        } catch (const WellDefinednessError& e) {
            c.expect(false, std::string(cs.name) + ": well-definedness trap: " + e.what());
            return;
        }
    }
    // theta for Sub_P3 against direct subgraph enumeration
    MotifParameter sub_p3 = sub_to_hom(path_graph(3), cfg);
    for (const auto& g : graphs) {
        ColorRegistry reg;
        Rational theta = evaluate_theta(sub_p3, g, 1, reg, cfg);
        if (theta != Rational(p3_copies_oracle(g))) {
            c.expect(false, "theta(Sub_P3) mismatch on a corpus graph");
            return;
        }
    }
}

void criterion_hom_oracle(const RunConfig& cfg, Check& c) {
    Rng rng(cfg.seed ^ 0x40ac1e);
    for (int trial = 0; trial < 200; ++trial) {
        int sigma_count = 1 + rng.below(2), delta_count = 1 + rng.below(2);
        LabeledGraph f = random_labeled_graph(rng, 1 + rng.below(5), sigma_count, delta_count);
        LabeledGraph g = random_labeled_graph(rng, 1 + rng.below(8), sigma_count, delta_count);
        BigInt brute = count_homs_bruteforce(f, g, cfg);
        BigInt td = count_homs_td(f, g, cfg);
        if (brute != td) {
            c.expect(false, "oracle mismatch at trial " + std::to_string(trial) + ": brute " +
                                brute.str() + " vs td " + td.str());
            return;
        }
    }
}

void criterion_dvorak(const RunConfig& cfg, Check& c) {
    auto trees5 = trees_up_to(5, cfg);
    // CFI pairs are 1WL-equivalent; all tree counts must agree
    for (const auto& base : cfi_base_catalog()) {
        LabeledGraph left = ccfi(base, {}, cfg).product;
        LabeledGraph right = ccfi_twist(base, cfg).product;
        if (!wl_equivalent(left, right, 1, cfg)) {
            c.expect(false, "CFI pair is not 1WL-equivalent");
            return;
        }
        for (const auto& t : trees5) {
            BigInt l = count_homs_td(t, left, cfg);
            BigInt r = count_homs_td(t, right, cfg);
            if (l != r) {
                c.expect(false, "tree hom counts differ on a 1WL-equivalent CFI pair");
                return;
            }
        }
    }
    // inequivalent random pairs must be separated by some small tree
    auto trees7 = trees_up_to(7, cfg);
    Rng rng(cfg.seed ^ 0xd02a4);
    int found_pairs = 0, attempts = 0;
    while (found_pairs < 10 && attempts < 400) {
        ++attempts;
        LabeledGraph g = random_labeled_graph(rng, 4 + rng.below(3), 1, 1);
        LabeledGraph h = random_labeled_graph(rng, 4 + rng.below(3), 1, 1);
        if (wl_equivalent(g, h, 1, cfg)) continue;
        ++found_pairs;
        bool separated = false;
        for (const auto& t : trees7) {
            if (count_homs_td(t, g, cfg) != count_homs_td(t, h, cfg)) {
                separated = true;
                break;
            }
        }
        if (!separated) {
            c.expect(false, "no tree with <= 7 vertices separates a 1WL-inequivalent pair");
            return;
        }
    }
    c.expect_eq(found_pairs, 10, "number of 1WL-inequivalent random pairs");
}

void criterion_n_round(const RunConfig& cfg, Check& c) {
    auto catalog = all_plain_graphs_up_to(5, cfg);
    struct Pair {
        LabeledGraph left, right;
        int k;
    };
    std::vector<Pair> pairs;
    for (const auto& base : cfi_base_catalog()) {
        if (base.vertex_count() > 4 && exact_treewidth(base, cfg) > 2) continue;
        LabeledGraph left = ccfi(base, {}, cfg).product;
        LabeledGraph right = ccfi_twist(base, cfg).product;
        pairs.push_back({left, right, 1});
    }
    {
        LabeledGraph k4 = complete_graph(4);
        pairs.push_back({ccfi(k4, {}, cfg).product, ccfi_twist(k4, cfg).product, 2});
        LabeledGraph k3 = complete_graph(3);
        // 2WL separates this pair; the implication is vacuously exercised
        pairs.push_back({ccfi(k3, {}, cfg).product, ccfi_twist(k3, cfg).product, 2});
    }
    for (const auto& pr : pairs) {
        for (const auto& f : catalog) {
            if (exact_treewidth(f, cfg) > pr.k) continue;
            if (!wl_equivalent_bounded(pr.left, pr.right, pr.k, f.vertex_count(), cfg)) continue;
            BigInt l = count_homs_td(f, pr.left, cfg);
            BigInt r = count_homs_td(f, pr.right, cfg);
            if (l != r) {
                c.expect(false, "bounded-round equivalence without equal hom counts (|V(F)|=" +
                                    std::to_string(f.vertex_count()) + ")");
                return;
            }
        }
    }
}

struct CriterionDef {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void(const RunConfig&, Check&)> run;
};

const std::vector<CriterionDef>& criteria() {
    static const std::vector<CriterionDef> defs = {
        {1, "cycles-paths", 60.0, criterion_cycles_paths},
        {2, "ind-formula", 120.0, criterion_ind_formula},
        {3, "graphlets", 60.0, criterion_graphlets},
        {4, "cfi-pairs", 120.0, criterion_cfi_pairs},
        {5, "gf2", 60.0, criterion_gf2},
        {6, "parity-iso", 30.0, criterion_parity_iso},
        {7, "eta-theta", 120.0, criterion_eta_theta},
        {8, "hom-oracle", 60.0, criterion_hom_oracle},
        {9, "dvorak", 60.0, criterion_dvorak},
        {10, "n-round", 60.0, criterion_n_round},
    };
    return defs;
}

} // namespace

std::vector<std::string> acceptance_group_names() {
    std::vector<std::string> names;
    for (const auto& def : criteria()) names.push_back(def.name);
    return names;
}

std::vector<CriterionResult> run_acceptance(const RunConfig& cfg,
                                            const std::vector<std::string>& groups,
                                            std::ostream& out) {
    std::vector<CriterionResult> results;
    for (const auto& def : criteria()) {
        if (!groups.empty() &&
            std::find(groups.begin(), groups.end(), def.name) == groups.end())
            continue;
        CriterionResult result;
        result.id = def.id;
        result.name = def.name;
        Check check{result.notes};
        auto start = std::chrono::steady_clock::now();
        try {
            def.run(cfg, check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        result.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result.seconds > def.budget_seconds) {
            check.ok = false;
            result.notes.push_back("runtime " + std::to_string(result.seconds) +
                                   "s exceeds budget " + std::to_string(def.budget_seconds) + "s");
        }
        result.passed = check.ok;
        out << (result.passed ? "PASS" : "FAIL") << " criterion " << def.id << " (" << def.name
            << ") [" << std::fixed;
        out.precision(1);
        out << result.seconds << "s]";
        out.unsetf(std::ios::fixed);
        for (const auto& note : result.notes) out << "\n    - " << note;
        out << "\n";
        results.push_back(std::move(result));
    }
    return results;
}

} // namespace wlm
