#include <doctest.h>

#include <numeric>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "wlm/canonical.hpp"
#include "wlm/errors.hpp"
#include "wlm/homcount.hpp"
#include "wlm/json_io.hpp"
#include "wlm/quotient.hpp"
#include "wlm/rng.hpp"

using namespace wlm;

namespace {

LabeledGraph renumbered(const LabeledGraph& g, const std::vector<Vertex>& perm) {
    std::vector<std::string> labels(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) labels[perm[v]] = g.vertex_symbol(v);
    std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v], g.edge_symbol(e));
    return LabeledGraph::make(g.sigma(), g.delta(), labels, edges);
}

} // namespace

TEST_CASE("graph documents parse and validate") {
    Json doc = {
        {"sigma", {"a"}},
        {"delta", {"x"}},
        {"vertices", {{{"id", 0}, {"label", "a"}}, {{"id", 1}, {"label", "a"}}}},
        {"edges", {{{"u", 0}, {"v", 1}, {"label", "x"}}}},
    };
    LabeledGraph k2 = graph_from_json(doc);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.vertex_symbol(0) == "a");

    SUBCASE("roundtrip") {
        CHECK(graph_from_json(graph_to_json(k2)).edge_count() == 1);
        LabeledGraph c6 = cycle_graph(6);
        LabeledGraph c6_again = graph_from_json(graph_to_json(c6));
        CHECK(c6_again.vertex_count() == 6);
        CHECK(c6_again.edge_count() == 6);
    }
    SUBCASE("self-loop rejected") {
        Json bad = doc;
        bad["edges"][0]["v"] = 0;
        CHECK_THROWS_WITH_AS(graph_from_json(bad), doctest::Contains("self-loop"), ParseError);
    }
    SUBCASE("duplicate edge rejected") {
        Json bad = doc;
        bad["edges"].push_back({{"u", 1}, {"v", 0}, {"label", "x"}});
        CHECK_THROWS_WITH_AS(graph_from_json(bad), doctest::Contains("duplicate"), ParseError);
    }
    SUBCASE("dangling reference rejected") {
        Json bad = doc;
        bad["edges"][0]["v"] = 7;
        CHECK_THROWS_WITH_AS(graph_from_json(bad), doctest::Contains("dangling"), ParseError);
    }
    SUBCASE("malformed document rejected") {
        Json bad = doc;
        bad.erase("vertices");
        CHECK_THROWS_AS(graph_from_json(bad), ParseError);
        CHECK_THROWS_AS(graph_from_json(Json::array()), ParseError);
    }
    SUBCASE("undeclared label rejected") {
        Json bad = doc;
        bad["edges"][0]["label"] = "z";
        CHECK_THROWS_WITH_AS(graph_from_json(bad), doctest::Contains("undeclared"), ParseError);
    }
}

TEST_CASE("canonical form is renumbering-invariant and separates") {
    LabeledGraph p4 = path_graph(4);
    CHECK(canonical_form(p4) == canonical_form(renumbered(p4, {3, 1, 0, 2})));
    CHECK(canonical_form(p4) == canonical_form(renumbered(p4, {1, 2, 3, 0})));
    CHECK(canonical_form(p4) != canonical_form(complete_graph(3)));

    SUBCASE("labeled K2 classes collapse symmetric encodings") {
        auto k2 = [](const std::string& l0, const std::string& l1) {
            return LabeledGraph::make({"a", "b"}, {"x"}, {l0, l1}, {{0, 1, "x"}});
        };
        CHECK(canonical_form(k2("a", "b")) == canonical_form(k2("b", "a")));
        CHECK(canonical_form(k2("a", "a")) != canonical_form(k2("a", "b")));
        CHECK(canonical_form(k2("a", "a")) != canonical_form(k2("b", "b")));
    }

    SUBCASE("complete invariant on the guarded range") {
        Rng rng(20113);
        for (int trial = 0; trial < 120; ++trial) {
            int n = 1 + rng.below(7);
            int sc1 = 1 + rng.below(2), dc1 = 1 + rng.below(2);
            LabeledGraph g = random_labeled_graph(rng, n, sc1, dc1);
            int sc2 = 1 + rng.below(2), dc2 = 1 + rng.below(2);
            LabeledGraph h = random_labeled_graph(rng, n, sc2, dc2);
            bool same = oracles::iso_by_permutations(g, h);
            CHECK((canonical_form(g) == canonical_form(h)) == same);
            CHECK(is_isomorphic(g, h) == same);

            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
            CHECK(canonical_form(g) == canonical_form(renumbered(g, perm)));
        }
    }
    SUBCASE("guard") {
        CHECK_THROWS_AS(canonical_form(path_graph(13)), GuardError);
    }
}

TEST_CASE("is_isomorphic basics") {
    CHECK(is_isomorphic(complete_graph(3), complete_graph(3)));
    CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
    LabeledGraph k2x = plain_graph(2, {{0, 1}}, "a", "x");
    LabeledGraph k2y = plain_graph(2, {{0, 1}}, "a", "y");
    CHECK_FALSE(is_isomorphic(k2x, k2y));
}

TEST_CASE("atomic types") {
    LabeledGraph g = LabeledGraph::make({"a"}, {"x", "y"}, {"a", "a", "a"},
                                        {{0, 1, "x"}, {1, 2, "y"}});
    CHECK(atomic_type(g, {0, 1}) == atomic_type(g, {0, 1}));
    CHECK(atomic_type(g, {0, 1}) != atomic_type(g, {1, 2})); // x vs y
    CHECK(atomic_type(g, {0, 0}) != atomic_type(g, {0, 1})); // repetition pattern
    LabeledGraph h = LabeledGraph::make({"a"}, {"x", "y"}, {"a", "a"}, {{0, 1, "y"}});
    CHECK(atomic_type(g, {1, 2}) == atomic_type(h, {0, 1}));

    SUBCASE("invariant under simultaneous isomorphism of graph and tuple") {
        Rng rng(606);
        for (int trial = 0; trial < 12; ++trial) {
            int n = 2 + rng.below(5);
            LabeledGraph a = random_labeled_graph(rng, n, 2, 2);
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
            LabeledGraph b = renumbered(a, perm);
            VertexTuple t{rng.below(n), rng.below(n), rng.below(n)};
            VertexTuple mapped{perm[t[0]], perm[t[1]], perm[t[2]]};
            CHECK(atomic_type(a, t) == atomic_type(b, mapped));
        }
    }
}

TEST_CASE("quotients") {
    LabeledGraph p3 = path_graph(3);
    SUBCASE("identifying the endpoints of P3 gives K2") {
        auto q = quotient(p3, Partition{{{0, 2}, {1}}});
        auto* g = std::get_if<LabeledGraph>(&q);
        REQUIRE(g != nullptr);
        CHECK(g->vertex_count() == 2);
        CHECK(g->edge_count() == 1);
    }
    SUBCASE("adjacent vertices reject with LoopCreated") {
        auto q = quotient(p3, Partition{{{0, 1}, {2}}});
        auto* r = std::get_if<QuotientRejection>(&q);
        REQUIRE(r != nullptr);
        CHECK(r->kind == QuotientReject::LoopCreated);
    }
    SUBCASE("vertex label clash") {
        LabeledGraph labeled =
            LabeledGraph::make({"a", "b"}, {"x"}, {"a", "a", "b"}, {{0, 1, "x"}, {1, 2, "x"}});
        auto q = quotient(labeled, Partition{{{0, 2}, {1}}});
        auto* r = std::get_if<QuotientRejection>(&q);
        REQUIRE(r != nullptr);
        CHECK(r->kind == QuotientReject::VertexLabelClash);
    }
    SUBCASE("parallel edge label clash") {
        LabeledGraph two = LabeledGraph::make({"a"}, {"x", "y"}, {"a", "a", "a", "a"},
                                              {{0, 1, "x"}, {2, 3, "y"}});
        auto q = quotient(two, Partition{{{0, 2}, {1, 3}}});
        auto* r = std::get_if<QuotientRejection>(&q);
        REQUIRE(r != nullptr);
        CHECK(r->kind == QuotientReject::ParallelEdgeLabelClash);
    }
    SUBCASE("singleton partition is the identity") {
        Rng rng(4711);
        for (int trial = 0; trial < 20; ++trial) {
            LabeledGraph g = random_labeled_graph(rng, 1 + rng.below(6), 2, 2);
            auto q = quotient(g, Partition::singletons(g.vertex_count()));
            auto* same = std::get_if<LabeledGraph>(&q);
            REQUIRE(same != nullptr);
            CHECK(canonical_form(*same) == canonical_form(g));
        }
    }
}

TEST_CASE("spasm enumeration") {
    SUBCASE("P3") {
        auto spasm = enumerate_spasm(path_graph(3));
        CHECK(spasm.size() == 2);
    }
    SUBCASE("K3 is rigid") {
        auto spasm = enumerate_spasm(complete_graph(3));
        CHECK(spasm.size() == 1);
    }
    SUBCASE("P4") {
        auto spasm = enumerate_spasm(path_graph(4));
        CHECK(spasm.size() == 4);
        bool has_triangle = false;
        for (const auto& m : spasm)
            if (m.graph.vertex_count() == 3 && m.graph.edge_count() == 3) has_triangle = true;
        CHECK(has_triangle);
    }
    SUBCASE("contains the pattern itself; members are surjective hom images") {
        Rng rng(90210);
        for (int trial = 0; trial < 10; ++trial) {
            LabeledGraph h = random_labeled_graph(rng, 2 + rng.below(4), 1 + rng.below(2), 1);
            auto spasm = enumerate_spasm(h);
            CanonicalCode hc = canonical_form(h);
            bool has_self = false;
            for (const auto& m : spasm) {
                if (m.code == hc) has_self = true;
                bool surjective = false;
                enumerate_homomorphisms(h, m.graph, 1 << 20, [&](const std::vector<Vertex>& phi) {
                    std::set<Vertex> image(phi.begin(), phi.end());
                    if (static_cast<int>(image.size()) == m.graph.vertex_count()) {
                        surjective = true;
                        return false;
                    }
                    return true;
                });
                CHECK(surjective);
            }
            CHECK(has_self);
        }
    }
    SUBCASE("guard names the Bell number") {
        try {
            enumerate_spasm(path_graph(11));
            CHECK(false);
        } catch (const GuardError& e) {
            CHECK(std::string(e.measured()).find("Bell") != std::string::npos);
        }
    }
}

TEST_CASE("el_transform") {
    SUBCASE("composite labels on K2") {
        LabeledGraph k2 =
            LabeledGraph::make({"alpha", "beta"}, {"d"}, {"alpha", "beta"}, {{0, 1, "d"}});
        LabeledGraph el = el_transform(k2);
        CHECK(el.sigma() == std::vector<std::string>{"1"});
        CHECK(el.vertex_count() == 2);
        CHECK(el.edge_count() == 1);
        CHECK(el.delta().size() == 1);
    }
    SUBCASE("uniform vertex labels keep the structure") {
        LabeledGraph g = cycle_graph(5);
        LabeledGraph el = el_transform(g);
        CHECK(el.vertex_count() == 5);
        CHECK(el.edge_count() == 5);
        CHECK(el.delta().size() == 1);
    }
    SUBCASE("every homomorphism survives the transform") {
        Rng rng(777);
        for (int trial = 0; trial < 20; ++trial) {
            LabeledGraph f = random_labeled_graph(rng, 1 + rng.below(4), 2, 2);
            LabeledGraph g = random_labeled_graph(rng, 1 + rng.below(6), 2, 2);
            LabeledGraph ef = el_transform(f), eg = el_transform(g);
            enumerate_homomorphisms(f, g, 1 << 22, [&](const std::vector<Vertex>& phi) {
                CHECK(is_homomorphism(ef, eg, phi));
                return true;
            });
            CHECK(oracles::homs_by_enumeration(f, g) <=
                  oracles::homs_by_enumeration(ef, eg));
        }
    }
    SUBCASE("counts preserved for uniform vertex labels") {
        Rng rng(778);
        for (int trial = 0; trial < 20; ++trial) {
            LabeledGraph f = random_labeled_graph(rng, 1 + rng.below(4), 1, 2);
            LabeledGraph g = random_labeled_graph(rng, 1 + rng.below(6), 1, 2);
            CHECK(oracles::homs_by_enumeration(f, g) ==
                  oracles::homs_by_enumeration(el_transform(f), el_transform(g)));
        }
    }
    SUBCASE("the orientation counterexample: one bi-labeled edge") {
        // the undirected composite label cannot pin which endpoint carried
        // which vertex label, so the swapped map is an EL-hom only
        LabeledGraph e = LabeledGraph::make({"a", "b"}, {"x"}, {"a", "b"}, {{0, 1, "x"}});
        CHECK(oracles::homs_by_enumeration(e, e) == 1);
        CHECK(oracles::homs_by_enumeration(el_transform(e), el_transform(e)) == 2);
    }
}

TEST_CASE("disjoint union") {
    LabeledGraph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(two_k3.vertex_count() == 6);
    CHECK(two_k3.edge_count() == 6);
    LabeledGraph g = path_graph(4);
    CHECK(canonical_form(disjoint_union(g, edgeless_graph(0))) == canonical_form(g));

    SUBCASE("connected patterns count additively") {
        Rng rng(31337);
        for (int trial = 0; trial < 12; ++trial) {
            LabeledGraph f = complete_graph(1 + rng.below(3));
            LabeledGraph a = random_labeled_graph(rng, 1 + rng.below(4), 1, 1);
            LabeledGraph b = random_labeled_graph(rng, 1 + rng.below(4), 1, 1);
            CHECK(oracles::homs_by_enumeration(f, disjoint_union(a, b)) ==
                  oracles::homs_by_enumeration(f, a) + oracles::homs_by_enumeration(f, b));
        }
    }
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(complete_graph(3)) == 6);
    CHECK(automorphism_count(path_graph(3)) == 2);
    LabeledGraph pinned = LabeledGraph::make({"a", "b"}, {"x"}, {"a", "b"}, {{0, 1, "x"}});
    CHECK(automorphism_count(pinned) == 1);
    Rng rng(5150);
    for (int trial = 0; trial < 15; ++trial) {
        LabeledGraph g = random_labeled_graph(rng, 1 + rng.below(6), 1 + rng.below(2), 1);
        CHECK(automorphism_count(g) == oracles::permutation_automorphisms(g));
    }
}
