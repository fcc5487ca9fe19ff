#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "wlm/errors.hpp"
#include "wlm/homcount.hpp"
#include "wlm/motif.hpp"
#include "wlm/quotient.hpp"

using namespace wlm;

TEST_CASE("parameter evaluation") {
    MotifParameter edges = single_hom_parameter(path_graph(2), 1);
    CHECK(evaluate_parameter(edges, cycle_graph(4)) == Rational(8));
    CHECK(evaluate_parameter(MotifParameter{}, cycle_graph(4)) == Rational(0));
    CHECK(evaluate_parameter(sub_to_hom(path_graph(2)), cycle_graph(4)) == Rational(4));
}

TEST_CASE("sub_to_hom coefficients") {
    SUBCASE("K2: homs over two") {
        MotifParameter p = sub_to_hom(path_graph(2));
        REQUIRE(p.size() == 1);
        CHECK(p.support.begin()->second.coeff == Rational(1, 2));
    }
    SUBCASE("P3: {P3: 1/2, K2: -1/2}") {
        MotifParameter p = sub_to_hom(path_graph(3));
        REQUIRE(p.size() == 2);
        std::set<std::string> coeffs;
        for (auto& [code, m] : p.support) {
            coeffs.insert(boost::multiprecision::numerator(m.coeff).str() + "/" +
                          boost::multiprecision::denominator(m.coeff).str());
        }
        CHECK(coeffs == std::set<std::string>{"1/2", "-1/2"});
        CHECK(evaluate_parameter(p, complete_graph(3)) == Rational(3));
    }
    SUBCASE("K3: {K3: 1/6}") {
        MotifParameter p = sub_to_hom(complete_graph(3));
        REQUIRE(p.size() == 1);
        CHECK(p.support.begin()->second.coeff == Rational(1, 6));
    }
    SUBCASE("no cancellation: support keys equal the spasm keys") {
        Rng rng(555);
        std::vector<LabeledGraph> patterns{path_graph(4), path_graph(5), cycle_graph(5),
                                           complete_graph(4), path_graph(6), cycle_graph(6),
                                           plain_graph(4, {{0, 1}, {0, 2}, {0, 3}}),
                                           plain_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}),
                                           plain_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}})};
        for (int trial = 0; trial < 4; ++trial)
            patterns.push_back(random_labeled_graph(rng, 3 + rng.below(4), 1 + rng.below(2), 1));
        for (const auto& h : patterns) {
            MotifParameter p = sub_to_hom(h);
            auto spasm = enumerate_spasm(h);
            REQUIRE(p.size() == spasm.size());
            auto it = p.support.begin();
            for (const auto& member : spasm) {
                CHECK(it->first == member.code);
                CHECK(it->second.coeff != 0);
                ++it;
            }
        }
    }
    SUBCASE("values match the subgraph enumeration oracle") {
        Rng rng(9100);
        std::vector<LabeledGraph> patterns{path_graph(3), path_graph(4), complete_graph(3),
                                           cycle_graph(4)};
        for (const auto& h : patterns)
            for (int trial = 0; trial < 8; ++trial) {
                LabeledGraph g = random_labeled_graph(rng, 3 + rng.below(6), 1, 1);
                CHECK(evaluate_parameter(sub_to_hom(h), g) ==
                      Rational(oracles::subgraph_copies(h, g)));
            }
    }
}

TEST_CASE("brute-force inversion identity on every small pattern") {
    // homs(H,G) decomposes into injective counts of the valid quotients;
    // this pins the Moebius coefficients used by sub_to_hom
    Rng rng(777111);
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1) edges.push_back(pairs[i]);
            LabeledGraph h = plain_graph(n, edges);
            LabeledGraph g = random_labeled_graph(rng, 3 + rng.below(4), 1, 1);
            Rational via_basis =
                Rational(oracles::permutation_automorphisms(h)) *
                evaluate_parameter(sub_to_hom(h), g);
            long long injective = oracles::subgraph_copies(h, g) *
                                  oracles::permutation_automorphisms(h);
            CHECK(via_basis == Rational(injective));
        }
    }
}

TEST_CASE("ind_to_hom") {
    SUBCASE("two isolated vertices in K3: none induced") {
        MotifParameter p = ind_to_hom(edgeless_graph(2));
        CHECK(evaluate_parameter(p, complete_graph(3)) == Rational(0));
    }
    SUBCASE("K3 pattern: support is the triangle alone") {
        MotifParameter p = ind_to_hom(complete_graph(3));
        REQUIRE(p.size() == 1);
        CHECK(evaluate_parameter(p, complete_graph(4)) == Rational(4));
    }
    SUBCASE("edgeless triple: K3 enters the support, max treewidth 2") {
        MotifParameter p = ind_to_hom(edgeless_graph(3));
        bool has_triangle = false;
        for (auto& [code, m] : p.support)
            if (m.graph.vertex_count() == 3 && m.graph.edge_count() == 3) has_triangle = true;
        CHECK(has_triangle);
        CHECK(max_support_treewidth(p) == 2);
    }
    SUBCASE("values match the induced enumeration oracle") {
        Rng rng(10301);
        std::vector<LabeledGraph> patterns{path_graph(3), edgeless_graph(3), complete_graph(3),
                                           path_graph(4)};
        for (const auto& h : patterns)
            for (int trial = 0; trial < 6; ++trial) {
                LabeledGraph g = random_labeled_graph(rng, 3 + rng.below(5), 1, 1);
                CHECK(evaluate_parameter(ind_to_hom(h), g) ==
                      Rational(oracles::induced_copies(h, g)));
            }
    }
    SUBCASE("labels participate in the expansion") {
        Rng rng(10302);
        LabeledGraph h = LabeledGraph::make({"a", "b"}, {"x", "y"}, {"a", "b"}, {});
        for (int trial = 0; trial < 6; ++trial) {
            LabeledGraph g = random_labeled_graph(rng, 3 + rng.below(4), 2, 2);
            CHECK(evaluate_parameter(ind_to_hom(h), g) == Rational(oracles::induced_copies(h, g)));
        }
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(ind_to_hom(edgeless_graph(7)), GuardError);
    }
}

TEST_CASE("graphlet and independent-set parameters") {
    SUBCASE("k=2 counts edges") {
        CHECK(evaluate_parameter(graphlet_parameter(2), cycle_graph(4)) == Rational(4));
    }
    SUBCASE("k=3 on K4") {
        CHECK(evaluate_parameter(graphlet_parameter(3), complete_graph(4)) == Rational(4));
    }
    SUBCASE("matches the connected-subset oracle") {
        Rng rng(2718);
        for (int k = 2; k <= 4; ++k) {
            MotifParameter p = graphlet_parameter(k);
            for (int trial = 0; trial < 5; ++trial) {
                LabeledGraph g = random_labeled_graph(rng, 4 + rng.below(4), 1, 1);
                CHECK(evaluate_parameter(p, g) == Rational(oracles::connected_k_subsets(g, k)));
            }
        }
    }
    SUBCASE("independent sets") {
        CHECK(evaluate_parameter(independent_set_parameter(2), cycle_graph(4)) == Rational(2));
        CHECK(evaluate_parameter(independent_set_parameter(2), complete_graph(3)) == Rational(0));
        CHECK(max_support_treewidth(independent_set_parameter(3)) == 2);
        Rng rng(11235);
        for (int k = 2; k <= 4; ++k) {
            MotifParameter p = independent_set_parameter(k);
            for (int trial = 0; trial < 5; ++trial) {
                LabeledGraph g = random_labeled_graph(rng, 4 + rng.below(4), 1, 1);
                CHECK(evaluate_parameter(p, g) == Rational(oracles::independent_k_subsets(g, k)));
            }
        }
    }
    SUBCASE("k out of range") {
        CHECK_THROWS_AS(graphlet_parameter(1), GuardError);
        CHECK_THROWS_AS(graphlet_parameter(6), GuardError);
        CHECK_THROWS_AS(independent_set_parameter(6), GuardError);
    }
}

TEST_CASE("linearity") {
    Rng rng(31415);
    MotifParameter a = sub_to_hom(path_graph(3));
    MotifParameter b = sub_to_hom(complete_graph(3));
    MotifParameter combined;
    combined.add_scaled(a, Rational(3));
    combined.add_scaled(b, Rational(-2, 5));
    combined.normalize();
    for (int trial = 0; trial < 6; ++trial) {
        LabeledGraph g = random_labeled_graph(rng, 3 + rng.below(5), 1, 1);
        CHECK(evaluate_parameter(combined, g) ==
              Rational(3) * evaluate_parameter(a, g) - Rational(2, 5) * evaluate_parameter(b, g));
    }
}

TEST_CASE("clique coefficient criterion") {
    CHECK(clique_coefficient_criterion(3, shape_connected) == 2);
    CHECK(clique_coefficient_criterion(3, [](const Shape& s) { return !shape_connected(s); }) == -2);
    for (int k = 2; k <= 5; ++k) {
        long long conn = clique_coefficient_criterion(k, shape_connected);
        long long disc =
            clique_coefficient_criterion(k, [](const Shape& s) { return !shape_connected(s); });
        CHECK(conn + disc == 0);
        CHECK(conn != 0);
    }
    CHECK(std::abs(clique_coefficient_criterion(
              4, [](const Shape& s) { return !shape_connected(s); })) == 6);
}

TEST_CASE("max support treewidth") {
    CHECK(max_support_treewidth(sub_to_hom(cycle_graph(7))) == 2);
    CHECK(max_support_treewidth(ind_to_hom(complete_graph(3))) == 2);
    CHECK(max_support_treewidth(sub_to_hom(path_graph(2))) == 1);
}
