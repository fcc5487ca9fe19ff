#include <doctest.h>

#include "oracles.hpp"
#include "wlm/cfi.hpp"
#include "wlm/errors.hpp"
#include "wlm/homcount.hpp"
#include "wlm/theta.hpp"

using namespace wlm;

TEST_CASE("brute-force homomorphism counts") {
    CHECK(count_homs_bruteforce(path_graph(2), cycle_graph(4)) == 8); // 2|E|
    CHECK(count_homs_bruteforce(complete_graph(3), complete_graph(3)) == 6);
    LabeledGraph k2x = plain_graph(2, {{0, 1}}, "a", "x");
    LabeledGraph k2y = plain_graph(2, {{0, 1}}, "a", "y");
    CHECK(count_homs_bruteforce(k2x, k2y) == 0);
    CHECK(count_homs_bruteforce(edgeless_graph(0), cycle_graph(4)) == 1);
    CHECK(count_homs_bruteforce(path_graph(3), edgeless_graph(0)) == 0);
}

TEST_CASE("decomposition-based counting matches the oracle") {
    LabeledGraph star = plain_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(count_homs_td(path_graph(2), star) == 6);
    CHECK(count_homs_td(path_graph(4), cycle_graph(6)) ==
          count_homs_bruteforce(path_graph(4), cycle_graph(6)));
    CHECK(count_homs_td(path_graph(3), edgeless_graph(0)) == 0);

    Rng rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        int sc = 1 + rng.below(2), dc = 1 + rng.below(2);
        LabeledGraph f = random_labeled_graph(rng, 1 + rng.below(5), sc, dc);
        LabeledGraph g = random_labeled_graph(rng, 1 + rng.below(8), sc, dc);
        CHECK(count_homs_td(f, g) == count_homs_bruteforce(f, g));
    }
}

TEST_CASE("partial counts extending a pin") {
    SUBCASE("degrees") {
        CHECK(count_homs_extending(path_graph(2), {0}, cycle_graph(4), {1}) == 2);
        LabeledGraph star = plain_graph(4, {{0, 1}, {0, 2}, {0, 3}});
        CHECK(count_homs_extending(path_graph(2), {0}, star, {0}) == 3);
        CHECK(count_homs_extending(path_graph(2), {0}, star, {1}) == 1);
    }
    SUBCASE("contradicting pins extend to nothing") {
        // anchor spans the K2 edge; a non-adjacent pin kills every extension
        CHECK(count_homs_extending(path_graph(2), {0, 1}, cycle_graph(4), {0, 2}) == 0);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(count_homs_extending(path_graph(2), {0}, cycle_graph(4), {0, 1}),
                        std::invalid_argument);
    }
    SUBCASE("unrealizable anchors are rejected") {
        // a single-vertex anchor demands a width-1 decomposition of K3
        CHECK_THROWS_AS(count_homs_extending(complete_graph(3), {0}, cycle_graph(4), {1}),
                        std::invalid_argument);
    }
    SUBCASE("partition identity: pins sum to the full count") {
        Rng rng(1618);
        for (int trial = 0; trial < 15; ++trial) {
            LabeledGraph f = trial % 2 ? path_graph(3) : complete_graph(3);
            VertexTuple anchor = trial % 2 ? VertexTuple{0} : VertexTuple{0, 1};
            LabeledGraph g = random_labeled_graph(rng, 2 + rng.below(5), 1, 1);
            BigInt sum = 0;
            const int n = g.vertex_count();
            std::vector<Vertex> pin(anchor.size(), 0);
            for (;;) {
                sum += count_homs_extending(f, anchor, g, pin);
                std::size_t i = 0;
                while (i < pin.size() && pin[i] == n - 1) pin[i++] = 0;
                if (i == pin.size()) break;
                ++pin[i];
            }
            CHECK(sum == count_homs_bruteforce(f, g));
        }
    }
}

TEST_CASE("eta tables") {
    SUBCASE("C4 at k=1: one color, count two") {
        ColorRegistry reg;
        std::vector<LabeledGraph> graphs{cycle_graph(4)};
        EtaTable eta = build_eta_table(path_graph(2), {0}, graphs, 1, reg);
        CHECK(eta.counts.size() == 1);
        CHECK(eta.counts.begin()->second == 2);
    }
    SUBCASE("star at k=1: center 3, leaves 1, total 6") {
        ColorRegistry reg;
        std::vector<LabeledGraph> graphs{plain_graph(4, {{0, 1}, {0, 2}, {0, 3}})};
        EtaTable eta = build_eta_table(path_graph(2), {0}, graphs, 1, reg);
        CHECK(eta.counts.size() == 2);
        BigInt total = 0;
        std::set<std::string> values;
        for (auto& [color, count] : eta.counts) values.insert(count.str());
        CHECK(values == std::set<std::string>{"1", "3"});
    }
    SUBCASE("C6 and 2K3 share one color and one entry") {
        ColorRegistry reg;
        std::vector<LabeledGraph> graphs{cycle_graph(6),
                                         disjoint_union(complete_graph(3), complete_graph(3))};
        EtaTable eta = build_eta_table(path_graph(2), {0}, graphs, 1, reg);
        CHECK(eta.counts.size() == 1);
        CHECK(eta.counts.begin()->second == 2);
    }
    SUBCASE("well-definedness across a CFI pair") {
        ColorRegistry reg;
        std::vector<LabeledGraph> graphs{ccfi(complete_graph(3), {}).product,
                                         ccfi_twist(complete_graph(3)).product};
        CHECK_NOTHROW(build_eta_table(path_graph(4), {0}, graphs, 1, reg));
    }
}

TEST_CASE("theta evaluation") {
    MotifParameter sub_p3 = sub_to_hom(path_graph(3));
    SUBCASE("Sub_P3 on K3 is 3") {
        ColorRegistry reg;
        CHECK(evaluate_theta(sub_p3, complete_graph(3), 1, reg) == Rational(3));
    }
    SUBCASE("Sub_K2 on C4 is 4") {
        ColorRegistry reg;
        CHECK(evaluate_theta(sub_to_hom(path_graph(2)), cycle_graph(4), 1, reg) == Rational(4));
    }
    SUBCASE("Ind_K3 on K4 at k=2 is 4") {
        ColorRegistry reg;
        CHECK(evaluate_theta(ind_to_hom(complete_graph(3)), complete_graph(4), 2, reg) ==
              Rational(4));
    }
    SUBCASE("refusal when the support treewidth exceeds k") {
        ColorRegistry reg;
        CHECK_THROWS_AS(evaluate_theta(sub_to_hom(complete_graph(3)), complete_graph(4), 1, reg),
                        GuardError);
    }
    SUBCASE("supports with tiny members work at larger k via repeated anchors") {
        MotifParameter is2 = independent_set_parameter(2); // support holds 2K1, K1, K2
        ColorRegistry r1, r2;
        CHECK(evaluate_theta(is2, cycle_graph(4), 1, r1) == Rational(2));
        CHECK(evaluate_theta(is2, cycle_graph(4), 2, r2) == Rational(2));
        Rng rng(6174);
        for (int trial = 0; trial < 5; ++trial) {
            LabeledGraph g = random_labeled_graph(rng, 3 + rng.below(4), 1, 1);
            ColorRegistry reg;
            CHECK(evaluate_theta(is2, g, 2, reg) == evaluate_parameter(is2, g));
        }
    }
    SUBCASE("theta equals direct evaluation on random graphs") {
        Rng rng(64);
        for (int trial = 0; trial < 8; ++trial) {
            LabeledGraph g = random_labeled_graph(rng, 3 + rng.below(5), 1, 1);
            ColorRegistry reg;
            CHECK(evaluate_theta(sub_p3, g, 1, reg) == evaluate_parameter(sub_p3, g));
        }
    }
}
