#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "wlm/canonical.hpp"
#include "wlm/cfi.hpp"
#include "wlm/errors.hpp"
#include "wlm/homcount.hpp"
#include "wlm/wl_refine.hpp"

using namespace wlm;

TEST_CASE("round-1 refinement at k=1") {
    SUBCASE("C6 stays a single class") {
        ColorRegistry reg;
        Coloring c0 = wl_initial(cycle_graph(6), 1, reg);
        Coloring c1 = wl_round(cycle_graph(6), c0, reg);
        CHECK(c1.class_count() == 1);
    }
    SUBCASE("P3 splits endpoints from the middle") {
        ColorRegistry reg;
        LabeledGraph p3 = path_graph(3);
        Coloring c1 = wl_round(p3, wl_initial(p3, 1, reg), reg);
        CHECK(c1.class_count() == 2);
        CHECK(c1.colors[0] == c1.colors[2]);
        CHECK(c1.colors[0] != c1.colors[1]);
    }
    SUBCASE("edge labels enter the multiset") {
        LabeledGraph k2x = plain_graph(2, {{0, 1}}, "a", "x");
        LabeledGraph k2y = LabeledGraph::make({"a"}, {"x", "y"}, {"a", "a"}, {{0, 1, "y"}});
        ColorRegistry reg;
        Coloring cx = wl_initial(k2x, 1, reg);
        Coloring cy = wl_initial(k2y, 1, reg);
        CHECK(cx.colors[0] == cy.colors[0]); // same atomic type at round 0
        Coloring cx1 = wl_round(k2x, cx, reg);
        Coloring cy1 = wl_round(k2y, cy, reg);
        CHECK(cx1.colors[0] != cy1.colors[0]);
    }
}

TEST_CASE("stable colorings") {
    ColorRegistry reg;
    auto [c6, rounds6] = stable_coloring(cycle_graph(6), 1, reg);
    CHECK(c6.class_count() == 1);
    CHECK(rounds6 <= 1);

    ColorRegistry reg2;
    auto [p4, rounds4] = stable_coloring(path_graph(4), 1, reg2);
    CHECK(p4.class_count() == 2);
    CHECK(p4.colors[0] == p4.colors[3]);
    CHECK(p4.colors[1] == p4.colors[2]);

    SUBCASE("deterministic across sessions") {
        ColorRegistry a, b;
        LabeledGraph g = plain_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
        auto [ca, ra] = stable_coloring(g, 2, a);
        auto [cb, rb] = stable_coloring(g, 2, b);
        CHECK(ca.colors == cb.colors);
        CHECK(ra == rb);
    }
    SUBCASE("tuple budget guard") {
        ColorRegistry r;
        CHECK_THROWS_AS(stable_coloring(complete_graph(11), 6, r), GuardError);
    }
}

TEST_CASE("wl_equivalent") {
    LabeledGraph c6 = cycle_graph(6);
    LabeledGraph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(wl_equivalent(c6, two_k3, 1));
    CHECK_FALSE(wl_equivalent(c6, two_k3, 2));
    CHECK(wl_equivalent(c6, c6, 1));
    CHECK(wl_equivalent(c6, c6, 2));

    SUBCASE("isomorphic graphs are equivalent at every guarded k") {
        LabeledGraph g = plain_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
        LabeledGraph h = plain_graph(5, {{2, 3}, {0, 3}, {0, 1}, {1, 4}, {2, 4}});
        REQUIRE(is_isomorphic(g, h));
        for (int k = 1; k <= 3; ++k) CHECK(wl_equivalent(g, h, k));
    }
    SUBCASE("dimension monotonicity on CFI pairs and random graphs") {
        LabeledGraph l = ccfi(complete_graph(4), {}).product;
        LabeledGraph r = ccfi_twist(complete_graph(4)).product;
        CHECK(wl_equivalent(l, r, 2));
        CHECK(wl_equivalent(l, r, 1)); // k+1 equivalence implies k equivalence
        Rng rng(111);
        for (int trial = 0; trial < 8; ++trial) {
            LabeledGraph g = random_labeled_graph(rng, 4 + rng.below(3), 1, 1);
            LabeledGraph h = random_labeled_graph(rng, 4 + rng.below(3), 1, 1);
            if (wl_equivalent(g, h, 2)) CHECK(wl_equivalent(g, h, 1));
        }
    }
}

TEST_CASE("wl_equivalent_bounded") {
    LabeledGraph c6 = cycle_graph(6);
    LabeledGraph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(wl_equivalent_bounded(c6, two_k3, 1, 3));
    CHECK(wl_equivalent_bounded(c6, c6, 1, 0));
    CHECK(wl_equivalent_bounded(c6, c6, 2, 5));

    SUBCASE("equivalence at round r implies all earlier rounds") {
        Rng rng(2024);
        for (int trial = 0; trial < 10; ++trial) {
            LabeledGraph g = random_labeled_graph(rng, 3 + rng.below(4), 1, 1);
            LabeledGraph h = random_labeled_graph(rng, 3 + rng.below(4), 1, 1);
            for (int r = 3; r >= 1; --r) {
                if (wl_equivalent_bounded(g, h, 1, r))
                    CHECK(wl_equivalent_bounded(g, h, 1, r - 1));
            }
        }
    }
}

TEST_CASE("forward direction of the tree-homomorphism correspondence") {
    // 1WL-equivalent pairs have equal counts from every small tree
    LabeledGraph l = ccfi(complete_graph(3), {}).product;
    LabeledGraph r = ccfi_twist(complete_graph(3)).product;
    REQUIRE(wl_equivalent(l, r, 1));
    std::vector<LabeledGraph> trees = {path_graph(2), path_graph(3), path_graph(4), path_graph(5),
                                       plain_graph(4, {{0, 1}, {0, 2}, {0, 3}}),
                                       plain_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),
                                       plain_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}})};
    for (const auto& t : trees)
        CHECK(count_homs_td(t, l) == count_homs_td(t, r));

    SUBCASE("converse: an inequivalent pair is separated by a small tree") {
        LabeledGraph g = path_graph(4);
        LabeledGraph h = plain_graph(4, {{0, 1}, {0, 2}, {0, 3}});
        REQUIRE_FALSE(wl_equivalent(g, h, 1));
        bool separated = false;
        for (const auto& t : trees)
            if (count_homs_td(t, g) != count_homs_td(t, h)) separated = true;
        CHECK(separated);
    }
}

TEST_CASE("refinement monotonicity") {
    Rng rng(8);
    for (int trial = 0; trial < 6; ++trial) {
        LabeledGraph g = random_labeled_graph(rng, 4 + rng.below(4), 1 + rng.below(2), 1);
        ColorRegistry reg;
        Coloring cur = wl_initial(g, 1, reg);
        for (int round = 0; round < 4; ++round) {
            Coloring next = wl_round(g, cur, reg);
            CHECK(next.class_count() >= cur.class_count());
            // same next color forces same previous color
            std::map<ColorId, ColorId> back;
            bool refines = true;
            for (std::size_t i = 0; i < cur.colors.size(); ++i) {
                auto [it, inserted] = back.try_emplace(next.colors[i], cur.colors[i]);
                if (!inserted && it->second != cur.colors[i]) refines = false;
            }
            CHECK(refines);
            cur = next;
        }
    }
}
