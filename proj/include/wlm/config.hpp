#pragma once

#include <cstdint>
#include <string>

namespace wlm {

// All size guards and budgets in one place. Every guard rejection names the
// guard, the measured value and the bound (see GuardError).
struct RunConfig {
    int canonical_max_n = 12;      // exhaustive canonical labeling
    int iso_max_n = 16;            // backtracking isomorphism search
    int aut_max_n = 10;            // automorphism counting
    int spasm_max_n = 10;          // Bell(10) = 115975 partitions
    int tw_max_n = 14;             // subset DP over elimination orderings
    int td_width_guard = 8;        // max pattern treewidth for the hom DP

    long long wl_tuple_budget = 1'000'000;      // n^k tuples per graph
    long long hom_product_budget = 100'000'000; // |V(G)|^|V(F)| for brute force
    int brute_pattern_max_n = 6;                // or pattern<=6 against target<=64
    int brute_target_max_n = 64;
    long long hom_table_budget = 4'000'000;     // total DP table entries

    int ind_max_n = 6;                          // induced-pattern vertex bound
    long long ind_superset_budget = 65536;      // (|Delta|+1)^missing_pairs
    int ind_crosscheck_max_n = 4;               // formula-vs-parameter cross check

    long long cfi_product_budget = 4096;        // sum over v of 2^(deg v - 1)
    int oddo_max_edges = 14;                    // |E(F)| in oddomorphism search
    long long oddo_hom_budget = 2'000'000;      // homomorphism enumeration bound
    long long anchor_budget = 1'000'000;        // rainbow clique catalog size

    int graphlet_max_k = 5;

    int parallelism = 1;                        // worker pool degree, >= 1
    std::uint64_t seed = 20240917;              // corpus generation seed
    std::string output_path;                    // CLI default output target

    static const RunConfig& defaults();
};

inline const RunConfig& RunConfig::defaults() {
    static const RunConfig cfg{};
    return cfg;
}

} // namespace wlm
