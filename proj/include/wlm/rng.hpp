#pragma once

#include <cstdint>

#include "wlm/labeled_graph.hpp"

namespace wlm {

// splitmix64: tiny, seed-stable across platforms; used for corpus
// generation so fixed seeds give byte-identical runs everywhere.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool coin() { return next() & 1; }
};

// Erdos-Renyi-style labeled graph with edge probability 1/2; alphabets are
// prefixes of {a,b} and {x,y}.
inline LabeledGraph random_labeled_graph(Rng& rng, int n, int sigma_count, int delta_count) {
    static const char* kSigma[] = {"a", "b"};
    static const char* kDelta[] = {"x", "y"};
    std::vector<std::string> sigma(kSigma, kSigma + sigma_count);
    std::vector<std::string> delta(kDelta, kDelta + delta_count);
    std::vector<std::string> vlabels;
    for (int v = 0; v < n; ++v) vlabels.push_back(sigma[rng.below(sigma_count)]);
    std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) edges.emplace_back(u, v, delta[rng.below(delta_count)]);
    return LabeledGraph::make(std::move(sigma), std::move(delta), std::move(vlabels),
                              std::move(edges));
}

} // namespace wlm
