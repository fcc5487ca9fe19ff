#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "wlm/config.hpp"
#include "wlm/labeled_graph.hpp"

namespace wlm {

using ColorId = int;

// Session-scoped interning table realizing the abstract color space: equal
// recursive color structures receive equal ids, across every graph refined
// in the same session. Single-threaded per session.
class ColorRegistry {
public:
    ColorId intern(const std::vector<std::int64_t>& payload);
    int symbol_id(const std::string& symbol);

    int dimension() const { return k_; }
    void bind_dimension(int k); // throws on mismatch with an earlier binding
    std::size_t size() const { return table_.size(); }

private:
    struct VecHash {
        std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (auto x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return h;
        }
    };
    std::unordered_map<std::vector<std::int64_t>, ColorId, VecHash> table_;
    std::unordered_map<std::string, int> symbols_;
    int k_ = 0;
};

// k-WL color assignment for every tuple in V(G)^k at some round. Tuples are
// indexed row-major: index = sum of v_i * n^(k-1-i).
struct Coloring {
    int k = 1;
    int n = 0;
    int round = 0;
    std::vector<ColorId> colors;

    ColorId color(const VertexTuple& t) const;
    std::size_t tuple_count() const { return colors.size(); }
    std::size_t class_count() const;
};

std::size_t tuple_index(const VertexTuple& t, int n);
VertexTuple tuple_at(std::size_t index, int n, int k);

// Round-0 coloring by atomic types.
Coloring wl_initial(const LabeledGraph& g, int k, ColorRegistry& reg,
                    const RunConfig& cfg = RunConfig::defaults());

// One refinement round: k=1 pairs the previous color with the multiset of
// (edge label, neighbor color); k>1 pairs it with the multiset over all w of
// the color tuple of the k substitutions v[w/j].
Coloring wl_round(const LabeledGraph& g, const Coloring& prev, ColorRegistry& reg);

// Refine to the fixpoint (the induced partition stops changing). Returns the
// stable coloring and the number of rounds it took to reach it.
std::pair<Coloring, int> stable_coloring(const LabeledGraph& g, int k, ColorRegistry& reg,
                                         const RunConfig& cfg = RunConfig::defaults());

// Lockstep refinement of several graphs with shared interning, until the
// union partition over all tuple sets is stable (or exactly `rounds` rounds
// when rounds >= 0). Second member of the result is the round reached.
std::pair<std::vector<Coloring>, int> joint_colorings(const std::vector<const LabeledGraph*>& graphs,
                                                      int k, ColorRegistry& reg, int rounds = -1,
                                                      const RunConfig& cfg = RunConfig::defaults());

// Multiset equality of stable colors under joint refinement.
bool wl_equivalent(const LabeledGraph& g, const LabeledGraph& h, int k,
                   const RunConfig& cfg = RunConfig::defaults());

// Multiset equality after exactly `rounds` synchronized rounds.
bool wl_equivalent_bounded(const LabeledGraph& g, const LabeledGraph& h, int k, int rounds,
                           const RunConfig& cfg = RunConfig::defaults());

} // namespace wlm
