#include "wlm/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "wlm/errors.hpp"

namespace wlm {

Shape Shape::of(const LabeledGraph& g) {
    Shape s;
    s.n = g.vertex_count();
    s.adj.assign(s.n, 0);
    for (const auto& e : g.edges()) s.add_edge(e.u, e.v);
    return s;
}

int TreeDecomposition::width() const {
    std::size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return mx == 0 ? 0 : static_cast<int>(mx) - 1;
}

int NiceTreeDecomposition::width() const {
    std::size_t mx = 0;
    for (const auto& nd : nodes) mx = std::max(mx, nd.bag.size());
    return mx == 0 ? 0 : static_cast<int>(mx) - 1;
}

namespace {

// Vertices outside S u {v} reachable from v through S.
std::uint64_t elimination_neighborhood(const Shape& s, Vertex v, std::uint64_t S) {
    std::uint64_t seen = std::uint64_t(1) << v;
    std::uint64_t nb = s.adj[v];
    std::uint64_t inside = nb & S & ~seen;
    while (inside) {
        seen |= inside;
        std::uint64_t acc = 0;
        std::uint64_t rest = inside;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            acc |= s.adj[u];
        }
        nb |= acc;
        inside = nb & S & ~seen;
    }
    return nb & ~S & ~(std::uint64_t(1) << v);
}

struct TwTables {
    std::vector<std::uint8_t> opt;
    std::vector<std::uint8_t> choice;
};

TwTables treewidth_dp(const Shape& s, const RunConfig& cfg) {
    if (s.n > cfg.tw_max_n)
        throw GuardError("tw_max_n", std::to_string(s.n), std::to_string(cfg.tw_max_n));
    const int n = s.n;
    TwTables t;
    t.opt.assign(std::size_t(1) << n, 0);
    t.choice.assign(std::size_t(1) << n, 0);
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
        std::uint8_t best = 0xff, pick = 0;
        std::uint64_t rest = m;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t without = m & ~(std::uint64_t(1) << v);
            std::uint8_t q =
                static_cast<std::uint8_t>(std::popcount(elimination_neighborhood(s, v, without)));
            std::uint8_t cand = std::max(t.opt[without], q);
            if (cand < best) {
                best = cand;
                pick = static_cast<std::uint8_t>(v);
            }
        }
        t.opt[m] = best;
        t.choice[m] = pick;
    }
    return t;
}

std::vector<Vertex> optimal_elimination_order(const Shape& s, const RunConfig& cfg) {
    const int n = s.n;
    auto tables = treewidth_dp(s, cfg);
    std::vector<Vertex> order(n);
    std::uint64_t m = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    for (int pos = n - 1; pos >= 0; --pos) {
        Vertex v = tables.choice[m];
        order[pos] = v;
        m &= ~(std::uint64_t(1) << v);
    }
    return order;
}

} // namespace

int exact_treewidth(const Shape& s, const RunConfig& cfg) {
    if (s.n == 0) return 0;
    auto tables = treewidth_dp(s, cfg);
    return tables.opt[(std::uint64_t(1) << s.n) - 1];
}

int exact_treewidth(const LabeledGraph& g, const RunConfig& cfg) {
    return exact_treewidth(Shape::of(g), cfg);
}

TreeDecomposition tree_decomposition(const Shape& s, const RunConfig& cfg) {
    TreeDecomposition td;
    const int n = s.n;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    auto order = optimal_elimination_order(s, cfg);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::uint64_t eliminated = 0;
    td.bags.resize(n);
    std::vector<std::uint64_t> bag_mask(n, 0);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::uint64_t q = elimination_neighborhood(s, v, eliminated);
        bag_mask[i] = q | (std::uint64_t(1) << v);
        std::uint64_t rest = bag_mask[i];
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            td.bags[i].push_back(u);
        }
        eliminated |= std::uint64_t(1) << v;
    }
    for (int i = 0; i < n; ++i) {
        std::uint64_t q = bag_mask[i] & ~(std::uint64_t(1) << order[i]);
        int parent = -1;
        std::uint64_t rest = q;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (parent == -1 || pos[u] < pos[parent]) parent = u;
        }
        if (parent != -1) {
            td.tree_edges.push_back({i, pos[parent]});
        } else if (i + 1 < n) {
            // isolated piece: keep the structure a tree
            td.tree_edges.push_back({i, i + 1});
        }
    }
    return td;
}

TreeDecomposition tree_decomposition(const LabeledGraph& g, const RunConfig& cfg) {
    return tree_decomposition(Shape::of(g), cfg);
}

TdReport validate_td(const Shape& s, const TreeDecomposition& td) {
    TdReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    const int m = static_cast<int>(td.bags.size());
    for (const auto& bag : td.bags)
        for (Vertex v : bag)
            if (v < 0 || v >= s.n) fail("bag contains vertex " + std::to_string(v) + " outside the graph");

    // tree-ness
    if (m > 0 && static_cast<int>(td.tree_edges.size()) != m - 1) {
        fail("tree has " + std::to_string(td.tree_edges.size()) + " edges for " + std::to_string(m) +
             " nodes");
    } else if (m > 0) {
        std::vector<std::vector<int>> adj(m);
        for (auto [a, b] : td.tree_edges) {
            if (a < 0 || a >= m || b < 0 || b >= m) {
                fail("tree edge references a missing node");
                return report;
            }
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<char> seen(m, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    stack.push_back(y);
                }
        }
        if (count != m) fail("tree is disconnected");
    }
    if (!report.ok) return report;

    // condition 1: every edge inside some bag
    for (Vertex u = 0; u < s.n; ++u) {
        std::uint64_t row = s.adj[u];
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            if (v < u) continue;
            bool found = false;
            for (const auto& bag : td.bags) {
                if (std::binary_search(bag.begin(), bag.end(), u) &&
                    std::binary_search(bag.begin(), bag.end(), v)) {
                    found = true;
                    break;
                }
            }
            if (!found)
                fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is in no bag");
        }
    }

    // condition 2: occurrences of each vertex induce a connected subtree
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (Vertex v = 0; v < s.n; ++v) {
        std::vector<int> occ;
        for (int i = 0; i < m; ++i)
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) occ.push_back(i);
        if (occ.empty()) {
            fail("vertex " + std::to_string(v) + " appears in no bag");
            continue;
        }
        std::set<int> inocc(occ.begin(), occ.end());
        std::set<int> seen{occ[0]};
        std::vector<int> stack{occ[0]};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (inocc.count(y) && !seen.count(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
        }
        if (seen.size() != inocc.size())
            fail("occurrences of vertex " + std::to_string(v) + " are disconnected");
    }
    return report;
}

TdReport validate_td(const LabeledGraph& g, const TreeDecomposition& td) {
    return validate_td(Shape::of(g), td);
}

namespace {

struct NiceBuilder {
    const TreeDecomposition& td;
    NiceTreeDecomposition out;
    std::vector<std::vector<int>> adj;

    explicit NiceBuilder(const TreeDecomposition& t) : td(t) {
        adj.resize(td.bags.size());
        for (auto [a, b] : td.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }

    int add_node(std::vector<Vertex> bag, NiceTreeDecomposition::Kind kind, int parent,
                 Vertex pivot = -1) {
        NiceTreeDecomposition::Node nd;
        nd.bag = std::move(bag);
        nd.kind = kind;
        nd.parent = parent;
        nd.pivot = pivot;
        out.nodes.push_back(std::move(nd));
        int id = static_cast<int>(out.nodes.size()) - 1;
        if (parent >= 0) out.nodes[parent].children.push_back(id);
        return id;
    }

    // forget A\B (descending), then introduce B\A (ascending); returns the
    // node whose bag equals B (possibly `from` itself)
    int transition(int from, const std::vector<Vertex>& target) {
        std::vector<Vertex> cur = out.nodes[from].bag;
        int node = from;
        std::vector<Vertex> to_forget;
        for (Vertex v : cur)
            if (!std::binary_search(target.begin(), target.end(), v)) to_forget.push_back(v);
        std::sort(to_forget.rbegin(), to_forget.rend());
        for (Vertex v : to_forget) {
            cur.erase(std::find(cur.begin(), cur.end(), v));
            node = add_node(cur, NiceTreeDecomposition::Kind::Forget, node, v);
        }
        std::vector<Vertex> to_add;
        for (Vertex v : target)
            if (!std::binary_search(cur.begin(), cur.end(), v)) to_add.push_back(v);
        // target and cur are sorted, so to_add is ascending already
        for (Vertex v : to_add) {
            cur.insert(std::upper_bound(cur.begin(), cur.end(), v), v);
            node = add_node(cur, NiceTreeDecomposition::Kind::Introduce, node, v);
        }
        return node;
    }

    void leaf_chain(int from) {
        std::vector<Vertex> cur = out.nodes[from].bag;
        int node = from;
        while (cur.size() > 1) {
            Vertex v = cur.back();
            cur.pop_back();
            node = add_node(cur, NiceTreeDecomposition::Kind::Forget, node, v);
        }
    }

    // attach the td subtree rooted at td-node t (coming from td-node `from`)
    // below `node`, whose bag already equals td.bags[t]
    void attach(int t, int node, int from) {
        std::vector<int> children;
        for (int c : adj[t])
            if (c != from) children.push_back(c);
        descend(t, node, children, 0);
    }

    void descend(int t, int node, const std::vector<int>& children, std::size_t idx) {
        const std::size_t remaining = children.size() - idx;
        if (remaining == 0) {
            leaf_chain(node);
            return;
        }
        if (remaining == 1) {
            int c = children[idx];
            int mid = transition(node, td.bags[c]);
            attach(c, mid, t);
            return;
        }
        int left = add_node(out.nodes[node].bag, NiceTreeDecomposition::Kind::Split, node);
        int right = add_node(out.nodes[node].bag, NiceTreeDecomposition::Kind::Split, node);
        int c = children[idx];
        int mid = transition(left, td.bags[c]);
        attach(c, mid, t);
        descend(t, right, children, idx + 1);
    }
};

} // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const std::vector<Vertex>& root_bag) {
    std::vector<Vertex> want = root_bag;
    std::sort(want.begin(), want.end());

    int host = -1;
    for (int i = 0; i < static_cast<int>(td.bags.size()); ++i) {
        if (std::includes(td.bags[i].begin(), td.bags[i].end(), want.begin(), want.end())) {
            host = i;
            break;
        }
    }
    if (host < 0) throw std::invalid_argument("root_bag is not contained in any bag");

    NiceBuilder b(td);
    std::vector<Vertex> root_contents = want.empty() ? td.bags[host] : want;
    int root = b.add_node(root_contents, NiceTreeDecomposition::Kind::Root, -1);
    b.out.root = root;
    int at = b.transition(root, td.bags[host]);
    b.attach(host, at, -1);
    return std::move(b.out);
}

TdReport validate_nice(const Shape& s, const NiceTreeDecomposition& ntd) {
    TdReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    using Kind = NiceTreeDecomposition::Kind;

    TreeDecomposition flat;
    for (const auto& nd : ntd.nodes) flat.bags.push_back(nd.bag);
    for (int i = 0; i < static_cast<int>(ntd.nodes.size()); ++i)
        if (ntd.nodes[i].parent >= 0) flat.tree_edges.push_back({i, ntd.nodes[i].parent});
    TdReport underlying = validate_td(s, flat);
    if (!underlying.ok) {
        report.ok = false;
        for (auto& v : underlying.violations) report.violations.push_back(std::move(v));
    }

    for (int i = 0; i < static_cast<int>(ntd.nodes.size()); ++i) {
        const auto& nd = ntd.nodes[i];
        if (i == ntd.root) {
            if (nd.kind != Kind::Root || nd.parent != -1) fail("root node is not marked Root");
            continue;
        }
        if (nd.parent < 0) {
            fail("non-root node " + std::to_string(i) + " has no parent");
            continue;
        }
        const auto& pb = ntd.nodes[nd.parent].bag;
        switch (nd.kind) {
            case Kind::Introduce: {
                if (nd.bag.size() != pb.size() + 1 ||
                    !std::includes(nd.bag.begin(), nd.bag.end(), pb.begin(), pb.end()) ||
                    !std::binary_search(nd.bag.begin(), nd.bag.end(), nd.pivot) ||
                    std::binary_search(pb.begin(), pb.end(), nd.pivot))
                    fail("introduce node " + std::to_string(i) + " malformed");
                if (ntd.nodes[nd.parent].children.size() != 1)
                    fail("introduce node " + std::to_string(i) + " is not an only child");
                break;
            }
            case Kind::Forget: {
                if (nd.bag.size() + 1 != pb.size() ||
                    !std::includes(pb.begin(), pb.end(), nd.bag.begin(), nd.bag.end()) ||
                    !std::binary_search(pb.begin(), pb.end(), nd.pivot) ||
                    std::binary_search(nd.bag.begin(), nd.bag.end(), nd.pivot))
                    fail("forget node " + std::to_string(i) + " malformed");
                if (ntd.nodes[nd.parent].children.size() != 1)
                    fail("forget node " + std::to_string(i) + " is not an only child");
                break;
            }
            case Kind::Split: {
                if (nd.bag != pb) fail("split node " + std::to_string(i) + " changes the bag");
                if (ntd.nodes[nd.parent].children.size() != 2)
                    fail("split node " + std::to_string(i) + " without exactly two siblings");
                break;
            }
            case Kind::Root:
                fail("non-root node " + std::to_string(i) + " marked Root");
                break;
        }
        if (nd.children.empty() && nd.bag.size() != 1)
            fail("leaf node " + std::to_string(i) + " has a non-singleton bag");
    }
    return report;
}

} // namespace wlm
