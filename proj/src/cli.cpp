#include "wlm/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "wlm/acceptance.hpp"
#include "wlm/canonical.hpp"
#include "wlm/cfi.hpp"
#include "wlm/errors.hpp"
#include "wlm/homcount.hpp"
#include "wlm/json_io.hpp"
#include "wlm/motif.hpp"
#include "wlm/theta.hpp"
#include "wlm/wl_refine.hpp"
#include "wlm/wldim.hpp"

namespace wlm {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitNotEquivalent = 3;

void emit(std::ostream& out, const Json& j, const std::string& out_path) {
    if (!out_path.empty()) save_json(out_path, j);
    out << j.dump(2) << "\n";
}

Json coloring_json(const Coloring& coloring, int rounds) {
    Json j;
    j["k"] = coloring.k;
    j["rounds"] = rounds;
    Json tuples = Json::array();
    std::map<ColorId, std::size_t> histogram;
    for (std::size_t idx = 0; idx < coloring.tuple_count(); ++idx) {
        VertexTuple t = tuple_at(idx, coloring.n, coloring.k);
        tuples.push_back({{"tuple", t}, {"color", coloring.colors[idx]}});
        ++histogram[coloring.colors[idx]];
    }
    j["tuples"] = std::move(tuples);
    Json classes = Json::array();
    for (auto [color, size] : histogram) classes.push_back({{"color", color}, {"size", size}});
    j["classes"] = std::move(classes);
    j["class_count"] = histogram.size();
    return j;
}

struct CliState {
    RunConfig cfg;
    std::string out_path;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"WL-dimension toolkit for labeled graph motif parameters"};
    app.require_subcommand(1);

    CliState st;
    if (const char* env = std::getenv("WLMOTIF_CONFIG")) {
        try {
            st.cfg = load_config(env);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    std::string config_path;
    app.add_option("--config", config_path, "RunConfig JSON path (overrides WLMOTIF_CONFIG)");
    int parallelism = 0;
    app.add_option("--parallelism", parallelism, "worker pool degree");
    app.add_option("--out", st.out_path, "also write the JSON result to this file");

    // wl refine / wl equiv
    auto* wl = app.add_subcommand("wl", "k-WL refinement");
    auto* refine = wl->add_subcommand("refine", "refine one graph to stability");
    std::string refine_graph;
    int refine_k = 1, refine_rounds = -1;
    refine->add_option("--graph", refine_graph, "graph document")->required();
    refine->add_option("-k", refine_k, "dimension")->required();
    refine->add_option("--rounds", refine_rounds, "stop after exactly this many rounds");

    auto* equiv = wl->add_subcommand("equiv", "test kWL indistinguishability");
    std::string equiv_left, equiv_right;
    int equiv_k = 1;
    equiv->add_option("--left", equiv_left)->required();
    equiv->add_option("--right", equiv_right)->required();
    equiv->add_option("-k", equiv_k)->required();

    // tw
    auto* tw = app.add_subcommand("tw", "exact treewidth");
    std::string tw_graph, tw_out;
    tw->add_option("--graph", tw_graph)->required();
    tw->add_option("--decomposition", tw_out, "write the decomposition JSON here");

    // hom count
    auto* hom = app.add_subcommand("hom", "homomorphism counting");
    auto* hom_count = hom->add_subcommand("count", "count homomorphisms pattern -> graph");
    std::string hom_pattern, hom_graph, hom_method = "td";
    hom_count->add_option("--pattern", hom_pattern)->required();
    hom_count->add_option("--graph", hom_graph)->required();
    hom_count->add_option("--method", hom_method)->check(CLI::IsMember({"brute", "td"}));

    // eta build
    auto* eta = app.add_subcommand("eta", "per-color partial homomorphism counts");
    auto* eta_build = eta->add_subcommand("build", "build an eta table over a graph list");
    std::string eta_pattern;
    int eta_k = 1;
    std::vector<std::string> eta_graphs;
    std::string eta_anchor;
    eta_build->add_option("--pattern", eta_pattern)->required();
    eta_build->add_option("-k", eta_k)->required();
    eta_build->add_option("--graphs", eta_graphs, "graph documents")->required()->expected(-1);
    eta_build->add_option("--anchor", eta_anchor, "comma-separated pattern vertices");

    // motif support
    auto* motif = app.add_subcommand("motif", "motif parameters in the hom basis");
    auto* support = motif->add_subcommand("support", "emit the support of a parameter");
    std::string support_kind, support_pattern;
    int support_k = 0;
    support->add_option("--kind", support_kind)->required()->check(
        CLI::IsMember({"sub", "ind", "graphlet", "is"}));
    support->add_option("--pattern", support_pattern, "pattern document (sub/ind)");
    support->add_option("-k", support_k, "order (graphlet/is)");

    // wldim
    auto* wldim = app.add_subcommand("wldim", "WL-dimension determination");
    auto* dim_sub = wldim->add_subcommand("sub", "subgraph counting dimension");
    std::string dim_sub_pattern;
    dim_sub->add_option("--pattern", dim_sub_pattern)->required();
    auto* dim_ind = wldim->add_subcommand("ind", "induced counting dimension");
    std::string dim_ind_pattern;
    dim_ind->add_option("--pattern", dim_ind_pattern)->required();
    auto* dim_graphlet = wldim->add_subcommand("graphlet", "k-graphlet dimension");
    int dim_graphlet_k = 0;
    dim_graphlet->add_option("-k", dim_graphlet_k)->required();
    auto* dim_param = wldim->add_subcommand("param", "dimension of an explicit parameter");
    std::string dim_param_support;
    dim_param->add_option("--support", dim_param_support)->required();

    // cfi
    auto* cfi_cmd = app.add_subcommand("cfi", "CFI constructions");
    auto* cfi_build = cfi_cmd->add_subcommand("build", "build CCFI(base, U)");
    std::string cfi_base, cfi_set;
    bool cfi_twisted = false;
    cfi_build->add_option("--base", cfi_base)->required();
    cfi_build->add_flag("--twist", cfi_twisted, "use U = {lowest vertex}");
    cfi_build->add_option("--set", cfi_set, "comma-separated twist set U");
    auto* witness = cfi_cmd->add_subcommand("witness", "counterexample pair for a pattern");
    std::string witness_pattern, witness_left, witness_right;
    witness->add_option("--pattern", witness_pattern)->required();
    witness->add_option("--out-left", witness_left)->required();
    witness->add_option("--out-right", witness_right)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    std::vector<std::string> verify_groups;
    verify->add_option("groups", verify_groups, "criterion groups (default: all)");

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> raw;
        raw.push_back("wlmotif");
        for (const auto& a : argv) raw.push_back(a.c_str());
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help() << "\n";
            return kExitOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto parse_vertex_list = [](const std::string& text) {
        std::vector<Vertex> vs;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            vs.push_back(std::stoi(item));
        }
        return vs;
    };

    try {
        if (!config_path.empty()) st.cfg = load_config(config_path);
        if (parallelism > 0) st.cfg.parallelism = parallelism;
        const RunConfig& cfg = st.cfg;

        if (refine->parsed()) {
            LabeledGraph g = load_graph(refine_graph);
            ColorRegistry reg;
            if (refine_rounds >= 0) {
                auto [colorings, rounds] = joint_colorings({&g}, refine_k, reg, refine_rounds, cfg);
                emit(out, coloring_json(colorings.front(), rounds), st.out_path);
            } else {
                auto [coloring, rounds] = stable_coloring(g, refine_k, reg, cfg);
                emit(out, coloring_json(coloring, rounds), st.out_path);
            }
            return kExitOk;
        }
        if (equiv->parsed()) {
            LabeledGraph left = load_graph(equiv_left);
            LabeledGraph right = load_graph(equiv_right);
            bool same = wl_equivalent(left, right, equiv_k, cfg);
            Json j;
            j["k"] = equiv_k;
            j["equivalent"] = same;
            emit(out, j, st.out_path);
            return same ? kExitOk : kExitNotEquivalent;
        }
        if (tw->parsed()) {
            LabeledGraph g = load_graph(tw_graph);
            TreeDecomposition td = tree_decomposition(g, cfg);
            Json j;
            j["treewidth"] = exact_treewidth(g, cfg);
            if (!tw_out.empty()) save_json(tw_out, td_to_json(td));
            emit(out, j, st.out_path);
            return kExitOk;
        }
        if (hom_count->parsed()) {
            LabeledGraph f = load_graph(hom_pattern);
            LabeledGraph g = load_graph(hom_graph);
            BigInt count = hom_method == "brute" ? count_homs_bruteforce(f, g, cfg)
                                                 : count_homs_td(f, g, cfg);
            Json j;
            j["method"] = hom_method;
            j["count"] = count.str();
            emit(out, j, st.out_path);
            return kExitOk;
        }
        if (eta_build->parsed()) {
            LabeledGraph f = load_graph(eta_pattern);
            std::vector<LabeledGraph> graphs;
            for (const auto& path : eta_graphs) graphs.push_back(load_graph(path));
            ColorRegistry reg;
            reg.bind_dimension(eta_k);
            VertexTuple anchor = eta_anchor.empty() ? default_eta_anchor(f, eta_k, cfg)
                                                    : parse_vertex_list(eta_anchor);
            EtaTable table = build_eta_table(f, anchor, graphs, eta_k, reg, cfg);
            Json j;
            j["k"] = eta_k;
            j["anchor"] = table.anchor;
            Json entries = Json::object();
            for (const auto& [color, count] : table.counts)
                entries["color:" + std::to_string(color)] = count.str();
            j["table"] = std::move(entries);
            emit(out, j, st.out_path);
            return kExitOk;
        }
        if (support->parsed()) {
            MotifParameter p;
            if (support_kind == "sub" || support_kind == "ind") {
                if (support_pattern.empty())
                    throw ParseError("--pattern is required for kind " + support_kind);
                LabeledGraph h = load_graph(support_pattern);
                p = support_kind == "sub" ? sub_to_hom(h, cfg) : ind_to_hom(h, cfg);
            } else {
                if (support_k == 0) throw ParseError("-k is required for kind " + support_kind);
                p = support_kind == "graphlet" ? graphlet_parameter(support_k, cfg)
                                               : independent_set_parameter(support_k, cfg);
            }
            Json j = motif_to_json(p, cfg);
            j["kind"] = support_kind;
            emit(out, j, st.out_path);
            return kExitOk;
        }
        if (dim_sub->parsed()) {
            emit(out, dimension_report_to_json(wl_dimension_sub(load_graph(dim_sub_pattern), cfg)),
                 st.out_path);
            return kExitOk;
        }
        if (dim_ind->parsed()) {
            emit(out, dimension_report_to_json(wl_dimension_ind(load_graph(dim_ind_pattern), cfg)),
                 st.out_path);
            return kExitOk;
        }
        if (dim_graphlet->parsed()) {
            emit(out, dimension_report_to_json(wl_dimension_graphlet(dim_graphlet_k, cfg)),
                 st.out_path);
            return kExitOk;
        }
        if (dim_param->parsed()) {
            std::ifstream in(dim_param_support);
            if (!in) throw ParseError("cannot open '" + dim_param_support + "'");
            Json doc;
            in >> doc;
            MotifParameter p = motif_from_json(doc, cfg);
            emit(out, dimension_report_to_json(wl_dimension_parameter(p, cfg)), st.out_path);
            return kExitOk;
        }
        if (cfi_build->parsed()) {
            LabeledGraph base = load_graph(cfi_base);
            std::vector<Vertex> u;
            if (cfi_twisted)
                u = {0};
            else if (!cfi_set.empty())
                u = parse_vertex_list(cfi_set);
            CfiGraph c = ccfi(base, u, cfg);
            emit(out, cfi_to_json(c), st.out_path);
            return kExitOk;
        }
        if (witness->parsed()) {
            LabeledGraph f = load_graph(witness_pattern);
            CounterexamplePair pair = counterexample_pair(f, cfg);
            save_json(witness_left, graph_to_json(pair.left));
            save_json(witness_right, graph_to_json(pair.right));
            BigInt l = count_homs_td(f, pair.left, cfg);
            BigInt r = count_homs_td(f, pair.right, cfg);
            bool equivalent = wl_equivalent(pair.left, pair.right, pair.k, cfg);
            Json j;
            j["k"] = pair.k;
            j["equivalent"] = equivalent;
            j["homs_left"] = l.str();
            j["homs_right"] = r.str();
            j["differ"] = l != r;
            j["out_left"] = witness_left;
            j["out_right"] = witness_right;
            emit(out, j, st.out_path);
            return kExitOk;
        }
        if (verify->parsed()) {
            auto results = run_acceptance(st.cfg, verify_groups, out);
            bool all = true;
            for (const auto& r : results) all = all && r.passed;
            if (results.empty()) {
                err << "usage error: no matching acceptance groups\n";
                return kExitUsage;
            }
            return all ? kExitOk : kExitUsage;
        }
    } catch (const GuardError& e) {
        Json j;
        j["error"] = "guard";
        j["guard"] = e.guard();
        j["measured"] = e.measured();
        j["bound"] = e.bound();
        err << j.dump() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "usage error: no subcommand\n";
    return kExitUsage;
}

} // namespace wlm
