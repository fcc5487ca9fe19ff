#include "wlm/json_io.hpp"

#include <fstream>

#include "wlm/errors.hpp"

namespace wlm {

Json graph_to_json(const LabeledGraph& g) {
    Json j;
    j["sigma"] = g.sigma();
    j["delta"] = g.delta();
    Json vertices = Json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        vertices.push_back({{"id", v}, {"label", g.vertex_symbol(v)}});
    j["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"u", e.u}, {"v", e.v}, {"label", g.edge_symbol(e)}});
    j["edges"] = std::move(edges);
    return j;
}

LabeledGraph graph_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("malformed graph document: not a JSON object");
    for (const char* key : {"sigma", "delta", "vertices", "edges"})
        if (!j.contains(key) || !j.at(key).is_array())
            throw ParseError(std::string("malformed graph document: missing array '") + key + "'");

    std::vector<std::string> sigma, delta;
    for (const auto& s : j.at("sigma")) {
        if (!s.is_string()) throw ParseError("malformed graph document: sigma entries must be strings");
        sigma.push_back(s.get<std::string>());
    }
    for (const auto& s : j.at("delta")) {
        if (!s.is_string()) throw ParseError("malformed graph document: delta entries must be strings");
        delta.push_back(s.get<std::string>());
    }

    const auto& vs = j.at("vertices");
    std::vector<std::string> labels(vs.size());
    std::vector<char> seen(vs.size(), 0);
    for (const auto& v : vs) {
        if (!v.is_object() || !v.contains("id") || !v.contains("label") ||
            !v.at("id").is_number_integer() || !v.at("label").is_string())
            throw ParseError("malformed graph document: vertex entries need integer 'id' and string 'label'");
        const long long id = v.at("id").get<long long>();
        if (id < 0 || id >= static_cast<long long>(vs.size()))
            throw ParseError("vertex ids must be exactly 0.." + std::to_string(vs.size() - 1) +
                             ", got " + std::to_string(id));
        if (seen[id]) throw ParseError("duplicate vertex id " + std::to_string(id));
        seen[id] = 1;
        labels[id] = v.at("label").get<std::string>();
    }

    std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("label") ||
            !e.at("u").is_number_integer() || !e.at("v").is_number_integer() ||
            !e.at("label").is_string())
            throw ParseError("malformed graph document: edge entries need integers 'u','v' and string 'label'");
        const long long u = e.at("u").get<long long>();
        const long long v = e.at("v").get<long long>();
        if (u < 0 || u >= static_cast<long long>(vs.size()) || v < 0 ||
            v >= static_cast<long long>(vs.size()))
            throw ParseError("dangling vertex reference in edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "}");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v),
                           e.at("label").get<std::string>());
    }
    return LabeledGraph::make(std::move(sigma), std::move(delta), std::move(labels), std::move(edges));
}

LabeledGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph document '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("malformed graph document '" + path + "': " + e.what());
    }
    return graph_from_json(j);
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

Json fraction_to_json(const Rational& r) {
    return Json{{"num", boost::multiprecision::numerator(r).str()},
                {"den", boost::multiprecision::denominator(r).str()}};
}

Rational fraction_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("malformed fraction: expected {\"num\":...,\"den\":...}");
    auto read = [](const Json& v) -> BigInt {
        if (v.is_string()) return BigInt(v.get<std::string>());
        if (v.is_number_integer()) return BigInt(v.get<long long>());
        throw ParseError("malformed fraction component");
    };
    BigInt den = read(j.at("den"));
    if (den == 0) throw ParseError("fraction with zero denominator");
    return Rational(read(j.at("num")), den);
}

Json td_to_json(const TreeDecomposition& td) {
    Json j;
    j["width"] = td.width();
    Json bags = Json::array();
    for (const auto& b : td.bags) bags.push_back(b);
    j["bags"] = std::move(bags);
    Json edges = Json::array();
    for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
    j["tree_edges"] = std::move(edges);
    return j;
}

Json dimension_report_to_json(const DimensionReport& r) {
    Json j;
    j["dimension"] = r.dimension;
    j["witness"] = graph_to_json(r.witness);
    j["witness_treewidth"] = r.witness_treewidth;
    j["support_size"] = r.support_size;
    j["floor_applied"] = r.floor_applied;
    Json members = Json::array();
    for (const auto& m : r.members)
        members.push_back({{"vertices", m.vertices}, {"edges", m.edges}, {"treewidth", m.treewidth}});
    j["members"] = std::move(members);
    return j;
}

Json motif_to_json(const MotifParameter& p, const RunConfig& cfg) {
    Json j;
    Json support = Json::array();
    for (const auto& [code, member] : p.support) {
        support.push_back({{"graph", graph_to_json(member.graph)},
                           {"coefficient", fraction_to_json(member.coeff)},
                           {"treewidth", exact_treewidth(member.graph, cfg)}});
    }
    j["support"] = std::move(support);
    return j;
}

MotifParameter motif_from_json(const Json& j, const RunConfig& cfg) {
    if (!j.is_object() || !j.contains("support") || !j.at("support").is_array())
        throw ParseError("malformed parameter document: missing 'support' array");
    MotifParameter p;
    for (const auto& entry : j.at("support")) {
        if (!entry.is_object() || !entry.contains("graph") || !entry.contains("coefficient"))
            throw ParseError("malformed parameter document: entries need 'graph' and 'coefficient'");
        p.add(graph_from_json(entry.at("graph")), fraction_from_json(entry.at("coefficient")), cfg);
    }
    p.normalize();
    return p;
}

Json cfi_to_json(const CfiGraph& c) {
    Json j;
    j["base"] = graph_to_json(c.base);
    j["twist_set"] = c.twist_set;
    j["product"] = graph_to_json(c.product);
    Json prov = Json::array();
    for (const auto& [v, subset] : c.provenance)
        prov.push_back({{"base_vertex", v}, {"edge_subset", subset}});
    j["provenance"] = std::move(prov);
    return j;
}

RunConfig config_from_json(const Json& j) {
    RunConfig cfg;
    if (!j.is_object()) throw ParseError("malformed config: not a JSON object");
    auto geti = [&](const char* key, int& field) {
        if (j.contains(key)) field = j.at(key).get<int>();
    };
    auto getll = [&](const char* key, long long& field) {
        if (j.contains(key)) field = j.at(key).get<long long>();
    };
    geti("canonical_max_n", cfg.canonical_max_n);
    geti("iso_max_n", cfg.iso_max_n);
    geti("aut_max_n", cfg.aut_max_n);
    geti("spasm_max_n", cfg.spasm_max_n);
    geti("tw_max_n", cfg.tw_max_n);
    geti("td_width_guard", cfg.td_width_guard);
    getll("wl_tuple_budget", cfg.wl_tuple_budget);
    getll("hom_product_budget", cfg.hom_product_budget);
    geti("brute_pattern_max_n", cfg.brute_pattern_max_n);
    geti("brute_target_max_n", cfg.brute_target_max_n);
    getll("hom_table_budget", cfg.hom_table_budget);
    geti("ind_max_n", cfg.ind_max_n);
    getll("ind_superset_budget", cfg.ind_superset_budget);
    geti("ind_crosscheck_max_n", cfg.ind_crosscheck_max_n);
    getll("cfi_product_budget", cfg.cfi_product_budget);
    geti("oddo_max_edges", cfg.oddo_max_edges);
    getll("oddo_hom_budget", cfg.oddo_hom_budget);
    getll("anchor_budget", cfg.anchor_budget);
    geti("graphlet_max_k", cfg.graphlet_max_k);
    geti("parallelism", cfg.parallelism);
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output_path")) cfg.output_path = j.at("output_path").get<std::string>();
    if (cfg.parallelism < 1) throw ParseError("config: parallelism must be >= 1");
    for (long long guard :
         {static_cast<long long>(cfg.canonical_max_n), static_cast<long long>(cfg.iso_max_n),
          static_cast<long long>(cfg.spasm_max_n), static_cast<long long>(cfg.tw_max_n),
          cfg.wl_tuple_budget, cfg.hom_product_budget, cfg.hom_table_budget,
          cfg.ind_superset_budget, cfg.cfi_product_budget, cfg.anchor_budget})
        if (guard <= 0) throw ParseError("config: all guards must be positive");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("malformed config '" + path + "': " + e.what());
    }
    return config_from_json(j);
}

} // namespace wlm
