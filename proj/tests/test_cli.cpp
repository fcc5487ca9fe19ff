#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wlm/cli.hpp"
#include "wlm/json_io.hpp"

using namespace wlm;

namespace {

struct TempDoc {
    std::string path;
    TempDoc(const std::string& name, const Json& j) : path("/tmp/wlmotif_test_" + name + ".json") {
        save_json(path, j);
    }
    ~TempDoc() { std::remove(path.c_str()); }
};

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("wldim sub on C7") {
    TempDoc c7("c7", graph_to_json(cycle_graph(7)));
    CliRun r = run({"wldim", "sub", "--pattern", c7.path});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("dimension") == 2);
    CHECK(j.at("witness_treewidth") == 2);
}

TEST_CASE("wl equiv exit codes") {
    TempDoc c6("c6", graph_to_json(cycle_graph(6)));
    TempDoc two_k3("2k3", graph_to_json(disjoint_union(complete_graph(3), complete_graph(3))));
    CliRun r1 = run({"wl", "equiv", "--left", c6.path, "--right", two_k3.path, "-k", "1"});
    CHECK(r1.code == 0);
    CHECK(Json::parse(r1.out).at("equivalent") == true);
    CliRun r2 = run({"wl", "equiv", "--left", c6.path, "--right", two_k3.path, "-k", "2"});
    CHECK(r2.code == 3);
    CHECK(Json::parse(r2.out).at("equivalent") == false);
}

TEST_CASE("wl refine output") {
    TempDoc p3("p3", graph_to_json(path_graph(3)));
    CliRun r = run({"wl", "refine", "--graph", p3.path, "-k", "1"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("class_count") == 2);
    CHECK(j.at("tuples").size() == 3);
}

TEST_CASE("tw subcommand writes a decomposition") {
    TempDoc c5("c5", graph_to_json(cycle_graph(5)));
    std::string dec_path = "/tmp/wlmotif_test_dec.json";
    CliRun r = run({"tw", "--graph", c5.path, "--decomposition", dec_path});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out).at("treewidth") == 2);
    std::ifstream in(dec_path);
    REQUIRE(in.good());
    Json dec;
    in >> dec;
    CHECK(dec.at("width") == 2);
    std::remove(dec_path.c_str());
}

TEST_CASE("hom count methods agree") {
    TempDoc p4("p4", graph_to_json(path_graph(4)));
    TempDoc c6b("c6b", graph_to_json(cycle_graph(6)));
    CliRun brute = run({"hom", "count", "--pattern", p4.path, "--graph", c6b.path,
                        "--method", "brute"});
    CliRun td = run({"hom", "count", "--pattern", p4.path, "--graph", c6b.path, "--method", "td"});
    CHECK(brute.code == 0);
    CHECK(td.code == 0);
    CHECK(Json::parse(brute.out).at("count") == Json::parse(td.out).at("count"));
}

TEST_CASE("motif support round-trips through wldim param") {
    TempDoc p4("p4rt", graph_to_json(path_graph(4)));
    CliRun support = run({"motif", "support", "--kind", "sub", "--pattern", p4.path});
    CHECK(support.code == 0);
    std::string support_path = "/tmp/wlmotif_test_support.json";
    {
        std::ofstream out(support_path);
        out << support.out;
    }
    CliRun dim = run({"wldim", "param", "--support", support_path});
    CHECK(dim.code == 0);
    CHECK(Json::parse(dim.out).at("dimension") == 2);
    std::remove(support_path.c_str());
}

TEST_CASE("guard exceeded maps to exit 2") {
    TempDoc big("big", graph_to_json(path_graph(11)));
    CliRun r = run({"wldim", "sub", "--pattern", big.path});
    CHECK(r.code == 2);
    CHECK(r.err.find("guard") != std::string::npos);
}

TEST_CASE("usage errors map to exit 1") {
    CliRun r = run({"wldim", "sub"});
    CHECK(r.code == 1);
    CliRun r2 = run({"frobnicate"});
    CHECK(r2.code == 1);
    TempDoc bad("bad", Json{{"sigma", {"a"}}});
    CliRun r3 = run({"tw", "--graph", bad.path});
    CHECK(r3.code == 1);
}

TEST_CASE("cfi build and witness") {
    TempDoc k3("k3", graph_to_json(complete_graph(3)));
    CliRun build = run({"cfi", "build", "--base", k3.path});
    CHECK(build.code == 0);
    Json j = Json::parse(build.out);
    CHECK(j.at("product").at("vertices").size() == 6);

    std::string left = "/tmp/wlmotif_test_left.json", right = "/tmp/wlmotif_test_right.json";
    CliRun witness =
        run({"cfi", "witness", "--pattern", k3.path, "--out-left", left, "--out-right", right});
    CHECK(witness.code == 0);
    Json w = Json::parse(witness.out);
    CHECK(w.at("k") == 1);
    CHECK(w.at("equivalent") == true);
    CHECK(w.at("differ") == true);
    LabeledGraph l = load_graph(left);
    LabeledGraph rgt = load_graph(right);
    CHECK(l.vertex_count() == rgt.vertex_count());
    std::remove(left.c_str());
    std::remove(right.c_str());
}

TEST_CASE("deterministic output independent of parallelism") {
    TempDoc c7("c7det", graph_to_json(cycle_graph(7)));
    CliRun seq = run({"--parallelism", "1", "wldim", "sub", "--pattern", c7.path});
    CliRun par = run({"--parallelism", "4", "wldim", "sub", "--pattern", c7.path});
    CliRun again = run({"--parallelism", "4", "wldim", "sub", "--pattern", c7.path});
    CHECK(seq.code == 0);
    CHECK(seq.out == par.out);
    CHECK(par.out == again.out);
}
