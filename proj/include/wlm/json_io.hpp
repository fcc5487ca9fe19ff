#pragma once

#include <json.hpp>

#include "wlm/cfi.hpp"
#include "wlm/config.hpp"
#include "wlm/labeled_graph.hpp"
#include "wlm/motif.hpp"
#include "wlm/treewidth.hpp"
#include "wlm/wldim.hpp"

namespace wlm {

using Json = nlohmann::ordered_json;

// {"sigma":[...],"delta":[...],"vertices":[{"id":0,"label":"a"},...],
//  "edges":[{"u":0,"v":1,"label":"x"},...]}: the interchange format for
// every CLI subcommand. Vertices must be exactly 0..n-1.
Json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j);
LabeledGraph load_graph(const std::string& path);
void save_json(const std::string& path, const Json& j);

// exact fractions as {"num":"...","den":"..."} decimal strings
Json fraction_to_json(const Rational& r);
Rational fraction_from_json(const Json& j);

Json td_to_json(const TreeDecomposition& td);
Json dimension_report_to_json(const DimensionReport& r);
Json motif_to_json(const MotifParameter& p, const RunConfig& cfg = RunConfig::defaults());
MotifParameter motif_from_json(const Json& j, const RunConfig& cfg = RunConfig::defaults());
Json cfi_to_json(const CfiGraph& c);

RunConfig config_from_json(const Json& j);
RunConfig load_config(const std::string& path);

} // namespace wlm
