#pragma once

#include "dcolor/bni.hpp"
#include "dcolor/coloring.hpp"
#include "dcolor/engine.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/hpartition.hpp"
#include "dcolor/listreduce.hpp"

#include <json.hpp>

#include <string>

namespace dcolor {
namespace io {

// Edge-list text format: first line "n m", then m lines "u v".
std::string write_edge_list(const Graph& g);
Graph read_edge_list(const std::string& text);

// JSON mirrors of the same fields: {"n":, "edges":[[u,v],...]}.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Instance file: {"graph":, "lists":[[..],..], "space_lo":, "space_hi":,
// "edge_lists": optional per-edge color lists}.
struct Instance {
    Graph graph;
    ListAssignment lists;
    std::vector<std::vector<Color>> edge_lists;  // empty = absent
};

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json metrics_to_json(const RunMetrics& m);
RunMetrics metrics_from_json(const nlohmann::json& j);

// Result file: {"kind": "coloring"|"hpartition"|"reduction"|"edge_coloring",
//               ... payload ..., "metrics": {...}}.
nlohmann::json coloring_result_to_json(const PartialColoring& c, const RunMetrics& m);
nlohmann::json hpartition_to_json(const HPartition& p, const RunMetrics& m);
nlohmann::json reduction_to_json(const ReductionOutcome& r, const RunMetrics& m);
nlohmann::json edge_coloring_to_json(const std::vector<Color>& edge_color, const RunMetrics& m);

PartialColoring coloring_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace io
} // namespace dcolor
