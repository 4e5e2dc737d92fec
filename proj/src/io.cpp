#include "dcolor/io.hpp"

#include <fstream>
#include <sstream>

namespace dcolor {
namespace io {

using nlohmann::json;

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw PreconditionError("edge list: missing header 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long long k = 0; k < m; ++k) {
        int u, v;
        if (!(in >> u >> v)) throw PreconditionError("edge list: truncated at edge " + std::to_string(k));
        edges.emplace_back(u, v);
    }
    return Graph::build(static_cast<int>(n), std::move(edges));
}

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::build(j.at("n").get<int>(), std::move(edges));
}

json instance_to_json(const Instance& inst) {
    json j;
    j["graph"] = graph_to_json(inst.graph);
    j["space_lo"] = inst.lists.space_lo;
    j["space_hi"] = inst.lists.space_hi;
    j["lists"] = inst.lists.lists;
    if (!inst.edge_lists.empty()) j["edge_lists"] = inst.edge_lists;
    return j;
}

Instance instance_from_json(const json& j) {
    Instance inst;
    // The graph field is either the JSON object form or edge-list text.
    if (j.at("graph").is_string())
        inst.graph = read_edge_list(j.at("graph").get<std::string>());
    else
        inst.graph = graph_from_json(j.at("graph"));
    inst.lists.space_lo = j.at("space_lo").get<long long>();
    inst.lists.space_hi = j.at("space_hi").get<long long>();
    inst.lists.lists = j.at("lists").get<std::vector<std::vector<Color>>>();
    if (static_cast<int>(inst.lists.lists.size()) != inst.graph.n())
        throw PreconditionError("instance: one list per node required");
    if (!inst.lists.valid()) throw PreconditionError("instance: lists must be sorted subsets of the space");
    if (j.contains("edge_lists")) {
        inst.edge_lists = j.at("edge_lists").get<std::vector<std::vector<Color>>>();
        if (static_cast<long long>(inst.edge_lists.size()) != inst.graph.edge_count())
            throw PreconditionError("instance: one edge list per edge required");
    }
    return inst;
}

json metrics_to_json(const RunMetrics& m) {
    json j;
    j["rounds"] = m.rounds;
    j["messages_sent"] = m.messages_sent;
    j["max_payload_bits"] = m.max_payload_bits;
    j["per_phase"] = json::array();
    for (const auto& p : m.per_phase) j["per_phase"].push_back({{"label", p.label}, {"rounds", p.rounds}});
    return j;
}

RunMetrics metrics_from_json(const json& j) {
    RunMetrics m;
    m.rounds = j.at("rounds").get<long long>();
    m.messages_sent = j.at("messages_sent").get<long long>();
    m.max_payload_bits = j.at("max_payload_bits").get<long long>();
    for (const auto& p : j.at("per_phase"))
        m.per_phase.push_back({p.at("label").get<std::string>(), p.at("rounds").get<long long>()});
    return m;
}

json coloring_result_to_json(const PartialColoring& c, const RunMetrics& m) {
    json j;
    j["kind"] = "coloring";
    j["coloring"] = c.value;
    j["metrics"] = metrics_to_json(m);
    return j;
}

json hpartition_to_json(const HPartition& p, const RunMetrics& m) {
    json j;
    j["kind"] = "hpartition";
    j["h"] = p.h;
    j["levels"] = p.level;
    j["alpha_num"] = p.alpha.num;
    j["alpha_den"] = p.alpha.den;
    j["beta"] = p.beta_bound;
    j["metrics"] = metrics_to_json(m);
    return j;
}

json reduction_to_json(const ReductionOutcome& r, const RunMetrics& m) {
    json j;
    j["kind"] = "reduction";
    j["space_lo"] = r.partition.lo;
    j["space_hi"] = r.partition.hi;
    j["chunk"] = r.partition.chunk;
    j["parts"] = r.partition.parts;
    j["subspace_index"] = r.subspace_index;
    j["new_lists"] = r.new_lists.lists;
    j["new_beta"] = r.new_beta;
    j["metrics"] = metrics_to_json(m);
    return j;
}

json edge_coloring_to_json(const std::vector<Color>& edge_color, const RunMetrics& m) {
    json j;
    j["kind"] = "edge_coloring";
    j["edge_colors"] = edge_color;
    j["metrics"] = metrics_to_json(m);
    return j;
}

PartialColoring coloring_from_json(const json& j) {
    PartialColoring c;
    c.value = j.at("coloring").get<std::vector<Color>>();
    return c;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write " + path);
    out << content;
}

} // namespace io
} // namespace dcolor
