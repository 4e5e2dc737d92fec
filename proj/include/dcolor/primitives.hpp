#pragma once

#include "dcolor/coloring.hpp"
#include "dcolor/engine.hpp"
#include "dcolor/graph.hpp"

#include <optional>

namespace dcolor {

struct LinialResult {
    ProperColoring coloring;
    RunMetrics metrics;
};

// Palette guarantee of linial_coloring: final palette <= 16 * max(Delta,2)^2.
long long linial_palette_bound(int max_degree);

// Iterated algebraic color reduction from unique ids. One round maps an
// m-coloring to a q^2-coloring by viewing colors as degree-d polynomials
// over F_q (q prime, q > Delta*d, q^(d+1) >= m) and picking an evaluation
// point that disagrees with every neighbor. Repeats until the palette stops
// shrinking.
LinialResult linial_coloring(const Graph& g, const RunOptions& opt = {});

// The palette sequence the program above walks through, exposed for tests.
std::vector<long long> linial_palette_schedule(long long m0, int max_degree);

struct DefectiveResult {
    DefectiveColoring coloring;
    RunMetrics metrics;
    long long passes = 0;
};

// q = ceil(1/lambda) buckets; every node ends with at most lambda * deg(v)
// same-bucket neighbors. Greedy sweep over the base color classes (each
// node takes the bucket minimizing its count of already-assigned same-bucket
// neighbors, ties lowest), repeated until no node can improve; each
// improving move strictly reduces the number of monochromatic edges, so the
// sweeps terminate. Round count is O(base palette * passes), not the
// log-star bound quoted for this primitive elsewhere; metrics are labeled
// so callers can meter this phase separately.
DefectiveResult relative_defective_coloring(const Graph& g, const Rat& lambda,
                                            const ProperColoring& base, const RunOptions& opt = {});

// Grouped variant: per-node lambda, groups isolate instances, group < 0 is
// inert. Defect counted against same-group degree. The bucket count per
// group is min(ceil(1/lambda), max group degree + 1): past that many
// buckets, stability already forces defect zero, so the clamp keeps the
// contract while bounding palette and memory.
struct GroupedDefective {
    std::vector<Color> bucket;   // -1 for inert
    long long max_q = 1;         // buckets actually in play (over all groups)
    RunMetrics metrics;
    long long passes = 0;
};

GroupedDefective relative_defective_grouped(const Graph& g, const std::vector<long long>& group,
                                            const std::vector<Rat>& lambda, const ProperColoring& base,
                                            const RunOptions& opt);

struct LowDegreeResult {
    PartialColoring coloring;
    RunMetrics metrics;
};

// Colors the subgraph induced by {v : deg(v) <= d}: derives a (d+1)-coloring
// of it from base by recoloring one class per round, then sweeps those
// classes greedily against the lists. Every member with |L_v| > deg(v) gets
// a color; members whose list runs out output nothing.
LowDegreeResult low_degree_list_color(const Graph& g, long long d, const ListAssignment& lists,
                                      const ProperColoring& base, const RunOptions& opt = {});

// Grouped variant with per-node degree caps and an explicit membership mask
// (member && deg constraint decided by caller). Conflicts are counted only
// against same-group members.
LowDegreeResult low_degree_grouped(const Graph& g, const std::vector<long long>& group,
                                   const std::vector<long long>& degree_cap,
                                   const ListAssignment& lists, const ProperColoring& base,
                                   const RunOptions& opt);

} // namespace dcolor
