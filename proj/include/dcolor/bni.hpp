#pragma once

#include "dcolor/coloring.hpp"
#include "dcolor/degplus1.hpp"
#include "dcolor/engine.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/primitives.hpp"

namespace dcolor {

// Per-class neighborhood report for a defective bucketing on a graph with
// neighborhood independence <= theta: for each (node, class), the number of
// class members among the node's neighbors, checked against theta*(d+1)
// (d = max observed defect) and against max(theta, eps*deg(v)).
struct PerClassBoundReport {
    bool theta_dplus1_ok = true;
    bool relative_ok = true;
    long long max_defect = 0;
    struct Violation {
        NodeId v;
        Color cls;
        long long count;
        long long bound_num, bound_den;
    };
    std::vector<Violation> violations;  // first few, for diagnostics
};

PerClassBoundReport per_class_neighborhood_bound(const Graph& g, long long theta,
                                                 const DefectiveColoring& defcol, const Rat& eps);

struct PhaseSchedule {
    std::vector<long long> deltas;   // Delta, ceil(Delta/2), ..., 1
    long long q = 0;                 // defective class count

    static PhaseSchedule make(int max_degree, long long q);
};

// Unoriented color space reduction for bounded neighborhood independence:
// every node of degree > theta*p receives a part; assigned nodes keep
// |L'_v|/deg'(v) within a factor 3*theta of |L_v|/deg(v), where deg'(v)
// counts same-part neighbors.
struct WeakReductionOutcome {
    ColorSpacePartition partition;
    long long p = 0;
    long long theta = 0;
    std::vector<int> subspace_index;    // -1 = no part
    std::vector<int> assign_phase;      // phase index at assignment, -1 otherwise
    std::vector<long long> new_degree;  // same-part neighbor count (assigned nodes)
    ListAssignment new_lists;           // clipped lists for assigned nodes, originals otherwise
    PhaseSchedule schedule;
    PerClassBoundReport gate;           // defective per-class bound check
    RunMetrics metrics;
};

WeakReductionOutcome weak_reduction(const Graph& g, long long theta, const ListAssignment& lists,
                                    const Rat& eta, const ProperColoring* base = nullptr,
                                    const RunOptions& opt = {});

// Grouped core: per-node current interval and instance group (< 0 inert).
struct WeakStepState {
    std::vector<long long> int_lo, int_hi;
    std::vector<std::vector<Color>> lists;
};

struct WeakStepOutput {
    std::vector<int> pick;          // part index or -1
    std::vector<int> assign_phase;  // -1 if unassigned
    std::vector<Color> bucket;      // defective bucketing used by the schedule
    RunMetrics metrics;
};

WeakStepOutput weak_reduction_step(const Graph& g, WeakStepState& st,
                                   const std::vector<long long>& group,
                                   const std::vector<long long>& chunk_size, long long theta,
                                   const ProperColoring& base, const RunOptions& opt);

struct BniRecursiveResult {
    PartialColoring coloring;
    RunMetrics metrics;
};

// Recursive colorer: r <= 2 colors directly via the low-degree greedy with
// cap C; otherwise splits off high-degree nodes with a weak reduction
// (eta = C^(1/r)), recurses per part in parallel, and finishes the
// low-degree remainder greedily on residual lists. Colors every node with
// |L_v| > (3*theta)^(r-1) * deg(v).
BniRecursiveResult bni_recursive_list_color(const Graph& g, long long theta,
                                            const ListAssignment& lists, int r,
                                            const ProperColoring* base = nullptr,
                                            const RunOptions& opt = {});

// (deg+1)-list coloring for graphs of neighborhood independence <= theta:
// the half-degree framework instantiated with S = (3*theta)^(r-1) and the
// recursive colorer above.
TotalColoringResult bni_deg_plus_one(const Graph& g, long long theta, const ListAssignment& lists,
                                     const RunOptions& opt = {});

struct EdgeColoringResult {
    std::vector<Color> edge_color;   // indexed like g.edges()
    RunMetrics metrics;
};

// List edge coloring via the line graph (neighborhood independence <= 2).
// Needs |L_e| >= deg(u)+deg(v)-1 per edge e = {u,v}. Runs with Local-mode
// semantics on the line graph.
EdgeColoringResult edge_list_color(const Graph& g, const std::vector<std::vector<Color>>& edge_lists,
                                   const RunOptions& opt = {});

// Default edge lists {1, ..., 2*Delta - 1}.
std::vector<std::vector<Color>> default_edge_lists(const Graph& g);

} // namespace dcolor
