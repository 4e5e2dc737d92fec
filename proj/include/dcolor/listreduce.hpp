#pragma once

#include "dcolor/coloring.hpp"
#include "dcolor/engine.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/primitives.hpp"

namespace dcolor {

// Result of one oriented color space reduction step. Every node picks one
// part of the partition; lists shrink to their part, and the new
// orientation keeps the list-size-to-out-degree ratio within a factor
// gamma = 2+eps of the old one (cross-multiplied so beta = 0 is exact).
struct ReductionOutcome {
    ColorSpacePartition partition;
    std::vector<int> subspace_index;        // i_v in [0, parts)
    Orientation new_orientation;
    ListAssignment new_lists;               // L'_v = L_v intersect part(i_v); space field = original space
    std::vector<long long> new_beta;        // out-neighbors u with L'_u n L'_v != empty and i_u = i_v
    std::vector<long long> same_part_out;   // out-neighbors u with i_u = i_v (no list filter)
    RunMetrics metrics;
};

// One reduction step with integer eta >= 2. Implements: split eps in half,
// level the graph with threshold 2+eps/2, color each level with a relative
// defective coloring, then let nodes pick parts level-by-level (descending)
// and defective-class-by-class (ascending), each node taking a feasible
// part that maximizes its sublist (ties: lowest index). base is the proper
// coloring that sequences the defective step; computed fresh if absent.
ReductionOutcome oriented_reduction(const Graph& g, const Orientation& o, const ListAssignment& lists,
                                    long long eta, const Rat& epsilon,
                                    const ProperColoring* base = nullptr, const RunOptions& opt = {});

struct RecursiveListColorResult {
    PartialColoring coloring;
    RunMetrics metrics;
};

// r reduction steps with per-step eta = min(ceil(C^(1/r)), current space
// size), independent part instances running in parallel; after the final
// step every node holds one candidate color and keeps it iff no same-part
// out-neighbor holds the same candidate. Every node with
// |L_v| > (2+eps)^r * beta(v) ends up colored; output is a proper partial
// list coloring.
RecursiveListColorResult recursive_list_color(const Graph& g, const Orientation& o,
                                              const ListAssignment& lists, const Rat& epsilon, int r,
                                              const ProperColoring* base = nullptr,
                                              const RunOptions& opt = {});

// Grouped multi-instance core used by recursive_list_color and the
// half-degree framework: per-node current interval [int_lo, int_hi), local
// eta, beta, and membership mask (group < 0 = inert).
struct ReduceStepState {
    std::vector<long long> int_lo, int_hi;   // current interval per node
    std::vector<std::vector<Color>> lists;   // current list per node
    std::vector<long long> beta;             // current out-degree-within-instance bound
};

struct ReduceStepOutput {
    std::vector<int> pick;                  // chosen part, -1 for inert
    std::vector<int> level, bucket;         // schedule data (for the orientation rule)
    RunMetrics metrics;
};

ReduceStepOutput oriented_reduction_step(const Graph& g, ReduceStepState& st,
                                         const std::vector<long long>& group, long long eta_cap,
                                         const Rat& epsilon, const ProperColoring& base,
                                         const RunOptions& opt);

} // namespace dcolor
