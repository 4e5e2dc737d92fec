#pragma once

#include "dcolor/coloring.hpp"
#include "dcolor/engine.hpp"
#include "dcolor/graph.hpp"

namespace dcolor {

// Leveled node partition: every node at level i has at most alpha * beta(v)
// neighbors at levels >= i. Levels are 1-based.
struct HPartition {
    std::vector<int> level;
    int h = 0;
    Rat alpha;
    std::vector<long long> beta_bound;  // the beta(v) each node was held to
};

struct HPartitionResult {
    HPartition partition;
    RunMetrics metrics;
};

// Peels, one engine round per level, the set of nodes whose residual degree
// is at most (2+eps) * beta(v), where beta is the out-degree of the given
// orientation. Raises InternalContradiction if a level peels nothing.
HPartitionResult generalized_h_partition(const Graph& g, const Orientation& o, const Rat& epsilon,
                                         const RunOptions& opt = {});

// Same construction with constant beta(v) = a (no orientation needed).
// Stalls, meaning a sits below the graph's density regime, surface as a
// PreconditionError naming the stuck residual size.
HPartitionResult h_partition_fixed_bound(const Graph& g, long long a, const Rat& epsilon,
                                         const RunOptions& opt = {});

// Grouped core shared by the drivers above and by the reduction pipeline:
// nodes with group < 0 are inert; peel tests count only same-group
// neighbors. threshold = 2+eps (or 2+delta when a caller splits eps).
struct GroupedHPartition {
    std::vector<int> level;   // 0 for inert nodes
    int h = 0;                // max level over active nodes
    RunMetrics metrics;
};

GroupedHPartition h_partition_grouped(const Graph& g, const std::vector<long long>& group,
                                      const std::vector<long long>& beta, const Rat& threshold,
                                      const RunOptions& opt, bool stall_is_internal_error);

} // namespace dcolor
