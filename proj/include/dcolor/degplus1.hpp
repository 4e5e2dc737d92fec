#pragma once

#include "dcolor/coloring.hpp"
#include "dcolor/engine.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/primitives.hpp"

#include <functional>
#include <string>

namespace dcolor {

// The partial-coloring subroutine a half-degree step drives: given the
// member mask (the class subgraph), current residual lists, and the shared
// base coloring, color at least every member v with
// residual_list(v) > S * deg_within_mask(v).
using InnerListColorFn =
    std::function<PartialColoring(const Graph& g, const std::vector<bool>& member,
                                  const ListAssignment& lists, const ProperColoring& base,
                                  RunMetrics& metrics)>;

struct FrameworkParams {
    long long S = 1;          // list-size slack factor the inner algorithm honors
    std::string T_label;      // human-readable round budget descriptor
    InnerListColorFn inner;
};

struct HalfDegreeResult {
    PartialColoring coloring;   // colors assigned in this step only
    RunMetrics metrics;
};

// One degree-halving step on the subgraph induced by `active`: computes a
// 1/(2S)-relative defective bucketing, then sweeps its classes, running
// params.inner per class on residual lists and committing the colors it
// assigns. Afterwards the still-uncolored active subgraph has maximum
// degree at most floor(delta_bound/2). Raises InternalContradiction if the
// inner algorithm leaves a guaranteed node uncolored.
HalfDegreeResult half_degree_step(const Graph& g, const std::vector<bool>& active,
                                  ListAssignment& lists, const FrameworkParams& params,
                                  const ProperColoring& base, int delta_bound,
                                  const RunOptions& opt = {});

struct TotalColoringResult {
    PartialColoring coloring;
    RunMetrics metrics;
    int halving_iterations = 0;
};

// Full driver for (deg+1)-list instances: repeats half_degree_step on the
// residual graph with S and the inner recursion re-instantiated for the
// halved degree bound, eps = 1 and r = ceil(sqrt(log2 Delta)). Total,
// proper, list-respecting.
TotalColoringResult deg_plus_one_list_color(const Graph& g, const ListAssignment& lists,
                                            const RunOptions& opt = {});

// Shared loop behind deg_plus_one_list_color and the bounded-neighborhood
// variant; make_params picks (S, inner) for each degree bound.
TotalColoringResult deg_plus_one_framework(const Graph& g, const std::vector<bool>& active0,
                                           const ListAssignment& lists0, const ProperColoring& base,
                                           const std::function<FrameworkParams(int delta_bound)>& make_params,
                                           const RunOptions& opt, RunMetrics base_metrics);

// Default instantiation for general graphs: eps = 1, r = ceil(sqrt(log2 D)),
// S = 3^r, inner = the recursive reduction on the class subgraph oriented by
// degeneracy peeling.
FrameworkParams make_recursive_inner_params(int delta_bound, const RunOptions& opt);

// Level the nodes with constant bound a, then color levels from the deepest
// back, each level as a (deg+1)-list instance on its induced subgraph with
// residual lists. Needs |L_v| >= floor((2+eps)*a) + 1.
TotalColoringResult arboricity_list_color(const Graph& g, long long a, const Rat& epsilon,
                                          const ListAssignment& lists, const RunOptions& opt = {});

} // namespace dcolor
