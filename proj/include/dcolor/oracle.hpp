#pragma once

#include "dcolor/bni.hpp"
#include "dcolor/coloring.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/hpartition.hpp"
#include "dcolor/listreduce.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dcolor {
namespace oracle {

// Machine-readable violation witness; validators report at most the first
// ten.
struct Witness {
    std::string kind;
    NodeId u = -1;
    NodeId v = -1;
    long long detail = 0;
};

struct Verdict {
    bool ok = true;
    std::vector<Witness> witnesses;

    void add(const std::string& kind, NodeId u, NodeId v, long long detail = 0) {
        ok = false;
        if (witnesses.size() < 10) witnesses.push_back({kind, u, v, detail});
    }
};

// Adjacent equal non-bottom colors fail.
Verdict verify_proper(const Graph& g, const PartialColoring& c);

// Every assigned color must come from the node's list.
Verdict verify_list_respecting(const ListAssignment& lists, const PartialColoring& c);

// Every node at level i has at most alpha * beta(v) neighbors at levels >= i.
Verdict verify_h_partition(const Graph& g, const std::vector<long long>& beta,
                           const HPartition& part, const Rat& alpha);

// Definition check for one oriented reduction step: part sizes <= |C|/eta
// and |L'_v| * beta(v) * gamma >= |L_v| * beta'(v) for all v.
Verdict verify_oriented_reduction(const Graph& g, const Orientation& before,
                                  const ListAssignment& lists, const ReductionOutcome& out,
                                  const Rat& eta, const Rat& gamma);

// Weak reduction: parts small enough, every node of degree > D assigned, and
// the cross-multiplied ratio bound with factor gamma for assigned nodes.
Verdict verify_weak_reduction(const Graph& g, const ListAssignment& lists,
                              const WeakReductionOutcome& out, const Rat& eta, const Rat& gamma,
                              const Rat& D);

// Exact list coloring by backtracking with forward checking; deterministic
// branch order (fewest remaining colors, then lowest id; colors ascending).
struct ExactResult {
    bool sat = false;
    std::vector<Color> assignment;
};

ExactResult exact_list_color(const Graph& g, const ListAssignment& lists, int node_cap = 24);

// Is the given (partial) coloring extendable / consistent according to the
// exact solver with each assigned node pinned to its color?
bool exact_confirms(const Graph& g, const ListAssignment& lists, const PartialColoring& c,
                    int node_cap = 24);

// Largest independent set inside any single neighborhood.
long long neighborhood_independence(const Graph& g, int neighborhood_cap = 16);

// Smallest k such that every subgraph has a node of degree <= k, realized by
// min-degree peeling.
int degeneracy(const Graph& g);

// Defect check: same-bucket neighbor count <= lambda * deg(v) for all v.
Verdict verify_relative_defective(const Graph& g, const DefectiveColoring& d);

} // namespace oracle
} // namespace dcolor
