#pragma once

#include "dcolor/types.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dcolor {

// Immutable simple undirected graph with dense node ids 0..n-1.
// Adjacency lists are sorted; construction dedups edges and rejects
// self-loops and out-of-range ids.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    long long edge_count() const { return m_; }
    std::span<const NodeId> neighbors(NodeId v) const { return adj_[v]; }
    int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const { return max_degree_; }
    bool has_edge(NodeId u, NodeId v) const;

    // Edges as sorted (u,v) pairs with u < v; index in this list is the
    // canonical edge id used by Orientation and line graphs.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    long long edge_index(NodeId u, NodeId v) const;  // -1 if absent

    // Full-scan structural check: symmetry, sortedness, no loops/dups.
    bool validate() const;

private:
    int n_ = 0;
    long long m_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

// Per-edge direction assignment over a Graph. Edge k = (u,v) with u < v;
// bit true means u -> v.
class Orientation {
public:
    Orientation() = default;
    static Orientation from_bits(const Graph& g, std::vector<bool> toward_higher);

    int out_degree(NodeId v) const { return out_degree_[v]; }
    const std::vector<int>& out_degrees() const { return out_degree_; }
    std::span<const NodeId> out_neighbors(NodeId v) const { return out_adj_[v]; }
    bool oriented_from(NodeId u, NodeId v, const Graph& g) const;  // true iff u -> v
    long long total_out() const;

private:
    std::vector<bool> bits_;
    std::vector<int> out_degree_;
    std::vector<std::vector<NodeId>> out_adj_;
};

struct DegeneracyOrientation {
    Orientation orientation;
    int degeneracy = 0;
    std::vector<NodeId> peel_order;
};

// Iterative minimum-degree peeling (ties: lowest id). Acyclic; the maximum
// out-degree equals the graph's degeneracy. Centralized input-preparation
// helper, not metered by the engine.
DegeneracyOrientation orient_by_degeneracy(const Graph& g);

// Every edge points to the higher id. Acyclic.
Orientation orient_by_ids(const Graph& g);

struct LineGraphMapping {
    Graph line_graph;
    std::vector<std::pair<NodeId, NodeId>> edge_of_node;  // line node -> original edge
    std::vector<int> node_degree_sum;                     // deg(u)+deg(v) per line node
};

LineGraphMapping line_graph(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<NodeId> to_original;          // sub id -> original id
    std::vector<NodeId> to_sub;               // original id -> sub id or -1
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<NodeId>& nodes);

// Deterministic generators. All randomness flows from the explicit seed
// through SplitMix64 (see types.hpp).
Graph make_ring(int n);
Graph make_path(int n);
Graph make_star(int n);     // node 0 is the center
Graph make_complete(int n);
// Edge (i,j), i<j, included iff the next SplitMix64 draw < p, iterating
// pairs in lexicographic order.
Graph make_gnp(int n, double p, std::uint64_t seed);
// n intervals with endpoints drawn from [0,1); nodes adjacent iff the
// intervals overlap (max(lo) < min(hi)).
Graph make_interval(int n, std::uint64_t seed);
// Node k >= 1 attaches to a uniformly random node in [0,k).
Graph make_random_tree(int n, std::uint64_t seed);

// Kind names as used by the CLI: ring, path, star, complete, gnp, interval, tree.
Graph generate(const std::string& kind, int n, double p, std::uint64_t seed);

} // namespace dcolor
