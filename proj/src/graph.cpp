#include "dcolor/graph.hpp"

#include <algorithm>
#include <set>

namespace dcolor {

Graph Graph::build(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw PreconditionError("graph: negative node count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("graph: edge id out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw PreconditionError("graph: self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges_ = std::move(edges);
    g.m_ = static_cast<long long>(g.edges_.size());
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    for (int v = 0; v < n; ++v) g.max_degree_ = std::max(g.max_degree_, g.degree(v));
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

long long Graph::edge_index(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return it - edges_.begin();
}

bool Graph::validate() const {
    for (int v = 0; v < n_; ++v) {
        const auto& a = adj_[v];
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < 0 || a[i] >= n_ || a[i] == v) return false;
            if (i > 0 && a[i] <= a[i - 1]) return false;
            if (!has_edge(a[i], v)) return false;
        }
    }
    long long deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(v);
    return deg_sum == 2 * m_;
}

Orientation Orientation::from_bits(const Graph& g, std::vector<bool> toward_higher) {
    if (static_cast<long long>(toward_higher.size()) != g.edge_count())
        throw PreconditionError("orientation: bit count != edge count");
    Orientation o;
    o.bits_ = std::move(toward_higher);
    o.out_degree_.assign(g.n(), 0);
    o.out_adj_.assign(g.n(), {});
    for (size_t k = 0; k < o.bits_.size(); ++k) {
        auto [u, v] = g.edges()[k];
        NodeId from = o.bits_[k] ? u : v;
        NodeId to = o.bits_[k] ? v : u;
        o.out_degree_[from]++;
        o.out_adj_[from].push_back(to);
    }
    for (auto& a : o.out_adj_) std::sort(a.begin(), a.end());
    return o;
}

bool Orientation::oriented_from(NodeId u, NodeId v, const Graph& g) const {
    long long k = g.edge_index(u, v);
    if (k < 0) throw PreconditionError("orientation: no such edge");
    bool toward_higher = bits_[k];
    return (u < v) ? toward_higher : !toward_higher;
}

long long Orientation::total_out() const {
    long long s = 0;
    for (int d : out_degree_) s += d;
    return s;
}

DegeneracyOrientation orient_by_degeneracy(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n);
    std::set<std::pair<int, NodeId>> queue;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.insert({deg[v], v});
    }
    std::vector<int> peel_pos(n, -1);
    std::vector<NodeId> order;
    order.reserve(n);
    int degeneracy = 0;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        degeneracy = std::max(degeneracy, d);
        peel_pos[v] = static_cast<int>(order.size());
        order.push_back(v);
        for (NodeId u : g.neighbors(v)) {
            if (peel_pos[u] >= 0) continue;
            queue.erase({deg[u], u});
            deg[u]--;
            queue.insert({deg[u], u});
        }
    }
    std::vector<bool> bits(g.edge_count());
    for (size_t k = 0; k < bits.size(); ++k) {
        auto [u, v] = g.edges()[k];
        bits[k] = peel_pos[u] < peel_pos[v];  // earlier-peeled endpoint points out
    }
    return {Orientation::from_bits(g, std::move(bits)), degeneracy, std::move(order)};
}

Orientation orient_by_ids(const Graph& g) {
    return Orientation::from_bits(g, std::vector<bool>(g.edge_count(), true));
}

LineGraphMapping line_graph(const Graph& g) {
    LineGraphMapping out;
    out.edge_of_node = g.edges();
    int ln = static_cast<int>(out.edge_of_node.size());
    std::vector<std::pair<int, int>> ledges;
    // Two line nodes are adjacent iff their edges share an endpoint: group
    // edge ids by endpoint and connect each group pairwise.
    std::vector<std::vector<int>> incident(g.n());
    for (int k = 0; k < ln; ++k) {
        incident[out.edge_of_node[k].first].push_back(k);
        incident[out.edge_of_node[k].second].push_back(k);
    }
    for (const auto& group : incident)
        for (size_t i = 0; i < group.size(); ++i)
            for (size_t j = i + 1; j < group.size(); ++j)
                ledges.emplace_back(group[i], group[j]);
    out.line_graph = Graph::build(ln, std::move(ledges));
    out.node_degree_sum.resize(ln);
    for (int k = 0; k < ln; ++k) {
        auto [u, v] = out.edge_of_node[k];
        out.node_degree_sum[k] = g.degree(u) + g.degree(v);
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<NodeId>& nodes) {
    InducedSubgraph s;
    s.to_original = nodes;
    std::sort(s.to_original.begin(), s.to_original.end());
    s.to_original.erase(std::unique(s.to_original.begin(), s.to_original.end()), s.to_original.end());
    s.to_sub.assign(g.n(), -1);
    for (size_t i = 0; i < s.to_original.size(); ++i) {
        NodeId v = s.to_original[i];
        if (v < 0 || v >= g.n()) throw PreconditionError("induced_subgraph: id out of range");
        s.to_sub[v] = static_cast<NodeId>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (NodeId v : s.to_original)
        for (NodeId u : g.neighbors(v))
            if (v < u && s.to_sub[u] >= 0) edges.emplace_back(s.to_sub[v], s.to_sub[u]);
    s.graph = Graph::build(static_cast<int>(s.to_original.size()), std::move(edges));
    return s;
}

Graph make_ring(int n) {
    if (n < 1) throw PreconditionError("ring: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n > 2) edges.emplace_back(n - 1, 0);
    return Graph::build(n, std::move(edges));
}

Graph make_path(int n) {
    if (n < 1) throw PreconditionError("path: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, std::move(edges));
}

Graph make_star(int n) {
    if (n < 1) throw PreconditionError("star: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::build(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw PreconditionError("complete: n >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::build(n, std::move(edges));
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("gnp: n >= 1 required");
    if (p < 0.0 || p > 1.0) throw PreconditionError("gnp: p in [0,1] required");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) edges.emplace_back(i, j);
    return Graph::build(n, std::move(edges));
}

Graph make_interval(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("interval: n >= 1 required");
    SplitMix64 rng(seed);
    std::vector<std::pair<double, double>> iv(n);
    for (int i = 0; i < n; ++i) {
        double a = rng.next_double();
        double b = rng.next_double();
        iv[i] = {std::min(a, b), std::max(a, b)};
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::max(iv[i].first, iv[j].first) < std::min(iv[i].second, iv[j].second))
                edges.emplace_back(i, j);
    return Graph::build(n, std::move(edges));
}

Graph make_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("tree: n >= 1 required");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k < n; ++k)
        edges.emplace_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k))), k);
    return Graph::build(n, std::move(edges));
}

Graph generate(const std::string& kind, int n, double p, std::uint64_t seed) {
    if (kind == "ring") return make_ring(n);
    if (kind == "path") return make_path(n);
    if (kind == "star") return make_star(n);
    if (kind == "complete") return make_complete(n);
    if (kind == "gnp") return make_gnp(n, p, seed);
    if (kind == "interval") return make_interval(n, seed);
    if (kind == "tree") return make_random_tree(n, seed);
    throw PreconditionError("unknown graph kind: " + kind);
}

} // namespace dcolor
