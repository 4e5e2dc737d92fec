#include "dcolor/oracle.hpp"

#include <algorithm>

namespace dcolor {
namespace oracle {

Verdict verify_proper(const Graph& g, const PartialColoring& c) {
    Verdict verdict;
    for (auto [u, v] : g.edges())
        if (c.value[u] != kNoColor && c.value[u] == c.value[v])
            verdict.add("equal-adjacent-colors", u, v, c.value[u]);
    return verdict;
}

Verdict verify_list_respecting(const ListAssignment& lists, const PartialColoring& c) {
    Verdict verdict;
    for (NodeId v = 0; v < static_cast<NodeId>(c.value.size()); ++v)
        if (c.value[v] != kNoColor && !lists.contains(v, c.value[v]))
            verdict.add("color-not-in-list", v, -1, c.value[v]);
    return verdict;
}

Verdict verify_h_partition(const Graph& g, const std::vector<long long>& beta,
                           const HPartition& part, const Rat& alpha) {
    Verdict verdict;
    for (NodeId v = 0; v < g.n(); ++v) {
        if (part.level[v] < 1 || part.level[v] > part.h) {
            verdict.add("level-out-of-range", v, -1, part.level[v]);
            continue;
        }
        long long later = 0;
        for (NodeId u : g.neighbors(v))
            if (part.level[u] >= part.level[v]) ++later;
        if (gt_times(later, alpha, beta[v])) verdict.add("level-bound", v, -1, later);
    }
    return verdict;
}

Verdict verify_oriented_reduction(const Graph& g, const Orientation& before,
                                  const ListAssignment& lists, const ReductionOutcome& out,
                                  const Rat& eta, const Rat& gamma) {
    Verdict verdict;
    const auto& part = out.partition;
    long long size = part.hi - part.lo;
    for (int i = 0; i < part.parts; ++i) {
        auto [a, b] = part.part_range(i);
        // |C_i| * eta <= |C|
        if (static_cast<__int128>(b - a) * eta.num > static_cast<__int128>(size) * eta.den)
            verdict.add("part-too-large", i, -1, b - a);
    }
    for (NodeId v = 0; v < g.n(); ++v) {
        long long lv = lists.list_size(v);
        long long lpv = out.new_lists.list_size(v);
        long long beta = before.out_degree(v);
        long long beta_p = out.new_beta[v];
        // |L'| / beta' >= (1/gamma) * |L| / beta, cross-multiplied.
        __int128 lhs = static_cast<__int128>(lpv) * beta * gamma.num;
        __int128 rhs = static_cast<__int128>(lv) * beta_p * gamma.den;
        if (lhs < rhs) verdict.add("ratio-drop", v, -1, beta_p);
        // New lists must be the clip of the old ones.
        auto [a, b] = part.part_range(out.subspace_index[v]);
        long long expect = 0;
        for (Color c : lists.lists[v])
            if (c >= a && c < b) ++expect;
        if (expect != lpv) verdict.add("list-clip-mismatch", v, -1, lpv);
    }
    // The new orientation must cover every edge with exactly one direction;
    // from_bits enforces that structurally, so check only the count here.
    if (out.new_orientation.total_out() != g.edge_count())
        verdict.add("orientation-incomplete", -1, -1, out.new_orientation.total_out());
    return verdict;
}

Verdict verify_weak_reduction(const Graph& g, const ListAssignment& lists,
                              const WeakReductionOutcome& out, const Rat& eta, const Rat& gamma,
                              const Rat& D) {
    Verdict verdict;
    const auto& part = out.partition;
    long long size = part.hi - part.lo;
    for (int i = 0; i < part.parts; ++i) {
        auto [a, b] = part.part_range(i);
        if (static_cast<__int128>(b - a) * eta.num > static_cast<__int128>(size) * eta.den)
            verdict.add("part-too-large", i, -1, b - a);
    }
    for (NodeId v = 0; v < g.n(); ++v) {
        long long deg = g.degree(v);
        if (out.subspace_index[v] < 0) {
            // deg > D forces assignment.
            if (static_cast<__int128>(deg) * D.den > static_cast<__int128>(D.num))
                verdict.add("high-degree-unassigned", v, -1, deg);
            continue;
        }
        long long same = 0;
        for (NodeId u : g.neighbors(v))
            if (out.subspace_index[u] == out.subspace_index[v]) ++same;
        if (same != out.new_degree[v]) verdict.add("deg-prime-mismatch", v, -1, same);
        long long lv = lists.list_size(v);
        long long lpv = out.new_lists.list_size(v);
        __int128 lhs = static_cast<__int128>(lpv) * deg * gamma.num;
        __int128 rhs = static_cast<__int128>(lv) * same * gamma.den;
        if (lhs < rhs) verdict.add("ratio-drop", v, -1, same);
    }
    return verdict;
}

namespace {

struct ExactSolver {
    const Graph& g;
    std::vector<std::vector<Color>> remaining;
    std::vector<Color> assigned;
    std::vector<bool> done;

    bool solve(int left) {
        if (left == 0) return true;
        // Fewest remaining colors, ties by lowest id.
        NodeId best = -1;
        size_t best_size = SIZE_MAX;
        for (NodeId v = 0; v < g.n(); ++v)
            if (!done[v] && remaining[v].size() < best_size) {
                best = v;
                best_size = remaining[v].size();
            }
        if (best_size == 0) return false;
        done[best] = true;
        std::vector<Color> options = remaining[best];
        for (Color c : options) {
            assigned[best] = c;
            // Forward-check: prune c from undecided neighbors.
            std::vector<NodeId> pruned;
            bool dead = false;
            for (NodeId u : g.neighbors(best)) {
                if (done[u]) {
                    if (assigned[u] == c) { dead = true; break; }
                    continue;
                }
                auto it = std::find(remaining[u].begin(), remaining[u].end(), c);
                if (it != remaining[u].end()) {
                    remaining[u].erase(it);
                    pruned.push_back(u);
                    if (remaining[u].empty()) dead = true;
                }
            }
            if (!dead && solve(left - 1)) return true;
            for (NodeId u : pruned) {
                remaining[u].insert(std::lower_bound(remaining[u].begin(), remaining[u].end(), c), c);
            }
        }
        done[best] = false;
        assigned[best] = kNoColor;
        return false;
    }
};

} // namespace

ExactResult exact_list_color(const Graph& g, const ListAssignment& lists, int node_cap) {
    if (g.n() > node_cap)
        throw PreconditionError("exact_list_color: n exceeds cap " + std::to_string(node_cap));
    ExactSolver solver{g, lists.lists, std::vector<Color>(g.n(), kNoColor),
                       std::vector<bool>(g.n(), false)};
    ExactResult res;
    res.sat = solver.solve(g.n());
    if (res.sat) res.assignment = solver.assigned;
    return res;
}

bool exact_confirms(const Graph& g, const ListAssignment& lists, const PartialColoring& c,
                    int node_cap) {
    ListAssignment pinned = lists;
    for (NodeId v = 0; v < g.n(); ++v)
        if (c.colored(v)) pinned.lists[v] = {c.value[v]};
    return exact_list_color(g, pinned, node_cap).sat;
}

namespace {

// Max independent set via branching on a max-degree vertex.
long long mis_size(std::vector<std::vector<int>>& adj, std::vector<int> alive) {
    // alive: 1 = in play, 0 = removed.
    int pick = -1, pick_deg = -1, n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        int d = 0;
        for (int u : adj[v])
            if (alive[u]) ++d;
        if (d > pick_deg) { pick_deg = d; pick = v; }
    }
    if (pick < 0) return 0;
    if (pick_deg <= 1) {
        // Remaining graph is a matching plus isolated vertices: count greedily.
        long long total = 0;
        std::vector<int> local = alive;
        for (int v = 0; v < n; ++v) {
            if (!local[v]) continue;
            ++total;
            local[v] = 0;
            for (int u : adj[v]) local[u] = 0;
        }
        return total;
    }
    // Branch: exclude pick.
    std::vector<int> without = alive;
    without[pick] = 0;
    long long best = mis_size(adj, without);
    // Or include pick.
    std::vector<int> with = alive;
    with[pick] = 0;
    for (int u : adj[pick]) with[u] = 0;
    best = std::max(best, 1 + mis_size(adj, std::move(with)));
    return best;
}

} // namespace

long long neighborhood_independence(const Graph& g, int neighborhood_cap) {
    long long theta = 0;
    for (NodeId v = 0; v < g.n(); ++v) {
        if (g.degree(v) > neighborhood_cap)
            throw PreconditionError("neighborhood_independence: degree exceeds cap " +
                                    std::to_string(neighborhood_cap));
        std::vector<NodeId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
        int k = static_cast<int>(nbrs.size());
        std::vector<std::vector<int>> adj(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
        theta = std::max(theta, mis_size(adj, std::vector<int>(k, 1)));
    }
    return theta;
}

int degeneracy(const Graph& g) {
    return orient_by_degeneracy(g).degeneracy;
}

Verdict verify_relative_defective(const Graph& g, const DefectiveColoring& d) {
    Verdict verdict;
    for (NodeId v = 0; v < g.n(); ++v) {
        if (d.bucket[v] < 0 || d.bucket[v] >= d.q) {
            verdict.add("bucket-out-of-range", v, -1, d.bucket[v]);
            continue;
        }
        long long same = 0;
        for (NodeId u : g.neighbors(v))
            if (d.bucket[u] == d.bucket[v]) ++same;
        if (gt_times(same, d.lambda, g.degree(v))) verdict.add("defect-bound", v, -1, same);
    }
    return verdict;
}

} // namespace oracle
} // namespace dcolor
