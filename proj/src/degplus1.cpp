#include "dcolor/degplus1.hpp"

#include "dcolor/hpartition.hpp"
#include "dcolor/listreduce.hpp"

#include <algorithm>
#include <cmath>

namespace dcolor {

namespace {

// One round: freshly colored nodes announce their color so neighbors can
// drop it from their lists.
class CommitAgent final : public NodeAgent {
public:
    explicit CommitAgent(const NodeInit& init) {
        has_ = init.input[0] != 0;
        color_ = init.input[1];
    }
    void step(NodeContext& ctx) override {
        if (has_) ctx.broadcast({static_cast<std::uint64_t>(color_ + 1)});
        ctx.finish({});
    }

private:
    bool has_;
    long long color_;
};

class CommitProgram final : public Program {
public:
    std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const override {
        return std::make_unique<CommitAgent>(init);
    }
};

void meter_commit_round(const Graph& g, const PartialColoring& newly, RunMetrics& metrics,
                        const RunOptions& opt, const std::string& label) {
    std::vector<std::vector<long long>> inputs(g.n());
    for (NodeId v = 0; v < g.n(); ++v)
        inputs[v] = {newly.colored(v) ? 1LL : 0LL, newly.colored(v) ? newly.value[v] : 0LL};
    CommitProgram prog;
    RunResult rr = run(prog, g, inputs, opt);
    metrics.absorb(rr.metrics, label);
}

void prune_lists(const Graph& g, const PartialColoring& newly, ListAssignment& lists) {
    for (NodeId v = 0; v < g.n(); ++v) {
        if (!newly.colored(v)) continue;
        Color c = newly.value[v];
        for (NodeId u : g.neighbors(v)) {
            auto& l = lists.lists[u];
            auto it = std::lower_bound(l.begin(), l.end(), c);
            if (it != l.end() && *it == c) l.erase(it);
        }
    }
}

} // namespace

HalfDegreeResult half_degree_step(const Graph& g, const std::vector<bool>& active,
                                  ListAssignment& lists, const FrameworkParams& params,
                                  const ProperColoring& base, int delta_bound,
                                  const RunOptions& opt) {
    if (params.S < 1) throw PreconditionError("half_degree_step: S >= 1 required");
    (void)delta_bound;  // the halving property is checked by the framework loop
    HalfDegreeResult res;
    res.coloring = PartialColoring(g.n());

    std::vector<long long> group(g.n());
    for (NodeId v = 0; v < g.n(); ++v) group[v] = active[v] ? 0 : -1;
    std::vector<Rat> lambda(g.n(), Rat(1, 2 * params.S));
    GroupedDefective def = relative_defective_grouped(g, group, lambda, base, opt);
    res.metrics.absorb(def.metrics, "halfstep.defective");
    long long q = def.max_q;

    for (long long x = 0; x < q; ++x) {
        std::vector<bool> member(g.n(), false);
        bool any = false;
        for (NodeId v = 0; v < g.n(); ++v)
            if (active[v] && !res.coloring.colored(v) && def.bucket[v] == x) {
                member[v] = true;
                any = true;
            }
        if (!any) continue;

        std::vector<long long> member_deg(g.n(), 0);
        std::vector<long long> pre_list(g.n(), 0);
        for (NodeId v = 0; v < g.n(); ++v) {
            if (!member[v]) continue;
            pre_list[v] = lists.list_size(v);
            for (NodeId u : g.neighbors(v))
                if (member[u]) member_deg[v]++;
        }

        PartialColoring got = params.inner(g, member, lists, base, res.metrics);

        for (NodeId v = 0; v < g.n(); ++v) {
            if (!member[v]) continue;
            if (!got.colored(v) && pre_list[v] > params.S * member_deg[v])
                throw InternalContradiction("inner algorithm left guaranteed node " + std::to_string(v) +
                                            " uncolored (list " + std::to_string(pre_list[v]) + ", deg " +
                                            std::to_string(member_deg[v]) + ", S " +
                                            std::to_string(params.S) + ")");
            if (got.colored(v)) res.coloring.value[v] = got.value[v];
        }

        PartialColoring newly(g.n());
        for (NodeId v = 0; v < g.n(); ++v)
            if (member[v] && got.colored(v)) newly.value[v] = got.value[v];
        meter_commit_round(g, newly, res.metrics, opt, "halfstep.commit");
        prune_lists(g, newly, lists);
    }
    return res;
}

TotalColoringResult deg_plus_one_framework(const Graph& g, const std::vector<bool>& active0,
                                           const ListAssignment& lists0, const ProperColoring& base,
                                           const std::function<FrameworkParams(int delta_bound)>& make_params,
                                           const RunOptions& opt, RunMetrics base_metrics) {
    TotalColoringResult res;
    res.coloring = PartialColoring(g.n());
    res.metrics = std::move(base_metrics);

    ListAssignment lists = lists0;
    std::vector<bool> active = active0;

    int delta_bound = 0;
    for (NodeId v = 0; v < g.n(); ++v) {
        if (!active[v]) continue;
        int d = 0;
        for (NodeId u : g.neighbors(v))
            if (active[u]) ++d;
        delta_bound = std::max(delta_bound, d);
    }
    const int iter_cap = ceil_log2(std::max(delta_bound, 1)) + 2;

    while (true) {
        bool any = false;
        for (NodeId v = 0; v < g.n(); ++v)
            if (active[v] && !res.coloring.colored(v)) any = true;
        if (!any) break;

        if (delta_bound == 0) {
            // Remaining actives are pairwise nonadjacent; greedy with cap 0.
            std::vector<long long> group(g.n(), -1), cap(g.n(), 0);
            for (NodeId v = 0; v < g.n(); ++v)
                if (active[v] && !res.coloring.colored(v)) group[v] = 0;
            LowDegreeResult tail = low_degree_grouped(g, group, cap, lists, base, opt);
            res.metrics.absorb(tail.metrics, "isolated");
            for (NodeId v = 0; v < g.n(); ++v)
                if (group[v] == 0) {
                    if (!tail.coloring.colored(v))
                        throw InternalContradiction("isolated node " + std::to_string(v) +
                                                    " has an empty residual list");
                    res.coloring.value[v] = tail.coloring.value[v];
                }
            break;
        }

        res.halving_iterations++;
        if (res.halving_iterations > iter_cap)
            throw InternalContradiction("degree halving exceeded its iteration budget");

        std::vector<bool> current(g.n(), false);
        for (NodeId v = 0; v < g.n(); ++v) current[v] = active[v] && !res.coloring.colored(v);
        FrameworkParams params = make_params(delta_bound);
        HalfDegreeResult step = half_degree_step(g, current, lists, params, base, delta_bound, opt);
        for (const auto& ph : step.metrics.per_phase) res.metrics.per_phase.push_back(ph);
        res.metrics.rounds += step.metrics.rounds;
        res.metrics.messages_sent += step.metrics.messages_sent;
        res.metrics.max_payload_bits = std::max(res.metrics.max_payload_bits, step.metrics.max_payload_bits);
        for (NodeId v = 0; v < g.n(); ++v)
            if (step.coloring.colored(v)) res.coloring.value[v] = step.coloring.value[v];

        // The uncolored part must have halved in maximum degree.
        int residual_max = 0;
        for (NodeId v = 0; v < g.n(); ++v) {
            if (!active[v] || res.coloring.colored(v)) continue;
            int d = 0;
            for (NodeId u : g.neighbors(v))
                if (active[u] && !res.coloring.colored(u)) ++d;
            residual_max = std::max(residual_max, d);
        }
        if (residual_max > delta_bound / 2)
            throw InternalContradiction("uncolored subgraph degree " + std::to_string(residual_max) +
                                        " exceeds " + std::to_string(delta_bound / 2));
        delta_bound /= 2;
    }

    for (NodeId v = 0; v < g.n(); ++v)
        if (active0[v] && !res.coloring.colored(v))
            throw InternalContradiction("framework finished with uncolored node " + std::to_string(v));
    return res;
}

namespace {

int sqrt_log_r(int delta_bound) {
    long long L = ceil_log2(std::max(delta_bound, 2));
    return static_cast<int>(std::max<long long>(1, ceil_root(L, 2)));
}

} // namespace

FrameworkParams make_recursive_inner_params(int delta_bound, const RunOptions& opt) {
    FrameworkParams params;
    int r = sqrt_log_r(delta_bound);
    params.S = sat_pow(3, r);
    params.T_label = "recursive r=" + std::to_string(r);
    params.inner = [r, opt](const Graph& g, const std::vector<bool>& member,
                            const ListAssignment& lists, const ProperColoring& base,
                            RunMetrics& metrics) {
        std::vector<NodeId> nodes;
        for (NodeId v = 0; v < g.n(); ++v)
            if (member[v]) nodes.push_back(v);
        InducedSubgraph sub = induced_subgraph(g, nodes);
        DegeneracyOrientation od = orient_by_degeneracy(sub.graph);
        ListAssignment sublists;
        sublists.space_lo = lists.space_lo;
        sublists.space_hi = lists.space_hi;
        sublists.lists.resize(sub.graph.n());
        ProperColoring subbase;
        subbase.palette_size = base.palette_size;
        subbase.color.resize(sub.graph.n());
        for (NodeId sv = 0; sv < sub.graph.n(); ++sv) {
            sublists.lists[sv] = lists.lists[sub.to_original[sv]];
            subbase.color[sv] = base.color[sub.to_original[sv]];
        }
        RecursiveListColorResult rr =
            recursive_list_color(sub.graph, od.orientation, sublists, Rat(1, 1), r, &subbase, opt);
        metrics.absorb(rr.metrics, "inner.recursive");
        PartialColoring out(g.n());
        for (NodeId sv = 0; sv < sub.graph.n(); ++sv)
            if (rr.coloring.colored(sv)) out.value[sub.to_original[sv]] = rr.coloring.value[sv];
        return out;
    };
    return params;
}

TotalColoringResult deg_plus_one_list_color(const Graph& g, const ListAssignment& lists,
                                            const RunOptions& opt) {
    if (!lists.valid()) throw PreconditionError("deg_plus_one: invalid lists");
    for (NodeId v = 0; v < g.n(); ++v)
        if (lists.list_size(v) < g.degree(v) + 1)
            throw PreconditionError("deg_plus_one: node " + std::to_string(v) + " has list size " +
                                    std::to_string(lists.list_size(v)) + " < deg+1 = " +
                                    std::to_string(g.degree(v) + 1));
    if (g.max_degree() >= 1) {
        long long limit = sat_pow(static_cast<long long>(g.max_degree()) + 1, 3);
        if (lists.space_size() > limit)
            throw PreconditionError("deg_plus_one: color space " + std::to_string(lists.space_size()) +
                                    " exceeds (max_degree+1)^3 = " + std::to_string(limit));
    }

    LinialResult lin = linial_coloring(g, opt);
    RunMetrics base_metrics;
    base_metrics.absorb(lin.metrics, "linial");
    std::vector<bool> all(g.n(), true);
    return deg_plus_one_framework(
        g, all, lists, lin.coloring,
        [&opt](int delta_bound) { return make_recursive_inner_params(delta_bound, opt); }, opt,
        std::move(base_metrics));
}

TotalColoringResult arboricity_list_color(const Graph& g, long long a, const Rat& epsilon,
                                          const ListAssignment& lists, const RunOptions& opt) {
    if (a < 1) throw PreconditionError("arboricity_list_color: a >= 1 required");
    if (epsilon.num <= 0) throw PreconditionError("arboricity_list_color: eps > 0 required");
    if (!lists.valid()) throw PreconditionError("arboricity_list_color: invalid lists");
    long long need = (2 * epsilon.den + epsilon.num) * a / epsilon.den + 1;  // floor((2+eps)a)+1
    for (NodeId v = 0; v < g.n(); ++v)
        if (lists.list_size(v) < need)
            throw PreconditionError("arboricity_list_color: node " + std::to_string(v) +
                                    " has list size " + std::to_string(lists.list_size(v)) + " < " +
                                    std::to_string(need));

    TotalColoringResult res;
    res.coloring = PartialColoring(g.n());

    HPartitionResult part = h_partition_fixed_bound(g, a, epsilon, opt);
    res.metrics.rounds += part.metrics.rounds;
    res.metrics.messages_sent += part.metrics.messages_sent;
    res.metrics.max_payload_bits = std::max(res.metrics.max_payload_bits, part.metrics.max_payload_bits);
    res.metrics.per_phase.push_back({"hpartition", part.metrics.rounds});

    LinialResult lin = linial_coloring(g, opt);
    res.metrics.absorb(lin.metrics, "linial");

    ListAssignment working = lists;
    for (int lvl = part.partition.h; lvl >= 1; --lvl) {
        std::vector<bool> member(g.n(), false);
        bool any = false;
        for (NodeId v = 0; v < g.n(); ++v)
            if (part.partition.level[v] == lvl) {
                member[v] = true;
                any = true;
            }
        if (!any) continue;
        // Residual lists beat the within-level degree: each later-or-equal
        // level neighbor is either already colored (list shrank by at most
        // one per commitment) or inside this level.
        for (NodeId v = 0; v < g.n(); ++v) {
            if (!member[v]) continue;
            long long mdeg = 0;
            for (NodeId u : g.neighbors(v))
                if (member[u]) ++mdeg;
            if (working.list_size(v) < mdeg + 1)
                throw InternalContradiction("level instance at node " + std::to_string(v) +
                                            " lost its deg+1 slack");
        }
        TotalColoringResult level_res = deg_plus_one_framework(
            g, member, working, lin.coloring,
            [&opt](int delta_bound) { return make_recursive_inner_params(delta_bound, opt); }, opt,
            RunMetrics{});
        std::string prefix = "level" + std::to_string(lvl) + ".";
        for (const auto& ph : level_res.metrics.per_phase)
            res.metrics.per_phase.push_back({prefix + ph.label, ph.rounds});
        res.metrics.rounds += level_res.metrics.rounds;
        res.metrics.messages_sent += level_res.metrics.messages_sent;
        res.metrics.max_payload_bits =
            std::max(res.metrics.max_payload_bits, level_res.metrics.max_payload_bits);
        PartialColoring newly(g.n());
        for (NodeId v = 0; v < g.n(); ++v)
            if (member[v]) {
                res.coloring.value[v] = level_res.coloring.value[v];
                newly.value[v] = level_res.coloring.value[v];
            }
        // deg_plus_one_framework pruned `working` copies internally only for
        // its own run; commit this level's colors against every list.
        prune_lists(g, newly, working);
    }

    for (NodeId v = 0; v < g.n(); ++v)
        if (!res.coloring.colored(v))
            throw InternalContradiction("arboricity coloring left node " + std::to_string(v) + " uncolored");
    return res;
}

} // namespace dcolor
