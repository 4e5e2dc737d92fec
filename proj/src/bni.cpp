#include "dcolor/bni.hpp"

#include <algorithm>

namespace dcolor {

PerClassBoundReport per_class_neighborhood_bound(const Graph& g, long long theta,
                                                 const DefectiveColoring& defcol, const Rat& eps) {
    PerClassBoundReport rep;
    for (NodeId v = 0; v < g.n(); ++v) {
        long long same = 0;
        for (NodeId u : g.neighbors(v))
            if (defcol.bucket[u] == defcol.bucket[v]) ++same;
        rep.max_defect = std::max(rep.max_defect, same);
    }
    for (NodeId v = 0; v < g.n(); ++v) {
        std::vector<long long> count(defcol.q, 0);
        for (NodeId u : g.neighbors(v)) count[defcol.bucket[u]]++;
        for (Color x = 0; x < defcol.q; ++x) {
            if (count[x] == 0) continue;
            if (count[x] > theta * (rep.max_defect + 1)) {
                rep.theta_dplus1_ok = false;
                if (rep.violations.size() < 10)
                    rep.violations.push_back({v, x, count[x], theta * (rep.max_defect + 1), 1});
            }
            // count <= max(theta, eps * deg)
            bool ok = count[x] <= theta || leq_times(count[x], eps, g.degree(v));
            if (!ok) {
                rep.relative_ok = false;
                if (rep.violations.size() < 10)
                    rep.violations.push_back({v, x, count[x], eps.num * g.degree(v), eps.den});
            }
        }
    }
    return rep;
}

PhaseSchedule PhaseSchedule::make(int max_degree, long long q) {
    PhaseSchedule s;
    s.q = q;
    long long d = std::max(max_degree, 1);
    s.deltas.push_back(d);
    while (s.deltas.back() > 1) s.deltas.push_back((s.deltas.back() + 1) / 2);
    return s;
}

namespace {

struct WeakGlobals {
    std::vector<long long> deltas;
    long long q_grid;
    long long theta;
};

// Part choice for the unoriented reduction: phases with halving neighbor
// allowances; within a phase, defective classes take turns. A node joins
// part i once few enough neighbors sit there and the part holds enough of
// its list.
class WeakAgent final : public NodeAgent {
public:
    WeakAgent(const NodeInit& init, const WeakGlobals* gl) : id_(init.id), gl_(gl) {
        group_ = init.input[0];
        size_ = init.input[1];
        chunk_ = init.input[2];
        bucket_ = init.input[3];
        long long len = init.input[4];
        list_.assign(init.input.begin() + 5, init.input.begin() + 5 + len);
        nbr_lo_.assign(init.neighbors.size(), -1);
        nbr_pick_.assign(init.neighbors.size(), -1);
    }

    void step(NodeContext& ctx) override {
        if (group_ < 0) {
            ctx.finish({-1, -1});
            return;
        }
        long long r = ctx.round();
        if (r == 1) {
            ctx.broadcast({0, static_cast<std::uint64_t>(group_ + 1), static_cast<std::uint64_t>(bucket_)});
            ctx.wake_at(2);
            return;
        }
        absorb(ctx);
        if (r == 2) {
            deg_ = 0;
            for (long long lo : nbr_lo_)
                if (lo == group_) ++deg_;
            p_ = (size_ + chunk_ - 1) / chunk_;
            if (deg_ <= gl_->theta * p_) {
                ctx.finish({-1, -1});
                return;
            }
            part_list_.assign(p_, 0);
            for (Color c : list_) part_list_[(c - group_) / chunk_]++;
            ctx.wake_at(activation(0));
            return;
        }
        long long phase = phase_of(r);
        if (phase < 0) return;  // message-driven wakeup between activations

        long long delta = gl_->deltas[phase];
        std::vector<long long> d(p_, 0);
        for (size_t k = 0; k < nbr_lo_.size(); ++k)
            if (nbr_lo_[k] == group_ && nbr_pick_[k] >= 0) d[nbr_pick_[k]]++;
        const long long L = static_cast<long long>(list_.size());
        long long best = -1;
        for (long long i = 0; i < p_; ++i) {
            if (d[i] > delta) continue;
            // delta + deg/p <= 3 * l_i * deg / |L|, cross-multiplied by p*|L|.
            __int128 lhs = static_cast<__int128>(delta) * p_ * L + static_cast<__int128>(deg_) * L;
            __int128 rhs = static_cast<__int128>(3) * part_list_[i] * deg_ * p_;
            if (lhs > rhs) continue;
            if (best < 0 || part_list_[i] > part_list_[best]) best = i;
        }
        if (best >= 0) {
            ctx.broadcast({1, static_cast<std::uint64_t>(best + 1)});
            ctx.finish({best, phase});
            return;
        }
        if (phase + 1 < static_cast<long long>(gl_->deltas.size()))
            ctx.wake_at(activation(phase + 1));
        else
            ctx.finish({-1, -1});
    }

private:
    long long activation(long long phase) const { return 3 + phase * gl_->q_grid + bucket_; }
    long long phase_of(long long r) const {
        long long off = r - 3 - bucket_;
        if (off < 0 || off % gl_->q_grid != 0) return -1;
        long long phase = off / gl_->q_grid;
        return phase < static_cast<long long>(gl_->deltas.size()) ? phase : -1;
    }

    void absorb(NodeContext& ctx) {
        for (int k = 0; k < ctx.ports(); ++k) {
            const Message& m = ctx.in(k);
            if (m.empty()) continue;
            if (m[0] == 0)
                nbr_lo_[k] = static_cast<long long>(m[1]) - 1;
            else
                nbr_pick_[k] = static_cast<long long>(m[1]) - 1;
        }
    }

    NodeId id_;
    const WeakGlobals* gl_;
    long long group_, size_, chunk_, bucket_;
    long long deg_ = 0, p_ = 1;
    std::vector<Color> list_;
    std::vector<long long> part_list_;
    std::vector<long long> nbr_lo_, nbr_pick_;
};

class WeakProgram final : public Program {
public:
    explicit WeakProgram(WeakGlobals gl) : gl_(std::move(gl)) {}
    std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const override {
        return std::make_unique<WeakAgent>(init, &gl_);
    }

private:
    WeakGlobals gl_;
};

} // namespace

WeakStepOutput weak_reduction_step(const Graph& g, WeakStepState& st,
                                   const std::vector<long long>& group,
                                   const std::vector<long long>& chunk_size, long long theta,
                                   const ProperColoring& base, const RunOptions& opt) {
    const int n = g.n();
    WeakStepOutput out;
    out.pick.assign(n, -1);
    out.assign_phase.assign(n, -1);

    std::vector<long long> p(n, 1);
    std::vector<Rat> lambda(n, Rat(1, 1));
    bool any = false;
    for (NodeId v = 0; v < n; ++v) {
        if (group[v] < 0) continue;
        any = true;
        long long size = st.int_hi[v] - st.int_lo[v];
        p[v] = (size + chunk_size[v] - 1) / chunk_size[v];
        lambda[v] = Rat(1, 3 * p[v]);
    }
    if (!any) return out;

    GroupedDefective def = relative_defective_grouped(g, group, lambda, base, opt);
    out.metrics.absorb(def.metrics, "defective");
    out.bucket = def.bucket;

    WeakGlobals gl;
    PhaseSchedule sched = PhaseSchedule::make(g.max_degree(), def.max_q);
    gl.deltas = sched.deltas;
    gl.q_grid = def.max_q;
    gl.theta = theta;

    std::vector<std::vector<long long>> inputs(n);
    for (NodeId v = 0; v < n; ++v) {
        inputs[v] = {group[v] < 0 ? -1 : st.int_lo[v], st.int_hi[v] - st.int_lo[v], chunk_size[v],
                     std::max<long long>(def.bucket[v], 0), static_cast<long long>(st.lists[v].size())};
        for (Color c : st.lists[v]) inputs[v].push_back(c);
    }
    WeakProgram prog(gl);
    RunOptions o = opt;
    o.space_size = std::max(o.space_size,
                            st.int_hi.empty() ? 2 : *std::max_element(st.int_hi.begin(), st.int_hi.end()));
    RunResult rr = run(prog, g, inputs, o);
    out.metrics.absorb(rr.metrics, "weakchoice");

    for (NodeId v = 0; v < n; ++v) {
        if (group[v] < 0) continue;
        out.pick[v] = static_cast<int>(rr.outputs[v][0]);
        out.assign_phase[v] = static_cast<int>(rr.outputs[v][1]);
    }

    // Completeness: every node with more than theta*p same-group neighbors
    // must have been assigned a part.
    for (NodeId v = 0; v < n; ++v) {
        if (group[v] < 0 || out.pick[v] >= 0) continue;
        long long deg = 0;
        for (NodeId u : g.neighbors(v))
            if (group[u] == group[v]) ++deg;
        if (deg > theta * p[v])
            throw InternalContradiction("weak reduction left high-degree node " + std::to_string(v) +
                                        " without a part (deg " + std::to_string(deg) + ", theta*p " +
                                        std::to_string(theta * p[v]) + ")");
    }
    return out;
}

WeakReductionOutcome weak_reduction(const Graph& g, long long theta, const ListAssignment& lists,
                                    const Rat& eta, const ProperColoring* base, const RunOptions& opt) {
    if (theta < 1) throw PreconditionError("weak_reduction: theta >= 1 required");
    if (eta.num <= eta.den) throw PreconditionError("weak_reduction: eta > 1 required");
    if (!lists.valid()) throw PreconditionError("weak_reduction: invalid lists");

    WeakReductionOutcome out;
    LinialResult lin;
    const ProperColoring* base_ptr = base;
    if (!base_ptr) {
        lin = linial_coloring(g, opt);
        out.metrics.absorb(lin.metrics, "linial");
        base_ptr = &lin.coloring;
    }

    out.partition = ColorSpacePartition::make(lists.space_lo, lists.space_hi, eta);
    out.p = out.partition.parts;
    out.theta = theta;

    WeakStepState st;
    st.int_lo.assign(g.n(), lists.space_lo);
    st.int_hi.assign(g.n(), lists.space_hi);
    st.lists = lists.lists;
    std::vector<long long> group(g.n(), 0);
    for (NodeId v = 0; v < g.n(); ++v) group[v] = lists.space_lo;
    std::vector<long long> chunk(g.n(), out.partition.chunk);

    WeakStepOutput step = weak_reduction_step(g, st, group, chunk, theta, *base_ptr, opt);
    DefectiveColoring defcol;
    defcol.bucket = step.bucket;
    defcol.q = 3 * out.p;
    defcol.lambda = Rat(1, 3 * out.p);
    out.gate = per_class_neighborhood_bound(g, theta, defcol, Rat(1, out.p));
    for (const auto& ph : step.metrics.per_phase) out.metrics.per_phase.push_back(ph);
    out.metrics.rounds += step.metrics.rounds;
    out.metrics.messages_sent += step.metrics.messages_sent;
    out.metrics.max_payload_bits = std::max(out.metrics.max_payload_bits, step.metrics.max_payload_bits);

    out.subspace_index = step.pick;
    out.assign_phase = step.assign_phase;
    out.schedule = PhaseSchedule::make(g.max_degree(), 3 * out.p);
    out.new_lists.space_lo = lists.space_lo;
    out.new_lists.space_hi = lists.space_hi;
    out.new_lists.lists = lists.lists;
    out.new_degree.assign(g.n(), 0);
    for (NodeId v = 0; v < g.n(); ++v) {
        if (out.subspace_index[v] < 0) continue;
        auto [a, b] = out.partition.part_range(out.subspace_index[v]);
        std::vector<Color> clipped;
        for (Color c : lists.lists[v])
            if (c >= a && c < b) clipped.push_back(c);
        out.new_lists.lists[v] = std::move(clipped);
        for (NodeId u : g.neighbors(v))
            if (out.subspace_index[u] == out.subspace_index[v]) out.new_degree[v]++;
    }
    return out;
}

namespace {

struct ParkedLayer {
    std::vector<NodeId> nodes;
    std::vector<long long> caps;       // indexed like nodes
    std::vector<long long> groups;     // instance id at park time
    std::vector<long long> lo, hi;     // interval at park time
};

} // namespace

BniRecursiveResult bni_recursive_list_color(const Graph& g, long long theta,
                                            const ListAssignment& lists, int r,
                                            const ProperColoring* base, const RunOptions& opt) {
    if (theta < 1) throw PreconditionError("bni_recursive: theta >= 1 required");
    if (r < 1) throw PreconditionError("bni_recursive: r >= 1 required");
    if (!lists.valid()) throw PreconditionError("bni_recursive: invalid lists");

    BniRecursiveResult res;
    res.coloring = PartialColoring(g.n());

    LinialResult lin;
    const ProperColoring* base_ptr = base;
    if (!base_ptr) {
        lin = linial_coloring(g, opt);
        res.metrics.absorb(lin.metrics, "linial");
        base_ptr = &lin.coloring;
    }

    // Entry-time quantities for the final guarantee scan.
    std::vector<long long> deg0(g.n(), 0);
    for (NodeId v = 0; v < g.n(); ++v) deg0[v] = g.degree(v);
    std::vector<long long> list0(g.n());
    for (NodeId v = 0; v < g.n(); ++v) list0[v] = lists.list_size(v);

    ListAssignment master = lists;
    std::vector<long long> int_lo(g.n(), lists.space_lo), int_hi(g.n(), lists.space_hi);
    std::vector<bool> in_play(g.n(), true);
    std::vector<ParkedLayer> layers;

    int rem = r;
    while (rem > 2) {
        bool any = false;
        for (NodeId v = 0; v < g.n(); ++v)
            if (in_play[v]) any = true;
        if (!any) break;

        ParkedLayer layer;
        std::vector<long long> inst_deg(g.n(), 0);
        for (NodeId v = 0; v < g.n(); ++v) {
            if (!in_play[v]) continue;
            for (NodeId u : g.neighbors(v))
                if (in_play[u] && int_lo[u] == int_lo[v]) inst_deg[v]++;
        }
        // eta = ceil(size^(1/rem)); nodes at instance degree <= 2*theta*eta
        // park here and get colored greedily on the unwind.
        std::vector<long long> eta_v(g.n(), 2);
        for (NodeId v = 0; v < g.n(); ++v) {
            if (!in_play[v]) continue;
            long long size = int_hi[v] - int_lo[v];
            if (size < 2) {
                layer.nodes.push_back(v);
                layer.caps.push_back(std::max<long long>(size, 1));
                layer.groups.push_back(int_lo[v]);
                layer.lo.push_back(int_lo[v]);
                layer.hi.push_back(int_hi[v]);
                in_play[v] = false;
                continue;
            }
            eta_v[v] = ceil_root(size, rem);
            if (inst_deg[v] <= 2 * theta * eta_v[v]) {
                layer.nodes.push_back(v);
                layer.caps.push_back(2 * theta * eta_v[v]);
                layer.groups.push_back(int_lo[v]);
                layer.lo.push_back(int_lo[v]);
                layer.hi.push_back(int_hi[v]);
            }
        }

        // Weak-reduce every live instance; only the high-degree remainder
        // follows its pick downward.
        WeakStepState st;
        st.int_lo = int_lo;
        st.int_hi = int_hi;
        st.lists.resize(g.n());
        std::vector<long long> group(g.n(), -1), chunk(g.n(), 1);
        for (NodeId v = 0; v < g.n(); ++v) {
            if (!in_play[v]) continue;
            group[v] = int_lo[v];
            long long size = int_hi[v] - int_lo[v];
            chunk[v] = std::max<long long>(1, size / eta_v[v]);
            auto& wl = st.lists[v];
            for (Color c : master.lists[v])
                if (c >= int_lo[v] && c < int_hi[v]) wl.push_back(c);
        }
        WeakStepOutput step = weak_reduction_step(g, st, group, chunk, theta, *base_ptr, opt);
        std::string prefix = "rem" + std::to_string(rem) + ".";
        for (const auto& ph : step.metrics.per_phase)
            res.metrics.per_phase.push_back({prefix + ph.label, ph.rounds});
        res.metrics.rounds += step.metrics.rounds;
        res.metrics.messages_sent += step.metrics.messages_sent;
        res.metrics.max_payload_bits = std::max(res.metrics.max_payload_bits, step.metrics.max_payload_bits);

        std::vector<bool> parked(g.n(), false);
        for (NodeId v : layer.nodes) parked[v] = true;
        for (NodeId v = 0; v < g.n(); ++v) {
            if (!in_play[v]) continue;
            if (parked[v]) {
                in_play[v] = false;
                continue;
            }
            if (step.pick[v] < 0)
                throw InternalContradiction("high-degree node " + std::to_string(v) +
                                            " missed its part in the recursion");
            long long size = int_hi[v] - int_lo[v];
            long long s = chunk[v];
            long long new_lo = int_lo[v] + step.pick[v] * s;
            int_hi[v] = std::min(new_lo + s, int_lo[v] + size);
            int_lo[v] = new_lo;
        }
        layers.push_back(std::move(layer));
        rem--;
    }

    // Base case: whatever is still in play gets the greedy treatment with
    // cap = current space size.
    ParkedLayer bottom;
    for (NodeId v = 0; v < g.n(); ++v) {
        if (!in_play[v]) continue;
        bottom.nodes.push_back(v);
        bottom.caps.push_back(std::max<long long>(int_hi[v] - int_lo[v], 1));
        bottom.groups.push_back(int_lo[v]);
        bottom.lo.push_back(int_lo[v]);
        bottom.hi.push_back(int_hi[v]);
        in_play[v] = false;
    }
    layers.push_back(std::move(bottom));

    // Unwind: deepest layer first.
    for (int li = static_cast<int>(layers.size()) - 1; li >= 0; --li) {
        const ParkedLayer& layer = layers[li];
        if (layer.nodes.empty()) continue;
        std::vector<long long> group(g.n(), -1), cap(g.n(), 0);
        ListAssignment work;
        work.space_lo = master.space_lo;
        work.space_hi = master.space_hi;
        work.lists.resize(g.n());
        for (size_t i = 0; i < layer.nodes.size(); ++i) {
            NodeId v = layer.nodes[i];
            group[v] = layer.groups[i];
            cap[v] = layer.caps[i];
            for (Color c : master.lists[v])
                if (c >= layer.lo[i] && c < layer.hi[i]) work.lists[v].push_back(c);
        }
        // The greedy needs member degree <= cap; over-cap nodes sit out
        // (they carry no guarantee).
        for (size_t i = 0; i < layer.nodes.size(); ++i) {
            NodeId v = layer.nodes[i];
            long long mdeg = 0;
            for (NodeId u : g.neighbors(v))
                if (group[u] >= 0 && group[u] == group[v]) ++mdeg;
            if (mdeg > cap[v]) group[v] = -2;  // mark; cleared below
        }
        for (NodeId v = 0; v < g.n(); ++v)
            if (group[v] == -2) group[v] = -1;

        LowDegreeResult got = low_degree_grouped(g, group, cap, work, *base_ptr, opt);
        res.metrics.absorb(got.metrics, "layer" + std::to_string(li) + ".greedy");
        PartialColoring newly(g.n());
        for (NodeId v = 0; v < g.n(); ++v)
            if (group[v] >= 0 && got.coloring.colored(v)) {
                res.coloring.value[v] = got.coloring.value[v];
                newly.value[v] = got.coloring.value[v];
            }
        // Commit announcements for the list pruning are part of the greedy
        // program's pick broadcasts; prune the master lists accordingly.
        for (NodeId v = 0; v < g.n(); ++v) {
            if (!newly.colored(v)) continue;
            Color c = newly.value[v];
            for (NodeId u : g.neighbors(v)) {
                auto& l = master.lists[u];
                auto it = std::lower_bound(l.begin(), l.end(), c);
                if (it != l.end() && *it == c) l.erase(it);
            }
        }
    }

    // Guarantee: |L_v| > (3*theta)^(r-1) * deg(v) forces a color.
    long long factor = sat_pow(3 * theta, r - 1);
    for (NodeId v = 0; v < g.n(); ++v) {
        if (res.coloring.colored(v)) continue;
        if (list0[v] > factor * deg0[v])
            throw InternalContradiction("guaranteed node " + std::to_string(v) +
                                        " left uncolored by the recursion");
    }
    return res;
}

TotalColoringResult bni_deg_plus_one(const Graph& g, long long theta, const ListAssignment& lists,
                                     const RunOptions& opt) {
    if (theta < 1) throw PreconditionError("bni_deg_plus_one: theta >= 1 required");
    if (!lists.valid()) throw PreconditionError("bni_deg_plus_one: invalid lists");
    for (NodeId v = 0; v < g.n(); ++v)
        if (lists.list_size(v) < g.degree(v) + 1)
            throw PreconditionError("bni_deg_plus_one: node " + std::to_string(v) +
                                    " needs a list of size deg+1");
    if (g.max_degree() >= 1) {
        long long limit = sat_pow(static_cast<long long>(g.max_degree()) + 1, 3);
        if (lists.space_size() > limit)
            throw PreconditionError("bni_deg_plus_one: color space exceeds (max_degree+1)^3");
    }

    LinialResult lin = linial_coloring(g, opt);
    RunMetrics base_metrics;
    base_metrics.absorb(lin.metrics, "linial");

    auto make_params = [theta, &opt](int delta_bound) {
        FrameworkParams params;
        long long lt = ceil_log2(std::max<long long>(theta, 1));
        long long ld = ceil_log2(std::max(delta_bound, 2));
        int r = static_cast<int>(std::max<long long>(1, ceil_root(lt * ld, 2)));
        params.S = sat_pow(3 * theta, r - 1);
        params.T_label = "bni recursive r=" + std::to_string(r);
        params.inner = [theta, r, opt](const Graph& gg, const std::vector<bool>& member,
                                       const ListAssignment& ls, const ProperColoring& bs,
                                       RunMetrics& metrics) {
            std::vector<NodeId> nodes;
            for (NodeId v = 0; v < gg.n(); ++v)
                if (member[v]) nodes.push_back(v);
            InducedSubgraph sub = induced_subgraph(gg, nodes);
            ListAssignment sublists;
            sublists.space_lo = ls.space_lo;
            sublists.space_hi = ls.space_hi;
            sublists.lists.resize(sub.graph.n());
            ProperColoring subbase;
            subbase.palette_size = bs.palette_size;
            subbase.color.resize(sub.graph.n());
            for (NodeId sv = 0; sv < sub.graph.n(); ++sv) {
                sublists.lists[sv] = ls.lists[sub.to_original[sv]];
                subbase.color[sv] = bs.color[sub.to_original[sv]];
            }
            BniRecursiveResult rr =
                bni_recursive_list_color(sub.graph, theta, sublists, r, &subbase, opt);
            metrics.absorb(rr.metrics, "inner.bni");
            PartialColoring out(gg.n());
            for (NodeId sv = 0; sv < sub.graph.n(); ++sv)
                if (rr.coloring.colored(sv)) out.value[sub.to_original[sv]] = rr.coloring.value[sv];
            return out;
        };
        return params;
    };

    std::vector<bool> all(g.n(), true);
    return deg_plus_one_framework(g, all, lists, lin.coloring, make_params, opt,
                                  std::move(base_metrics));
}

std::vector<std::vector<Color>> default_edge_lists(const Graph& g) {
    std::vector<std::vector<Color>> lists(g.edge_count());
    long long top = 2 * std::max(g.max_degree(), 1) - 1;
    for (auto& l : lists) {
        l.resize(top);
        for (long long c = 0; c < top; ++c) l[c] = c + 1;
    }
    return lists;
}

EdgeColoringResult edge_list_color(const Graph& g, const std::vector<std::vector<Color>>& edge_lists,
                                   const RunOptions& opt) {
    EdgeColoringResult res;
    if (g.edge_count() == 0) return res;
    if (static_cast<long long>(edge_lists.size()) != g.edge_count())
        throw PreconditionError("edge_list_color: one list per edge required");

    LineGraphMapping lg = line_graph(g);
    for (long long k = 0; k < g.edge_count(); ++k)
        if (static_cast<long long>(edge_lists[k].size()) < lg.node_degree_sum[k] - 1)
            throw PreconditionError("edge_list_color: list for edge " + std::to_string(k) +
                                    " smaller than deg(u)+deg(v)-1");

    ListAssignment lists;
    Color lo = edge_lists[0][0], hi = edge_lists[0][0];
    for (const auto& l : edge_lists)
        for (Color c : l) {
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
    lists.space_lo = lo;
    lists.space_hi = hi + 1;
    lists.lists = edge_lists;
    for (auto& l : lists.lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }

    RunOptions o = opt;
    o.mode = Mode::Local;  // line-graph simulation carries Local semantics
    TotalColoringResult got = bni_deg_plus_one(lg.line_graph, 2, lists, o);
    res.metrics = got.metrics;
    res.edge_color.resize(g.edge_count());
    for (long long k = 0; k < g.edge_count(); ++k) res.edge_color[k] = got.coloring.value[k];
    return res;
}

} // namespace dcolor
