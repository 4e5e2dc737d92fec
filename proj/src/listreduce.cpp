#include "dcolor/listreduce.hpp"

#include "dcolor/hpartition.hpp"

#include <algorithm>

namespace dcolor {

namespace {

struct ChoiceGlobals {
    long long eta_cap;
    Rat eps;           // a/b
    long long h_grid;
    long long q_grid;
    long long t_fin;
};

// Part-choice schedule: levels descending, defective buckets ascending.
// A node's part choice must dominate the already-fixed choices of the
// neighbors its partial orientation points at; the averaging over parts
// guarantees a feasible choice exists.
class ChoiceAgent final : public NodeAgent {
public:
    ChoiceAgent(const NodeInit& init, const ChoiceGlobals* gl) : id_(init.id), gl_(gl) {
        group_ = init.input[0];
        lo_ = init.input[1];
        size_ = init.input[2];
        level_ = init.input[3];
        bucket_ = init.input[4];
        beta_ = init.input[5];
        long long len = init.input[6];
        list_.assign(init.input.begin() + 7, init.input.begin() + 7 + len);
        nbr_lo_.assign(init.neighbors.size(), -1);
        nbr_level_.assign(init.neighbors.size(), -1);
        nbr_bucket_.assign(init.neighbors.size(), -1);
        nbr_choice_.assign(init.neighbors.size(), -1);
    }

    void step(NodeContext& ctx) override {
        if (group_ < 0) {
            ctx.finish({-1, 0});
            return;
        }
        long long r = ctx.round();
        if (r == 1) {
            ctx.broadcast({0, static_cast<std::uint64_t>(lo_ + 1), static_cast<std::uint64_t>(level_),
                           static_cast<std::uint64_t>(bucket_)});
            ctx.wake_at(activation());
            return;
        }
        absorb(ctx);
        if (r == activation() && choice_ < 0) {
            decide(ctx);
            ctx.wake_at(gl_->t_fin);
            return;
        }
        if (r >= gl_->t_fin) {
            long long same_out = 0;
            for (size_t k = 0; k < nbr_lo_.size(); ++k)
                if (nbr_lo_[k] == lo_ && pi_out(k, ctx) && nbr_choice_[k] == choice_) ++same_out;
            ctx.finish({choice_, same_out});
        }
    }

private:
    long long activation() const {
        return 2 + (gl_->h_grid - level_) * gl_->q_grid + bucket_;
    }

    bool pi_prime_out(size_t k) const {
        if (nbr_level_[k] > level_) return true;
        return nbr_level_[k] == level_ && nbr_bucket_[k] < bucket_;
    }

    bool pi_out(size_t k, NodeContext& ctx) const {
        if (pi_prime_out(k)) return true;
        return nbr_level_[k] == level_ && nbr_bucket_[k] == bucket_ && ctx.neighbor(static_cast<int>(k)) > id_;
    }

    void decide(NodeContext& ctx) {
        long long eta = std::min(gl_->eta_cap, size_);
        long long s = size_ / eta;
        long long p = (size_ + s - 1) / s;
        std::vector<long long> part_list(p, 0), part_out(p, 0);
        for (Color c : list_) part_list[(c - lo_) / s]++;
        for (size_t k = 0; k < nbr_lo_.size(); ++k) {
            if (nbr_lo_[k] != lo_ || !pi_prime_out(k)) continue;
            if (nbr_choice_[k] < 0)
                throw InternalContradiction("part choice: dominated neighbor not yet decided");
            part_out[nbr_choice_[k]]++;
        }
        const long long a = gl_->eps.num, b = gl_->eps.den, L = static_cast<long long>(list_.size());
        long long best = -1;
        for (long long x = 0; x < p; ++x) {
            // b_x + (eps/2)/p * beta <= (2+eps) * l_x * beta / |L|, cross-multiplied.
            __int128 lhs = static_cast<__int128>(2) * b * p * L * part_out[x] +
                           static_cast<__int128>(a) * beta_ * L;
            __int128 rhs = static_cast<__int128>(2) * p * (2 * b + a) * part_list[x] * beta_;
            if (lhs <= rhs && (best < 0 || part_list[x] > part_list[best])) best = x;
        }
        if (best < 0)
            throw InternalContradiction("part choice: no feasible part at node " + std::to_string(id_));
        choice_ = best;
        ctx.broadcast({1, static_cast<std::uint64_t>(choice_ + 1)});
    }

    void absorb(NodeContext& ctx) {
        for (int k = 0; k < ctx.ports(); ++k) {
            const Message& m = ctx.in(k);
            if (m.empty()) continue;
            if (m[0] == 0) {
                nbr_lo_[k] = static_cast<long long>(m[1]) - 1;
                nbr_level_[k] = static_cast<long long>(m[2]);
                nbr_bucket_[k] = static_cast<long long>(m[3]);
            } else {
                nbr_choice_[k] = static_cast<long long>(m[1]) - 1;
            }
        }
    }

    NodeId id_;
    const ChoiceGlobals* gl_;
    long long group_, lo_, size_, level_, bucket_, beta_;
    long long choice_ = -1;
    std::vector<Color> list_;
    std::vector<long long> nbr_lo_, nbr_level_, nbr_bucket_, nbr_choice_;
};

class ChoiceProgram final : public Program {
public:
    ChoiceProgram(ChoiceGlobals gl) : gl_(gl) {}
    std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const override {
        return std::make_unique<ChoiceAgent>(init, &gl_);
    }

private:
    ChoiceGlobals gl_;
};

} // namespace

ReduceStepOutput oriented_reduction_step(const Graph& g, ReduceStepState& st,
                                         const std::vector<long long>& group, long long eta_cap,
                                         const Rat& epsilon, const ProperColoring& base,
                                         const RunOptions& opt) {
    const int n = g.n();
    ReduceStepOutput out;
    out.pick.assign(n, -1);
    out.level.assign(n, 0);
    out.bucket.assign(n, 0);

    std::vector<long long> active_group(n, -1);
    bool any_active = false;
    for (NodeId v = 0; v < n; ++v) {
        long long size = st.int_hi[v] - st.int_lo[v];
        if (group[v] >= 0 && size >= 2) {
            active_group[v] = st.int_lo[v];
            any_active = true;
        }
    }
    if (!any_active) return out;

    Rat delta = epsilon.half();
    Rat threshold = delta.plus_int(2);

    GroupedHPartition levels = h_partition_grouped(g, active_group, st.beta, threshold, opt, true);
    out.metrics.absorb(levels.metrics, "hpartition");
    for (NodeId v = 0; v < n; ++v) out.level[v] = levels.level[v];

    // Per-level relative defective coloring; the defect bound is chosen so a
    // node's unoriented (same-level same-bucket) neighbor count stays within
    // (eps/2)/p * beta(v), which is what the choice inequality budgets for.
    const long long a = epsilon.num, b = epsilon.den;
    std::vector<long long> def_group(n, -1);
    std::vector<Rat> lambda(n, Rat(1, 1));
    std::vector<long long> q(n, 1);
    long long q_grid = 1;
    for (NodeId v = 0; v < n; ++v) {
        if (active_group[v] < 0) continue;
        long long size = st.int_hi[v] - st.int_lo[v];
        long long eta = std::min(eta_cap, size);
        long long s = size / eta;
        long long p = (size + s - 1) / s;
        lambda[v] = Rat(a, p * (4 * b + a));
        q[v] = lambda[v].ceil_inverse();
        q_grid = std::max(q_grid, q[v]);
        def_group[v] = active_group[v] * (levels.h + 1) + levels.level[v];
    }
    GroupedDefective defres = relative_defective_grouped(g, def_group, lambda, base, opt);
    out.metrics.absorb(defres.metrics, "defective");
    for (NodeId v = 0; v < n; ++v) out.bucket[v] = std::max<long long>(defres.bucket[v], 0);

    ChoiceGlobals gl;
    gl.eta_cap = eta_cap;
    gl.eps = epsilon;
    gl.h_grid = std::max(levels.h, 1);
    gl.q_grid = q_grid;
    gl.t_fin = 2 + gl.h_grid * gl.q_grid;

    std::vector<std::vector<long long>> inputs(n);
    for (NodeId v = 0; v < n; ++v) {
        inputs[v] = {active_group[v], st.int_lo[v], st.int_hi[v] - st.int_lo[v],
                     out.level[v], out.bucket[v], st.beta[v],
                     static_cast<long long>(st.lists[v].size())};
        for (Color c : st.lists[v]) inputs[v].push_back(c);
    }
    ChoiceProgram prog(gl);
    RunOptions o = opt;
    o.space_size = std::max(o.space_size, st.int_hi.empty() ? 2 : *std::max_element(st.int_hi.begin(), st.int_hi.end()));
    RunResult rr = run(prog, g, inputs, o);
    out.metrics.absorb(rr.metrics, "choice");

    // Apply picks: shrink intervals, clip lists, adopt the new out-degree
    // (same-part out-neighbors under the new orientation).
    for (NodeId v = 0; v < n; ++v) {
        if (active_group[v] < 0) continue;
        long long x = rr.outputs[v][0];
        out.pick[v] = static_cast<int>(x);
        long long size = st.int_hi[v] - st.int_lo[v];
        long long eta = std::min(eta_cap, size);
        long long s = size / eta;
        long long new_lo = st.int_lo[v] + x * s;
        long long new_hi = std::min(new_lo + s, st.int_hi[v]);
        std::vector<Color> clipped;
        for (Color c : st.lists[v])
            if (c >= new_lo && c < new_hi) clipped.push_back(c);
        st.lists[v] = std::move(clipped);
        st.int_lo[v] = new_lo;
        st.int_hi[v] = new_hi;
        st.beta[v] = rr.outputs[v][1];
    }
    return out;
}

namespace {

Orientation orientation_from_schedule(const Graph& g, const std::vector<int>& level,
                                      const std::vector<int>& bucket) {
    std::vector<bool> bits(g.edge_count());
    for (size_t k = 0; k < bits.size(); ++k) {
        auto [u, v] = g.edges()[k];  // u < v
        bool u_to_v;
        if (level[u] != level[v])
            u_to_v = level[u] < level[v];
        else if (bucket[u] != bucket[v])
            u_to_v = bucket[u] > bucket[v];
        else
            u_to_v = true;  // lower id points to higher id
        bits[k] = u_to_v;
    }
    return Orientation::from_bits(g, std::move(bits));
}

bool lists_intersect(const std::vector<Color>& x, const std::vector<Color>& y) {
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) return true;
        if (x[i] < y[j]) ++i; else ++j;
    }
    return false;
}

} // namespace

ReductionOutcome oriented_reduction(const Graph& g, const Orientation& o, const ListAssignment& lists,
                                    long long eta, const Rat& epsilon,
                                    const ProperColoring* base, const RunOptions& opt) {
    if (eta < 2) throw PreconditionError("oriented_reduction: eta >= 2 required");
    if (epsilon.num <= 0 || epsilon.num > epsilon.den)
        throw PreconditionError("oriented_reduction: eps in (0,1] required");
    if (!lists.valid()) throw PreconditionError("oriented_reduction: invalid lists");
    long long size = lists.space_size();
    if (eta > size) throw PreconditionError("oriented_reduction: eta <= |space| required");

    ReductionOutcome out;
    LinialResult lin;
    const ProperColoring* base_ptr = base;
    if (!base_ptr) {
        lin = linial_coloring(g, opt);
        out.metrics.absorb(lin.metrics, "linial");
        base_ptr = &lin.coloring;
    }

    ReduceStepState st;
    st.int_lo.assign(g.n(), lists.space_lo);
    st.int_hi.assign(g.n(), lists.space_hi);
    st.lists = lists.lists;
    st.beta.assign(g.n(), 0);
    for (NodeId v = 0; v < g.n(); ++v) st.beta[v] = o.out_degree(v);

    std::vector<long long> group(g.n(), 0);
    ReduceStepOutput step = oriented_reduction_step(g, st, group, eta, epsilon, *base_ptr, opt);
    for (const auto& ph : step.metrics.per_phase) out.metrics.per_phase.push_back(ph);
    out.metrics.rounds += step.metrics.rounds;
    out.metrics.messages_sent += step.metrics.messages_sent;
    out.metrics.max_payload_bits = std::max(out.metrics.max_payload_bits, step.metrics.max_payload_bits);

    out.partition = ColorSpacePartition::make(lists.space_lo, lists.space_hi, Rat(eta, 1));
    out.subspace_index = step.pick;
    out.new_orientation = orientation_from_schedule(g, step.level, step.bucket);
    out.new_lists.space_lo = lists.space_lo;
    out.new_lists.space_hi = lists.space_hi;
    out.new_lists.lists = st.lists;
    out.same_part_out = st.beta;
    out.new_beta.assign(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        NodeId from = out.new_orientation.oriented_from(u, v, g) ? u : v;
        NodeId to = from == u ? v : u;
        if (out.subspace_index[from] == out.subspace_index[to] &&
            lists_intersect(out.new_lists.lists[from], out.new_lists.lists[to]))
            out.new_beta[from]++;
    }
    return out;
}

RecursiveListColorResult recursive_list_color(const Graph& g, const Orientation& o,
                                              const ListAssignment& lists, const Rat& epsilon, int r,
                                              const ProperColoring* base, const RunOptions& opt) {
    if (r < 1) throw PreconditionError("recursive_list_color: r >= 1 required");
    if (epsilon.num <= 0 || epsilon.num > epsilon.den)
        throw PreconditionError("recursive_list_color: eps in (0,1] required");
    if (!lists.valid()) throw PreconditionError("recursive_list_color: invalid lists");

    RecursiveListColorResult res;
    res.coloring = PartialColoring(g.n());

    LinialResult lin;
    const ProperColoring* base_ptr = base;
    if (!base_ptr) {
        lin = linial_coloring(g, opt);
        res.metrics.absorb(lin.metrics, "linial");
        base_ptr = &lin.coloring;
    }

    long long C = lists.space_size();
    long long eta = std::max<long long>(2, ceil_root(C, r));

    ReduceStepState st;
    st.int_lo.assign(g.n(), lists.space_lo);
    st.int_hi.assign(g.n(), lists.space_hi);
    st.lists = lists.lists;
    st.beta.assign(g.n(), 0);
    for (NodeId v = 0; v < g.n(); ++v) st.beta[v] = o.out_degree(v);

    std::vector<long long> group(g.n(), 0);
    for (int i = 1; i <= r; ++i) {
        bool any = false;
        for (NodeId v = 0; v < g.n(); ++v)
            if (st.int_hi[v] - st.int_lo[v] >= 2) any = true;
        if (!any) break;
        ReduceStepOutput step = oriented_reduction_step(g, st, group, eta, epsilon, *base_ptr, opt);
        std::string prefix = "step" + std::to_string(i) + ".";
        for (const auto& ph : step.metrics.per_phase)
            res.metrics.per_phase.push_back({prefix + ph.label, ph.rounds});
        res.metrics.rounds += step.metrics.rounds;
        res.metrics.messages_sent += step.metrics.messages_sent;
        res.metrics.max_payload_bits = std::max(res.metrics.max_payload_bits, step.metrics.max_payload_bits);
    }

    for (NodeId v = 0; v < g.n(); ++v) {
        if (st.int_hi[v] - st.int_lo[v] != 1)
            throw InternalContradiction("recursive reduction left a non-singleton space at node " +
                                        std::to_string(v));
        if (st.lists[v].size() == 1 && st.beta[v] == 0) res.coloring.value[v] = st.lists[v][0];
    }

    // Every node whose initial list beats (2+eps)^r times its out-degree
    // must hold a color now.
    for (NodeId v = 0; v < g.n(); ++v) {
        if (res.coloring.colored(v)) continue;
        long long beta0 = o.out_degree(v);
        long long lv = lists.list_size(v);
        bool guaranteed;
        if (beta0 == 0) {
            guaranteed = lv >= 1;
        } else {
            __int128 pow = 1;
            bool capped = false;
            for (int i = 0; i < r; ++i) {
                pow *= (2 * epsilon.den + epsilon.num);
                if (pow > static_cast<__int128>(4) * 1000000000LL * 1000000000LL) { capped = true; break; }
            }
            if (capped) {
                guaranteed = false;  // threshold beyond any real list size
            } else {
                __int128 denpow = 1;
                for (int i = 0; i < r; ++i) denpow *= epsilon.den;
                guaranteed = static_cast<__int128>(lv) * denpow > pow * beta0;
            }
        }
        if (guaranteed)
            throw InternalContradiction("guaranteed node left uncolored by recursive reduction: " +
                                        std::to_string(v));
    }
    return res;
}

} // namespace dcolor
