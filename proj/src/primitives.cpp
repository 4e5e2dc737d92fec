#include "dcolor/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace dcolor {

namespace {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

long long next_prime_at_least(long long q) {
    while (!is_prime(q)) ++q;
    return q;
}

// q^(d+1) >= m, capped to avoid overflow.
bool pow_reaches(long long q, int e, long long m) {
    __int128 p = 1;
    for (int i = 0; i < e; ++i) {
        p *= q;
        if (p >= m) return true;
    }
    return p >= m;
}

struct LinialStep {
    long long q;
    int d;
};

// Best single reduction from an m-coloring: the smallest q^2 over degrees d
// with q prime, q > Delta*d and q^(d+1) >= m.
std::optional<LinialStep> best_step(long long m, int delta) {
    long long deff = std::max(delta, 1);
    std::optional<LinialStep> best;
    for (int d = 1; d <= 62; ++d) {
        long long qmin = std::max(deff * d + 1, ceil_root(m, d + 1));
        long long q = next_prime_at_least(qmin);
        if (!best || q * q < best->q * best->q) best = LinialStep{q, d};
        if (pow_reaches(2, d + 1, m)) break;  // larger d cannot lower q below Delta*d+1 much further
    }
    if (best && best->q * best->q < m) return best;
    return std::nullopt;
}

std::vector<LinialStep> linial_steps(long long m0, int delta) {
    std::vector<LinialStep> steps;
    long long m = m0;
    while (auto s = best_step(m, delta)) {
        steps.push_back(*s);
        m = s->q * s->q;
    }
    return steps;
}

long long eval_poly_digits(long long color, long long q, int d, long long x) {
    // color interpreted base q: coefficients c_0..c_d; Horner from the top.
    long long coeff[64];
    long long c = color;
    for (int i = 0; i <= d; ++i) {
        coeff[i] = c % q;
        c /= q;
    }
    long long acc = 0;
    for (int i = d; i >= 0; --i) acc = (acc * x + coeff[i]) % q;
    return acc;
}

class LinialAgent final : public NodeAgent {
public:
    LinialAgent(const std::vector<LinialStep>* steps, int delta, long long id)
        : steps_(steps), delta_(delta), cur_(id) {}

    void step(NodeContext& ctx) override {
        if (delta_ == 0) {  // isolated nodes need no symmetry breaking
            ctx.finish({0});
            return;
        }
        long long r = ctx.round();
        if (r == 1) {
            if (steps_->empty()) {
                ctx.finish({cur_});
                return;
            }
            nbr_color_.assign(ctx.ports(), -1);
            ctx.broadcast({static_cast<std::uint64_t>(cur_)});
            ctx.wake_at(2);
            return;
        }
        for (int k = 0; k < ctx.ports(); ++k)
            if (!ctx.in(k).empty()) nbr_color_[k] = static_cast<long long>(ctx.in(k)[0]);
        const LinialStep& s = (*steps_)[static_cast<size_t>(r - 2)];
        long long x = -1;
        for (long long cand = 0; cand < s.q && x < 0; ++cand) {
            bool clash = false;
            long long own = eval_poly_digits(cur_, s.q, s.d, cand);
            for (int k = 0; k < ctx.ports() && !clash; ++k)
                if (nbr_color_[k] >= 0 && eval_poly_digits(nbr_color_[k], s.q, s.d, cand) == own)
                    clash = true;
            if (!clash) x = cand;
        }
        if (x < 0) throw InternalContradiction("linial: no collision-free evaluation point");
        cur_ = x * s.q + eval_poly_digits(cur_, s.q, s.d, x);
        if (r == static_cast<long long>(steps_->size()) + 1) {
            ctx.finish({cur_});
        } else {
            ctx.broadcast({static_cast<std::uint64_t>(cur_)});
            ctx.wake_at(r + 1);
        }
    }

private:
    const std::vector<LinialStep>* steps_;
    int delta_;
    long long cur_;
    std::vector<long long> nbr_color_;
};

class LinialProgram final : public Program {
public:
    LinialProgram(std::vector<LinialStep> steps, int delta) : steps_(std::move(steps)), delta_(delta) {}
    std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const override {
        return std::make_unique<LinialAgent>(&steps_, delta_, init.id);
    }

private:
    std::vector<LinialStep> steps_;
    int delta_;
};

} // namespace

long long linial_palette_bound(int max_degree) {
    long long d = std::max(max_degree, 2);
    return 16 * d * d;
}

std::vector<long long> linial_palette_schedule(long long m0, int max_degree) {
    std::vector<long long> palettes{m0};
    for (const auto& s : linial_steps(m0, max_degree)) palettes.push_back(s.q * s.q);
    return palettes;
}

LinialResult linial_coloring(const Graph& g, const RunOptions& opt) {
    auto steps = linial_steps(g.n(), g.max_degree());
    LinialProgram prog(steps, g.max_degree());
    RunOptions o = opt;
    o.space_size = std::max<long long>(o.space_size, g.n());
    RunResult rr = run(prog, g, {}, o);
    LinialResult res;
    res.coloring.color.resize(g.n());
    long long palette = g.max_degree() == 0 ? 1 : (steps.empty() ? g.n() : steps.back().q * steps.back().q);
    for (NodeId v = 0; v < g.n(); ++v) res.coloring.color[v] = rr.outputs[v][0];
    res.coloring.palette_size = palette;
    res.metrics = rr.metrics;
    return res;
}

namespace {

// One sweep over the base color classes. Messages: round 1 announces
// [group, bucket+1]; a class round broadcasts [new_bucket+1] on change.
class DefectivePassAgent final : public NodeAgent {
public:
    DefectivePassAgent(const NodeInit& init, long long base_palette)
        : base_palette_(base_palette) {
        group_ = init.input[0];
        base_color_ = init.input[1];
        q_ = init.input[2];
        bucket_ = init.input[3];
        nbr_group_.assign(init.neighbors.size(), -2);
        nbr_bucket_.assign(init.neighbors.size(), -1);
    }

    void step(NodeContext& ctx) override {
        if (group_ < 0) {
            ctx.finish({-1, 0});
            return;
        }
        long long r = ctx.round();
        if (r == 1) {
            ctx.broadcast({encode(group_), encode(bucket_)});
            ctx.wake_at(2 + base_color_);
            return;
        }
        absorb(ctx);
        if (r < 2 + base_color_) return;  // message-driven wakeup before our class

        std::vector<long long> count(q_, 0);
        for (size_t k = 0; k < nbr_group_.size(); ++k)
            if (nbr_group_[k] == group_ && nbr_bucket_[k] >= 0) count[nbr_bucket_[k]]++;
        long long best = 0;
        for (long long b = 1; b < q_; ++b)
            if (count[b] < count[best]) best = b;
        bool changed;
        if (bucket_ < 0) {
            bucket_ = best;
            changed = true;
        } else if (count[best] < count[bucket_]) {
            bucket_ = best;
            changed = true;
        } else {
            changed = false;
        }
        if (changed) ctx.broadcast({encode(group_), encode(bucket_)});
        ctx.finish({bucket_, changed ? 1 : 0});
    }

private:
    static std::uint64_t encode(long long v) { return static_cast<std::uint64_t>(v + 2); }
    static long long decode(std::uint64_t v) { return static_cast<long long>(v) - 2; }

    void absorb(NodeContext& ctx) {
        for (int k = 0; k < ctx.ports(); ++k) {
            const Message& m = ctx.in(k);
            if (m.empty()) continue;
            nbr_group_[k] = decode(m[0]);
            nbr_bucket_[k] = decode(m[1]);
        }
    }

    long long group_, base_color_, q_, bucket_, base_palette_;
    std::vector<long long> nbr_group_, nbr_bucket_;
};

class DefectivePassProgram final : public Program {
public:
    explicit DefectivePassProgram(long long base_palette) : base_palette_(base_palette) {}
    std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const override {
        return std::make_unique<DefectivePassAgent>(init, base_palette_);
    }

private:
    long long base_palette_;
};

} // namespace

GroupedDefective relative_defective_grouped(const Graph& g, const std::vector<long long>& group,
                                            const std::vector<Rat>& lambda, const ProperColoring& base,
                                            const RunOptions& opt) {
    GroupedDefective out;
    out.bucket.assign(g.n(), -1);
    // Per-group degree maxima drive the bucket clamp.
    std::vector<long long> group_deg(g.n(), 0);
    std::unordered_map<long long, long long> group_max;
    for (NodeId v = 0; v < g.n(); ++v) {
        if (group[v] < 0) continue;
        for (NodeId u : g.neighbors(v))
            if (group[u] == group[v]) group_deg[v]++;
        auto it = group_max.find(group[v]);
        if (it == group_max.end())
            group_max[group[v]] = group_deg[v];
        else
            it->second = std::max(it->second, group_deg[v]);
    }
    std::vector<long long> q(g.n(), 1);
    for (NodeId v = 0; v < g.n(); ++v)
        if (group[v] >= 0) {
            if (lambda[v].num <= 0) throw PreconditionError("defective: lambda > 0 required");
            q[v] = std::min(lambda[v].ceil_inverse(), group_max[group[v]] + 1);
            out.max_q = std::max(out.max_q, q[v]);
        }

    long long pass_cap = 2 * g.edge_count() + 4;
    for (long long pass = 0;; ++pass) {
        if (pass > pass_cap)
            throw InternalContradiction("defective: sweeps did not stabilize");
        std::vector<std::vector<long long>> inputs(g.n());
        for (NodeId v = 0; v < g.n(); ++v)
            inputs[v] = {group[v], base.color[v], q[v], out.bucket[v]};
        DefectivePassProgram prog(base.palette_size);
        RunResult rr = run(prog, g, inputs, opt);
        out.metrics.absorb(rr.metrics, "defective");
        out.passes++;
        bool any_change = false;
        for (NodeId v = 0; v < g.n(); ++v) {
            if (group[v] < 0) continue;
            out.bucket[v] = rr.outputs[v][0];
            any_change = any_change || rr.outputs[v][1] != 0;
        }
        if (!any_change) break;
    }

    // Contract scan: same-group same-bucket neighbors <= lambda * group-degree.
    for (NodeId v = 0; v < g.n(); ++v) {
        if (group[v] < 0) continue;
        long long same = 0, deg = 0;
        for (NodeId u : g.neighbors(v)) {
            if (group[u] != group[v]) continue;
            ++deg;
            if (out.bucket[u] == out.bucket[v]) ++same;
        }
        if (gt_times(same, lambda[v], deg))
            throw InternalContradiction("defective: defect bound violated at node " + std::to_string(v));
    }
    return out;
}

DefectiveResult relative_defective_coloring(const Graph& g, const Rat& lambda,
                                            const ProperColoring& base, const RunOptions& opt) {
    if (lambda.num <= 0) throw PreconditionError("defective: lambda > 0 required");
    std::vector<long long> group(g.n(), 0);
    std::vector<Rat> lam(g.n(), lambda);
    GroupedDefective got = relative_defective_grouped(g, group, lam, base, opt);
    DefectiveResult res;
    res.coloring.bucket = std::move(got.bucket);
    res.coloring.q = lambda.ceil_inverse();
    res.coloring.lambda = lambda;
    res.metrics = got.metrics;
    res.passes = got.passes;
    return res;
}

namespace {

constexpr std::uint64_t kTagAnnounce = 0;
constexpr std::uint64_t kTagRecolor = 1;
constexpr std::uint64_t kTagPick = 2;

// Two phases on the member subgraph: reduce the base coloring to small
// working colors (one class per round, highest first), then sweep the
// working classes picking list colors greedily.
class LowDegreeAgent final : public NodeAgent {
public:
    LowDegreeAgent(const NodeInit& init, long long base_palette)
        : base_palette_(base_palette) {
        group_ = init.input[0];
        member_ = init.input[1] != 0;
        cap_ = init.input[2];
        base_color_ = init.input[3];
        long long len = init.input[4];
        list_.assign(init.input.begin() + 5, init.input.begin() + 5 + len);
        nbr_group_.assign(init.neighbors.size(), -2);
        nbr_work_.assign(init.neighbors.size(), -1);
        nbr_pick_.assign(init.neighbors.size(), -1);
        work_ = base_color_;
    }

    void step(NodeContext& ctx) override {
        if (!member_ || group_ < 0) {
            ctx.finish({0});
            return;
        }
        long long r = ctx.round();
        if (r == 1) {
            ctx.broadcast({kTagAnnounce, encode(group_), encode(base_color_)});
            schedule(ctx);
            return;
        }
        absorb(ctx);
        long long rc = recolor_round();
        long long pk = pick_round();
        if (rc > 0 && r == rc) {
            // Smallest working color in [0, cap] unused by member neighbors.
            std::vector<bool> used(cap_ + 1, false);
            for (size_t k = 0; k < nbr_group_.size(); ++k)
                if (nbr_group_[k] == group_ && nbr_work_[k] >= 0 && nbr_work_[k] <= cap_)
                    used[nbr_work_[k]] = true;
            long long c = 0;
            while (c <= cap_ && used[c]) ++c;
            if (c > cap_)
                throw InternalContradiction("low-degree recolor: no free working color");
            work_ = c;
            ctx.broadcast({kTagRecolor, encode(work_)});
            ctx.wake_at(pick_round());
            return;
        }
        if (r == pk) {
            Color chosen = kNoColor;
            for (Color c : list_) {
                bool taken = false;
                for (size_t k = 0; k < nbr_group_.size() && !taken; ++k)
                    if (nbr_group_[k] == group_ && nbr_pick_[k] == c) taken = true;
                if (!taken) { chosen = c; break; }
            }
            if (chosen != kNoColor) {
                ctx.broadcast({kTagPick, encode(chosen)});
                ctx.finish({1, chosen});
            } else {
                ctx.finish({0});
            }
            return;
        }
        schedule(ctx);
    }

private:
    static std::uint64_t encode(long long v) { return static_cast<std::uint64_t>(v + 2); }
    static long long decode(std::uint64_t v) { return static_cast<long long>(v) - 2; }

    long long recolor_round() const {
        if (base_color_ <= cap_) return -1;
        return 2 + (base_palette_ - 1 - base_color_);
    }
    long long greedy_base() const { return 2 + std::max<long long>(0, base_palette_ - 1); }
    long long pick_round() const { return greedy_base() + work_; }

    void schedule(NodeContext& ctx) {
        long long r = ctx.round();
        long long rc = recolor_round();
        if (rc > r) {
            ctx.wake_at(rc);
        } else {
            long long pk = pick_round();
            if (pk > r) ctx.wake_at(pk);
        }
    }

    void absorb(NodeContext& ctx) {
        for (int k = 0; k < ctx.ports(); ++k) {
            const Message& m = ctx.in(k);
            if (m.empty()) continue;
            if (m[0] == kTagAnnounce) {
                nbr_group_[k] = decode(m[1]);
                nbr_work_[k] = decode(m[2]);
            } else if (m[0] == kTagRecolor) {
                nbr_work_[k] = decode(m[1]);
            } else if (m[0] == kTagPick) {
                nbr_pick_[k] = decode(m[1]);
            }
        }
    }

    long long group_, cap_, base_color_, base_palette_, work_ = 0;
    bool member_;
    std::vector<Color> list_;
    std::vector<long long> nbr_group_, nbr_work_, nbr_pick_;
};

class LowDegreeProgram final : public Program {
public:
    explicit LowDegreeProgram(long long base_palette) : base_palette_(base_palette) {}
    std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const override {
        return std::make_unique<LowDegreeAgent>(init, base_palette_);
    }

private:
    long long base_palette_;
};

} // namespace

LowDegreeResult low_degree_grouped(const Graph& g, const std::vector<long long>& group,
                                   const std::vector<long long>& degree_cap,
                                   const ListAssignment& lists, const ProperColoring& base,
                                   const RunOptions& opt) {
    std::vector<std::vector<long long>> inputs(g.n());
    for (NodeId v = 0; v < g.n(); ++v) {
        bool member = group[v] >= 0;
        inputs[v] = {member ? group[v] : -1, member ? 1 : 0, degree_cap[v], base.color[v],
                     lists.list_size(v)};
        for (Color c : lists.lists[v]) inputs[v].push_back(c);
    }
    LowDegreeProgram prog(base.palette_size);
    RunOptions o = opt;
    o.space_size = std::max(o.space_size, std::max<long long>(lists.space_hi, base.palette_size));
    RunResult rr = run(prog, g, inputs, o);

    LowDegreeResult res;
    res.coloring = PartialColoring(g.n());
    for (NodeId v = 0; v < g.n(); ++v)
        if (group[v] >= 0 && rr.outputs[v][0] == 1) res.coloring.value[v] = rr.outputs[v][1];
    res.metrics = rr.metrics;

    // Guarantee scan: any member with more list colors than member-neighbors
    // must have been colored.
    for (NodeId v = 0; v < g.n(); ++v) {
        if (group[v] < 0 || res.coloring.colored(v)) continue;
        long long mdeg = 0;
        for (NodeId u : g.neighbors(v))
            if (group[u] == group[v]) ++mdeg;
        if (lists.list_size(v) > mdeg)
            throw InternalContradiction("low-degree greedy left a guaranteed node uncolored: " +
                                        std::to_string(v));
    }
    return res;
}

LowDegreeResult low_degree_list_color(const Graph& g, long long d, const ListAssignment& lists,
                                      const ProperColoring& base, const RunOptions& opt) {
    std::vector<long long> group(g.n());
    std::vector<long long> cap(g.n(), d);
    for (NodeId v = 0; v < g.n(); ++v) group[v] = g.degree(v) <= d ? 0 : -1;
    LowDegreeResult res = low_degree_grouped(g, group, cap, lists, base, opt);
    res.metrics.per_phase.clear();
    res.metrics.per_phase.push_back({"lowdeg", res.metrics.rounds});
    return res;
}

} // namespace dcolor
