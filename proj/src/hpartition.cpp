#include "dcolor/hpartition.hpp"

#include <algorithm>

namespace dcolor {

namespace {

// One engine round per level: a live node peels as soon as its count of
// live same-group neighbors is at most threshold * beta. Peels are
// announced; silence means the neighbor is still live (or inert).
class PeelAgent final : public NodeAgent {
public:
    PeelAgent(const NodeInit& init, Rat threshold) : threshold_(threshold) {
        group_ = init.input[0];
        beta_ = init.input[1];
        live_.assign(init.neighbors.size(), false);
    }

    void step(NodeContext& ctx) override {
        if (group_ < 0) {
            ctx.finish({0});
            return;
        }
        long long r = ctx.round();
        if (r == 1) {
            ctx.broadcast({1, static_cast<std::uint64_t>(group_ + 1)});
            ctx.wake_at(2);
            return;
        }
        for (int k = 0; k < ctx.ports(); ++k) {
            const Message& m = ctx.in(k);
            if (m.empty()) continue;
            if (m[0] == 1) {
                if (static_cast<long long>(m[1]) - 1 == group_) live_[k] = true;
            } else {
                live_[k] = false;  // peel notice
            }
        }
        long long live_count = static_cast<long long>(std::count(live_.begin(), live_.end(), true));
        if (leq_times(live_count, threshold_, beta_)) {
            ctx.broadcast({2});
            ctx.finish({r - 1});  // level = round - 1
        }
        // Otherwise wait for further peel notices; if none ever arrive the
        // engine reports the stall.
    }

private:
    long long group_, beta_;
    Rat threshold_;
    std::vector<bool> live_;
};

class PeelProgram final : public Program {
public:
    explicit PeelProgram(Rat threshold) : threshold_(threshold) {}
    std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const override {
        return std::make_unique<PeelAgent>(init, threshold_);
    }

private:
    Rat threshold_;
};

} // namespace

GroupedHPartition h_partition_grouped(const Graph& g, const std::vector<long long>& group,
                                      const std::vector<long long>& beta, const Rat& threshold,
                                      const RunOptions& opt, bool stall_is_internal_error) {
    std::vector<std::vector<long long>> inputs(g.n());
    for (NodeId v = 0; v < g.n(); ++v) inputs[v] = {group[v], beta[v]};
    PeelProgram prog(threshold);
    GroupedHPartition out;
    try {
        RunResult rr = run(prog, g, inputs, opt);
        out.level.resize(g.n());
        for (NodeId v = 0; v < g.n(); ++v) {
            out.level[v] = group[v] < 0 ? 0 : static_cast<int>(rr.outputs[v][0]);
            out.h = std::max(out.h, out.level[v]);
        }
        out.metrics = rr.metrics;
    } catch (const StallError& e) {
        if (stall_is_internal_error)
            throw InternalContradiction(std::string("level peeling stalled: ") + e.what());
        throw PreconditionError("level peeling stalled (bound below the graph's density): " +
                                std::to_string(e.unfinished) + " nodes stuck");
    }
    return out;
}

HPartitionResult generalized_h_partition(const Graph& g, const Orientation& o, const Rat& epsilon,
                                         const RunOptions& opt) {
    Rat threshold = epsilon.plus_int(2);
    std::vector<long long> group(g.n(), 0);
    std::vector<long long> beta(g.n());
    for (NodeId v = 0; v < g.n(); ++v) beta[v] = o.out_degree(v);
    GroupedHPartition got = h_partition_grouped(g, group, beta, threshold, opt, true);
    HPartitionResult res;
    res.partition.level = std::move(got.level);
    res.partition.h = got.h;
    res.partition.alpha = threshold;
    res.partition.beta_bound = std::move(beta);
    res.metrics = got.metrics;
    res.metrics.per_phase.push_back({"hpartition", res.metrics.rounds});
    return res;
}

HPartitionResult h_partition_fixed_bound(const Graph& g, long long a, const Rat& epsilon,
                                         const RunOptions& opt) {
    if (a < 1) throw PreconditionError("h_partition_fixed_bound: a >= 1 required");
    Rat threshold = epsilon.plus_int(2);
    std::vector<long long> group(g.n(), 0);
    std::vector<long long> beta(g.n(), a);
    GroupedHPartition got = h_partition_grouped(g, group, beta, threshold, opt, false);
    HPartitionResult res;
    res.partition.level = std::move(got.level);
    res.partition.h = got.h;
    res.partition.alpha = threshold;
    res.partition.beta_bound = std::move(beta);
    res.metrics = got.metrics;
    res.metrics.per_phase.push_back({"hpartition", res.metrics.rounds});
    return res;
}

} // namespace dcolor
