#include <doctest.h>

#include "dcolor/engine.hpp"
#include "dcolor/graph.hpp"

#include <algorithm>

using namespace dcolor;

namespace {

// Straight-line reference executor: every unfinished agent is stepped every
// round; wake hints are ignored. Agents in this project are idempotent on
// unscheduled steps, so outputs and finishing rounds must match the
// scheduling engine exactly.
struct NaiveResult {
    std::vector<std::vector<long long>> outputs;
    long long rounds = 0;
    long long messages = 0;
};

class NaiveContext final : public NodeContext {
public:
    NaiveContext(NodeId id, std::span<const NodeId> nbrs, long long round,
                 const std::vector<Message>* inbox, std::vector<Message>* outbox, char* finished,
                 std::vector<long long>* output)
        : id_(id), nbrs_(nbrs), round_(round), inbox_(inbox), outbox_(outbox), finished_(finished),
          output_(output) {}

    long long round() const override { return round_; }
    int ports() const override { return static_cast<int>(nbrs_.size()); }
    NodeId neighbor(int port) const override { return nbrs_[port]; }
    const Message& in(int port) const override { return (*inbox_)[port]; }
    void send(int port, Message m) override { (*outbox_)[port] = std::move(m); }
    void broadcast(const Message& m) override {
        for (auto& o : *outbox_) o = m;
    }
    void finish(std::vector<long long> out) override {
        *finished_ = 1;
        *output_ = std::move(out);
    }
    void wake_at(long long) override {}

private:
    NodeId id_;
    std::span<const NodeId> nbrs_;
    long long round_;
    const std::vector<Message>* inbox_;
    std::vector<Message>* outbox_;
    char* finished_;
    std::vector<long long>* output_;
};

NaiveResult naive_run(const Program& prog, const Graph& g,
                      const std::vector<std::vector<long long>>& inputs, long long max_rounds) {
    const int n = g.n();
    std::vector<std::unique_ptr<NodeAgent>> agents(n);
    static const std::vector<long long> kEmpty;
    for (int v = 0; v < n; ++v) {
        std::span<const long long> in =
            inputs.empty() ? std::span<const long long>(kEmpty) : std::span<const long long>(inputs[v]);
        agents[v] = prog.spawn(NodeInit{v, g.neighbors(v), in});
    }
    std::vector<std::vector<Message>> inbox(n), next_inbox(n);
    std::vector<std::vector<Message>> outbox(n);
    for (int v = 0; v < n; ++v) {
        inbox[v].resize(g.degree(v));
        next_inbox[v].resize(g.degree(v));
        outbox[v].resize(g.degree(v));
    }
    std::vector<std::vector<int>> rev(n);
    for (int v = 0; v < n; ++v) {
        auto nbrs = g.neighbors(v);
        rev[v].resize(nbrs.size());
        for (size_t k = 0; k < nbrs.size(); ++k) {
            auto un = g.neighbors(nbrs[k]);
            rev[v][k] = static_cast<int>(std::lower_bound(un.begin(), un.end(), v) - un.begin());
        }
    }
    NaiveResult res;
    res.outputs.resize(n);
    std::vector<char> finished(n, 0);
    int left = n;
    for (long long round = 1; round <= max_rounds && left > 0; ++round) {
        for (int v = 0; v < n; ++v) {
            if (finished[v]) continue;
            NaiveContext ctx(v, g.neighbors(v), round, &inbox[v], &outbox[v], &finished[v],
                             &res.outputs[v]);
            agents[v]->step(ctx);
            if (finished[v]) {
                --left;
                res.rounds = round;
            }
        }
        for (int v = 0; v < n; ++v) {
            auto nbrs = g.neighbors(v);
            for (size_t k = 0; k < outbox[v].size(); ++k) {
                if (outbox[v][k].empty()) continue;
                res.messages++;
                if (!finished[nbrs[k]]) next_inbox[nbrs[k]][rev[v][k]] = std::move(outbox[v][k]);
                outbox[v][k].clear();
            }
        }
        std::swap(inbox, next_inbox);
        for (int v = 0; v < n; ++v)
            for (auto& m : next_inbox[v]) m.clear();
    }
    REQUIRE(left == 0);
    return res;
}

// A deliberately scheduling-heavy program: node v idles until round
// 2 + (id % 7) * stride, relays a token along increasing ids a configurable
// number of hops, and finishes when its countdown hits zero or a terminal
// token arrives. Exercises sparse wakes, message-driven steps, and long idle
// gaps in one program.
class SchedulerStressAgent final : public NodeAgent {
public:
    SchedulerStressAgent(const NodeInit& init) : id_(init.id) {
        stride_ = init.input.empty() ? 3 : init.input[0];
        hops_ = init.input.size() > 1 ? init.input[1] : 2;
    }

    void step(NodeContext& ctx) override {
        long long r = ctx.round();
        long long start = 2 + (id_ % 7) * stride_;
        // Absorb tokens.
        long long best_token = -1;
        for (int k = 0; k < ctx.ports(); ++k)
            if (!ctx.in(k).empty())
                best_token = std::max(best_token, static_cast<long long>(ctx.in(k)[0]));
        if (best_token >= 0) seen_ = std::max(seen_, best_token);

        if (r < start) {
            if (r == 1) ctx.wake_at(start);
            return;
        }
        if (!launched_) {
            launched_ = true;
            // Send a token upward: value counts remaining hops.
            for (int k = 0; k < ctx.ports(); ++k)
                if (ctx.neighbor(k) > id_) ctx.send(k, {static_cast<std::uint64_t>(hops_)});
            ctx.wake_at(start + 5 * stride_ + 1);
            return;
        }
        if (best_token > 0) {
            // Relay with one fewer hop.
            for (int k = 0; k < ctx.ports(); ++k)
                if (ctx.neighbor(k) > id_)
                    ctx.send(k, {static_cast<std::uint64_t>(best_token - 1)});
        }
        if (r >= start + 5 * stride_ + 1) ctx.finish({seen_, r});
    }

private:
    NodeId id_;
    long long stride_, hops_;
    long long seen_ = -1;
    bool launched_ = false;
};

class SchedulerStressProgram final : public Program {
public:
    std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const override {
        return std::make_unique<SchedulerStressAgent>(init);
    }
};

} // namespace

TEST_CASE("scheduling engine agrees with the naive reference executor") {
    std::vector<Graph> graphs = {make_ring(24), make_star(15), make_gnp(40, 0.12, 6),
                                 make_random_tree(30, 4), make_complete(7), Graph::build(1, {}),
                                 Graph::build(5, {})};
    SchedulerStressProgram prog;
    for (const Graph& g : graphs) {
        std::vector<std::vector<long long>> inputs(g.n());
        for (NodeId v = 0; v < g.n(); ++v) inputs[v] = {3 + (v % 4), 2 + (v % 3)};
        RunResult fast = run(prog, g, inputs, {});
        RunResult emul = run_emulated(prog, g, inputs, {});
        NaiveResult slow = naive_run(prog, g, inputs, 100000);
        CHECK(fast.outputs == slow.outputs);
        CHECK(fast.metrics.rounds == slow.rounds);
        CHECK(fast.metrics.messages_sent == slow.messages);
        CHECK(emul.outputs == slow.outputs);
        CHECK(emul.metrics.rounds == slow.rounds);
    }
}
