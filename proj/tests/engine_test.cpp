#include <doctest.h>

#include "dcolor/engine.hpp"
#include "dcolor/graph.hpp"

using namespace dcolor;

namespace {

// Finishes immediately with its own id; no communication.
class OutputIdAgent final : public NodeAgent {
public:
    explicit OutputIdAgent(NodeId id) : id_(id) {}
    void step(NodeContext& ctx) override { ctx.finish({id_}); }

private:
    NodeId id_;
};

class OutputIdProgram final : public Program {
public:
    std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const override {
        return std::make_unique<OutputIdAgent>(init.id);
    }
};

// Sends the id, then outputs the largest id heard (or its own if isolated).
class MaxNbrAgent final : public NodeAgent {
public:
    explicit MaxNbrAgent(NodeId id) : id_(id) {}
    void step(NodeContext& ctx) override {
        if (ctx.round() == 1) {
            if (ctx.ports() == 0) {
                ctx.finish({id_});
                return;
            }
            ctx.broadcast({static_cast<std::uint64_t>(id_)});
            ctx.wake_at(2);
            return;
        }
        long long best = -1;
        for (int k = 0; k < ctx.ports(); ++k)
            if (!ctx.in(k).empty()) best = std::max(best, static_cast<long long>(ctx.in(k)[0]));
        ctx.finish({best < 0 ? id_ : best});
    }

private:
    NodeId id_;
};

class MaxNbrProgram final : public Program {
public:
    std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const override {
        return std::make_unique<MaxNbrAgent>(init.id);
    }
};

// Never finishes; used to exercise the timeout path.
class SpinAgent final : public NodeAgent {
public:
    void step(NodeContext& ctx) override { ctx.wake_at(ctx.round() + 1); }
};

class SpinProgram final : public Program {
public:
    std::unique_ptr<NodeAgent> spawn(const NodeInit&) const override {
        return std::make_unique<SpinAgent>();
    }
};

// Sends a deliberately wide message.
class FatAgent final : public NodeAgent {
public:
    void step(NodeContext& ctx) override {
        Message m(64, 0xFFFFFFFFFFFFFFFFULL);
        ctx.broadcast(m);
        ctx.finish({});
    }
};

class FatProgram final : public Program {
public:
    std::unique_ptr<NodeAgent> spawn(const NodeInit&) const override {
        return std::make_unique<FatAgent>();
    }
};

} // namespace

TEST_CASE("payload bit accounting") {
    CHECK(payload_bits({}) == 0);
    CHECK(payload_bits({0}) == 8 + 6 + 1);
    CHECK(payload_bits({7}) == 8 + 6 + 3);
    CHECK(payload_bits({1, 255}) == 8 + 6 + 1 + 6 + 8);
}

TEST_CASE("trivial programs") {
    Graph ring = make_ring(8);
    OutputIdProgram idp;
    RunResult r = run(idp, ring, {}, {});
    CHECK(r.metrics.rounds == 1);
    CHECK(r.metrics.messages_sent == 0);
    for (NodeId v = 0; v < 8; ++v) CHECK(r.outputs[v] == std::vector<long long>{v});

    Graph path = make_path(3);
    MaxNbrProgram mp;
    RunResult m = run(mp, path, {}, {});
    CHECK(m.metrics.rounds == 2);
    CHECK(m.outputs[0] == std::vector<long long>{1});
    CHECK(m.outputs[1] == std::vector<long long>{2});
    CHECK(m.outputs[2] == std::vector<long long>{1});
}

TEST_CASE("determinism and mode equivalence") {
    Graph g = make_gnp(40, 0.12, 5);
    MaxNbrProgram mp;
    RunResult a = run(mp, g, {}, {});
    RunResult b = run(mp, g, {}, {});
    CHECK(a.outputs == b.outputs);
    CHECK(a.metrics.rounds == b.metrics.rounds);
    CHECK(a.metrics.messages_sent == b.metrics.messages_sent);

    RunResult c = run_emulated(mp, g, {}, {});
    CHECK(a.outputs == c.outputs);
    CHECK(a.metrics.rounds == c.metrics.rounds);
    CHECK(a.metrics.messages_sent == c.metrics.messages_sent);

    // Single-node graph.
    Graph one = Graph::build(1, {});
    RunResult ra = run(mp, one, {}, {});
    RunResult rb = run_emulated(mp, one, {}, {});
    CHECK(ra.outputs == rb.outputs);
    CHECK(ra.metrics.rounds == rb.metrics.rounds);
}

TEST_CASE("timeout carries partial outputs") {
    Graph path = make_path(4);
    SpinProgram sp;
    RunOptions opt;
    opt.max_rounds = 10;
    CHECK_THROWS_AS(run(sp, path, {}, opt), RoundTimeout);
}

TEST_CASE("congest budget enforcement") {
    Graph path = make_path(2);
    FatProgram fp;
    RunOptions opt;
    opt.mode = Mode::Congest;
    opt.budget_bits = 64;
    CHECK_THROWS_AS(run(fp, path, {}, opt), CongestBudgetExceeded);
    opt.mode = Mode::Local;
    CHECK_NOTHROW(run(fp, path, {}, opt));
    // Emulated ignores the budget by contract.
    opt.mode = Mode::Congest;
    CHECK_NOTHROW(run_emulated(fp, path, {}, opt));
}

TEST_CASE("stall detection") {
    // An agent that waits for a message that never comes.
    class WaitAgent final : public NodeAgent {
    public:
        void step(NodeContext&) override {}
    };
    class WaitProgram final : public Program {
    public:
        std::unique_ptr<NodeAgent> spawn(const NodeInit&) const override {
            return std::make_unique<WaitAgent>();
        }
    };
    Graph g = make_path(3);
    WaitProgram wp;
    CHECK_THROWS_AS(run(wp, g, {}, {}), StallError);
}

TEST_CASE("default congest budget formula") {
    CHECK(default_congest_budget(64, 2) == 32 * (6 + 1 + 8));
    CHECK(default_congest_budget(1024, 1 << 20) == 32 * (10 + 20 + 8));
}
