#include "dcolor/engine.hpp"

#include <algorithm>
#include <queue>

namespace dcolor {

long long payload_bits(const Message& m) {
    if (m.empty()) return 0;
    long long bits = 8;
    for (std::uint64_t v : m) bits += 6 + std::max(1, static_cast<int>(std::bit_width(v)));
    return bits;
}

void RunMetrics::absorb(const RunMetrics& other, const std::string& label) {
    rounds += other.rounds;
    messages_sent += other.messages_sent;
    max_payload_bits = std::max(max_payload_bits, other.max_payload_bits);
    per_phase.push_back({label, other.rounds});
}

long long RunMetrics::phase_rounds(const std::string& label_substr) const {
    long long total = 0;
    for (const auto& p : per_phase)
        if (p.label.find(label_substr) != std::string::npos) total += p.rounds;
    return total;
}

long long default_congest_budget(long long n, long long space_size) {
    return 32LL * (ceil_log2(std::max(n, 2LL)) + ceil_log2(std::max(space_size, 2LL)) + 8);
}

namespace {

constexpr long long kNever = std::numeric_limits<long long>::max();

struct NodeSlot {
    std::vector<Message> inbox;    // indexed by port
    std::vector<Message> outbox;
    bool has_inbox = false;
    bool finished = false;
    long long wake = 1;
    std::vector<long long> output;
    std::unique_ptr<NodeAgent> agent;
};

class ContextImpl final : public NodeContext {
public:
    ContextImpl(std::span<const NodeId> nbrs, NodeSlot* slot, long long round)
        : nbrs_(nbrs), slot_(slot), round_(round) {}

    long long round() const override { return round_; }
    int ports() const override { return static_cast<int>(nbrs_.size()); }
    NodeId neighbor(int port) const override { return nbrs_[port]; }
    const Message& in(int port) const override { return slot_->inbox[port]; }
    void send(int port, Message m) override { slot_->outbox[port] = std::move(m); }
    void broadcast(const Message& m) override {
        for (auto& o : slot_->outbox) o = m;
    }
    void finish(std::vector<long long> out) override {
        slot_->finished = true;
        slot_->output = std::move(out);
    }
    void wake_at(long long r) override {
        if (r <= round_) throw std::logic_error("wake_at: round must be in the future");
        slot_->wake = r;
    }

private:
    std::span<const NodeId> nbrs_;
    NodeSlot* slot_;
    long long round_;
};

RunResult run_core(const Program& prog, const Graph& g,
                   const std::vector<std::vector<long long>>& inputs, const RunOptions& opt) {
    const int n = g.n();
    if (!inputs.empty() && static_cast<int>(inputs.size()) != n)
        throw PreconditionError("engine: inputs size != n");
    if (opt.max_rounds < 1) throw PreconditionError("engine: max_rounds >= 1 required");

    long long budget = opt.budget_bits > 0 ? opt.budget_bits
                                           : default_congest_budget(n, opt.space_size);
    const bool enforce = (opt.mode == Mode::Congest) && !opt.emulated;

    // Port of v as seen from its neighbor: rev[v][k] is the port index of v
    // in the adjacency list of g.neighbors(v)[k].
    std::vector<std::vector<int>> rev(n);
    for (int v = 0; v < n; ++v) {
        auto nbrs = g.neighbors(v);
        rev[v].resize(nbrs.size());
        for (size_t k = 0; k < nbrs.size(); ++k) {
            auto un = g.neighbors(nbrs[k]);
            rev[v][k] = static_cast<int>(std::lower_bound(un.begin(), un.end(), v) - un.begin());
        }
    }

    std::vector<NodeSlot> slots(n);
    static const std::vector<long long> kEmptyInput;
    for (int v = 0; v < n; ++v) {
        slots[v].inbox.resize(g.degree(v));
        slots[v].outbox.resize(g.degree(v));
        std::span<const long long> in = inputs.empty() ? std::span<const long long>(kEmptyInput)
                                                       : std::span<const long long>(inputs[v]);
        slots[v].agent = prog.spawn(NodeInit{v, g.neighbors(v), in});
    }

    RunMetrics metrics;
    long long unfinished = n;
    // Lazily-validated wake queue; stale entries are skipped on pop.
    std::priority_queue<std::pair<long long, int>, std::vector<std::pair<long long, int>>,
                        std::greater<>> wakes;
    for (int v = 0; v < n; ++v) wakes.push({1, v});
    std::vector<int> inbox_nodes;       // nodes with a pending nonempty inbox
    std::vector<int> step_set;
    long long round = 0;

    while (unfinished > 0) {
        long long next = kNever;
        while (!wakes.empty()) {
            auto [w, v] = wakes.top();
            if (slots[v].finished || slots[v].wake != w) { wakes.pop(); continue; }
            next = w;
            break;
        }
        if (!inbox_nodes.empty()) next = std::min(next, round + 1);
        if (next == kNever) throw StallError(round, unfinished);
        round = next;
        if (round > opt.max_rounds) {
            std::vector<std::vector<long long>> partial(n);
            for (int v = 0; v < n; ++v) partial[v] = slots[v].output;
            throw RoundTimeout(opt.max_rounds, std::move(partial));
        }

        step_set.clear();
        for (int v : inbox_nodes)
            if (!slots[v].finished) step_set.push_back(v);
        inbox_nodes.clear();
        while (!wakes.empty() && wakes.top().first <= round) {
            auto [w, v] = wakes.top();
            wakes.pop();
            if (slots[v].finished || slots[v].wake != w) continue;
            slots[v].wake = kNever;
            step_set.push_back(v);
        }
        std::sort(step_set.begin(), step_set.end());
        step_set.erase(std::unique(step_set.begin(), step_set.end()), step_set.end());

        // Step phase: all nodes observe the same pre-round state.
        for (int v : step_set) {
            NodeSlot& s = slots[v];
            long long wake_before = s.wake;
            ContextImpl ctx(g.neighbors(v), &s, round);
            s.agent->step(ctx);
            if (s.finished) {
                unfinished--;
                s.agent.reset();
            } else if (s.wake != kNever && s.wake != wake_before) {
                wakes.push({s.wake, v});
            }
        }

        // Clear consumed mail before any new delivery lands.
        for (int v : step_set) {
            NodeSlot& s = slots[v];
            if (s.has_inbox) {
                s.has_inbox = false;
                for (auto& msg : s.inbox) msg.clear();
            }
        }

        // Delivery phase: round-r messages become visible at round r+1.
        for (int v : step_set) {
            NodeSlot& s = slots[v];
            auto nbrs = g.neighbors(v);
            for (size_t k = 0; k < s.outbox.size(); ++k) {
                Message& m = s.outbox[k];
                if (m.empty()) continue;
                long long bits = payload_bits(m);
                metrics.messages_sent++;
                metrics.max_payload_bits = std::max(metrics.max_payload_bits, bits);
                if (enforce && bits > budget)
                    throw CongestBudgetExceeded(round, v, nbrs[k], bits, budget);
                NodeSlot& dst = slots[nbrs[k]];
                if (!dst.finished) {
                    if (opt.emulated)
                        dst.inbox[rev[v][k]] = std::move(m);
                    else
                        dst.inbox[rev[v][k]] = m;
                    if (!dst.has_inbox) {
                        dst.has_inbox = true;
                        inbox_nodes.push_back(nbrs[k]);
                    }
                }
                m.clear();
            }
        }
        metrics.rounds = round;
    }

    RunResult res;
    res.outputs.resize(n);
    for (int v = 0; v < n; ++v) res.outputs[v] = std::move(slots[v].output);
    res.metrics = std::move(metrics);
    return res;
}

} // namespace

RunResult run(const Program& prog, const Graph& g,
              const std::vector<std::vector<long long>>& inputs, const RunOptions& opt) {
    return run_core(prog, g, inputs, opt);
}

RunResult run_emulated(const Program& prog, const Graph& g,
                       const std::vector<std::vector<long long>>& inputs, RunOptions opt) {
    opt.emulated = true;
    return run_core(prog, g, inputs, opt);
}

} // namespace dcolor
