#pragma once

#include "dcolor/graph.hpp"
#include "dcolor/types.hpp"

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dcolor {

// A message is a sequence of unsigned values. Canonical bit cost of a
// non-empty message: 8 bits of length header plus, per value, a 6-bit width
// descriptor and the value's minimal binary width. Empty messages are never
// put on the wire and cost nothing.
using Message = std::vector<std::uint64_t>;

long long payload_bits(const Message& m);

enum class Mode { Local, Congest };

struct PhaseMetrics {
    std::string label;
    long long rounds = 0;
};

struct RunMetrics {
    long long rounds = 0;
    long long messages_sent = 0;
    long long max_payload_bits = 0;
    std::vector<PhaseMetrics> per_phase;

    void absorb(const RunMetrics& other, const std::string& label);
    long long phase_rounds(const std::string& label_substr) const;  // sums labels containing it
};

// Default CONGEST budget: generous constant times (log n + log C + const),
// so genuinely super-logarithmic payloads still trip it.
long long default_congest_budget(long long n, long long space_size);

struct RunOptions {
    Mode mode = Mode::Local;
    long long budget_bits = 0;       // 0 in Congest mode = use default for n, space 2
    long long max_rounds = 100'000'000;
    bool emulated = false;           // skip Congest enforcement, move-deliver payloads
    long long space_size = 2;        // feeds the default budget
};

struct CongestBudgetExceeded : std::runtime_error {
    long long round, from, to, bits, budget;
    CongestBudgetExceeded(long long round_, long long from_, long long to_, long long bits_, long long budget_)
        : std::runtime_error("congest budget exceeded at round " + std::to_string(round_) + " on edge (" +
                             std::to_string(from_) + "," + std::to_string(to_) + "): " + std::to_string(bits_) +
                             " > " + std::to_string(budget_) + " bits"),
          round(round_), from(from_), to(to_), bits(bits_), budget(budget_) {}
};

struct RoundTimeout : std::runtime_error {
    std::vector<std::vector<long long>> partial_outputs;
    explicit RoundTimeout(long long max_rounds, std::vector<std::vector<long long>> partial)
        : std::runtime_error("max_rounds (" + std::to_string(max_rounds) + ") exhausted with unfinished nodes"),
          partial_outputs(std::move(partial)) {}
};

// No node is scheduled to act, no message is in flight, yet nodes are
// unfinished: the program can make no further progress.
struct StallError : std::runtime_error {
    long long unfinished;
    StallError(long long round, long long unfinished_)
        : std::runtime_error("stalled at round " + std::to_string(round) + " with " +
                             std::to_string(unfinished_) + " unfinished nodes"),
          unfinished(unfinished_) {}
};

class NodeContext {
public:
    virtual ~NodeContext() = default;
    virtual long long round() const = 0;
    virtual int ports() const = 0;                       // = degree
    virtual NodeId neighbor(int port) const = 0;
    virtual const Message& in(int port) const = 0;       // empty if nothing arrived
    virtual void send(int port, Message m) = 0;
    virtual void broadcast(const Message& m) = 0;
    // Final output; after this the node sends nothing in later rounds.
    virtual void finish(std::vector<long long> out) = 0;
    // Next round this node must be stepped even without incoming messages.
    // A node is always stepped when a message arrives for it.
    virtual void wake_at(long long round) = 0;
};

// Per-node state machine. step() must be a pure function of the node's own
// state and the context (no shared mutable data, no ambient randomness);
// the engine steps nodes sequentially in id order, and correctness must not
// depend on that order.
class NodeAgent {
public:
    virtual ~NodeAgent() = default;
    virtual void step(NodeContext& ctx) = 0;
};

struct NodeInit {
    NodeId id;
    std::span<const NodeId> neighbors;
    std::span<const long long> input;
};

class Program {
public:
    virtual ~Program() = default;
    virtual std::unique_ptr<NodeAgent> spawn(const NodeInit& init) const = 0;
};

struct RunResult {
    std::vector<std::vector<long long>> outputs;
    RunMetrics metrics;
};

// Synchronous execution: messages sent in round r are visible exactly in
// round r+1. Runs until every node finished or max_rounds is hit.
// Deterministic: identical inputs give bit-identical outputs and metrics.
RunResult run(const Program& prog, const Graph& g,
              const std::vector<std::vector<long long>>& inputs, const RunOptions& opt);

// Same contract as run() in Local mode; delivers payloads without the
// per-message buffering copy and skips budget enforcement. Outputs, round
// counts and message counts are bit-identical to run().
RunResult run_emulated(const Program& prog, const Graph& g,
                       const std::vector<std::vector<long long>>& inputs, RunOptions opt);

} // namespace dcolor
