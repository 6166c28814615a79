#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "wstream/graph.hpp"
#include "wstream/partition_state.hpp"
#include "wstream/rng.hpp"
#include "wstream/stream_window.hpp"

namespace wstream {

// Per-partition tally of edges from the candidate vertex and from the
// buffered vertices into already-assigned vertices. Ineligible partitions
// carry a zero entry with eligible=false.
struct GreedyScore {
    struct Entry {
        std::uint64_t candidate_edges = 0;
        std::uint64_t buffered_edges = 0;
        std::uint64_t total = 0;
        bool eligible = false;
    };
    std::vector<Entry> per_partition; // length k
};

struct PartitionerConfig {
    PartitionIndex k = 2;
    std::size_t window = 100;
    std::uint64_t slack = 100;
    std::uint64_t seed = 1;
    bool co_assign = false;
    StreamOrder order = StreamOrder::as_read();
};

struct RunStats {
    double elapsed_seconds = 0.0;
    std::uint64_t assigned = 0;
};

// Fired at every greedy decision, before the assignment is applied. Used by
// the oracle-equivalence tests.
struct ChoiceTrace {
    const PartitionState& state;
    const VertexRecord& vertex;
    const std::vector<VertexRecord>& buffered;
    const std::vector<PartitionIndex>& eligible;
    const GreedyScore& score;
    PartitionIndex chosen;
};
using ChoiceObserver = std::function<void(const ChoiceTrace&)>;

// Fired after each completed step (assignments applied, window refilled).
using StepObserver = std::function<void(const PartitionState&)>;

// All partitions, minus the max-load ones while the balance gate is tripped.
// Never empty: the gate can only trip when some partition is below max.
std::vector<PartitionIndex> eligible_partitions(const PartitionState& state);

// Per-partition candidate/buffered edge tallies over the eligible set.
GreedyScore greedy_score(const PartitionState& state, const VertexRecord& candidate,
                         const std::vector<VertexRecord>& buffered,
                         const std::vector<PartitionIndex>& eligible);

// Argmax of the combined tally. Ties (including the all-zero fallback) go to
// the minimum-load partition among the tied set; residual load ties break
// uniformly at random.
PartitionIndex greedy_choose(const PartitionState& state, const VertexRecord& candidate,
                             const std::vector<VertexRecord>& buffered,
                             const std::vector<PartitionIndex>& eligible, Rng& rng,
                             const ChoiceObserver& observer = {});

// One dispatch step: assign the window's candidate (and, in co-assign mode,
// its buffered neighbors), pop it, refill the window from the stream.
void step(PartitionState& state, StreamWindow& window, VertexStream& stream, Rng& rng,
          const PartitionerConfig& config, const ChoiceObserver& on_choice = {});

// Full one-pass run over a graph. Deterministic for a fixed (graph, config).
std::pair<PartitionState, RunStats> run(const AdjacencyGraph& graph,
                                        const PartitionerConfig& config,
                                        const ChoiceObserver& on_choice = {},
                                        const StepObserver& on_step = {});

} // namespace wstream
