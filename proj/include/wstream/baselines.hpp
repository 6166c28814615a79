#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "wstream/graph.hpp"
#include "wstream/partition_state.hpp"
#include "wstream/partitioner.hpp"
#include "wstream/rng.hpp"

namespace wstream {

enum class BaselineAlgo { ldg, hashing };

struct LdgConfig {
    PartitionIndex k = 2;
    double epsilon = 0.0; // fractional capacity slack; C = ceil((1+eps)*ceil(n/k))
    std::uint64_t seed = 1;
    StreamOrder order = StreamOrder::as_read();
    bool hash_mix = true; // hashing baseline only; false = plain v mod k
};

struct BaselineChoiceTrace {
    const PartitionState& state;
    const VertexRecord& vertex;
    CapacityBound capacity;
    PartitionIndex chosen;
};
using BaselineChoiceObserver = std::function<void(const BaselineChoiceTrace&)>;

// Linear deterministic greedy: argmax over non-full partitions of
// |N(v) ∩ P_i| * (1 - loads[i]/C), compared exactly as the integer
// |N(v) ∩ P_i| * (C - loads[i]). Ties go to minimum load, then a seeded
// uniform draw.
PartitionIndex ldg_choose(const PartitionState& state, const VertexRecord& v,
                          const CapacityBound& capacity, Rng& rng);

// Stateless uniform baseline: (mix64(v) mod k), or plain (v mod k) with the
// avalanche mix disabled.
PartitionIndex hash_choose(VertexId v, PartitionIndex k, bool mix = true);

std::pair<PartitionState, RunStats> run_baseline(
    const AdjacencyGraph& graph, BaselineAlgo algo, const LdgConfig& config,
    const BaselineChoiceObserver& on_choice = {});

} // namespace wstream
