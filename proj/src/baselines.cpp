#include "wstream/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "wstream/errors.hpp"

namespace wstream {

PartitionIndex ldg_choose(const PartitionState& state, const VertexRecord& v,
                          const CapacityBound& capacity, Rng& rng) {
    std::vector<PartitionIndex> eligible;
    for (PartitionIndex p = 0; p < state.k(); ++p) {
        if (state.loads()[p] < capacity.l_max) {
            eligible.push_back(p);
        }
    }
    if (eligible.empty()) {
        throw StateError("all partitions at capacity");
    }
    const std::vector<std::uint64_t> counts = state.assigned_counts(v.neighbors);

    // Same denominator C for every partition, so integer cross-scores
    // compare exactly.
    std::uint64_t best = 0;
    for (const PartitionIndex p : eligible) {
        best = std::max(best, counts[p] * (capacity.l_max - state.loads()[p]));
    }
    std::vector<PartitionIndex> tied;
    for (const PartitionIndex p : eligible) {
        if (counts[p] * (capacity.l_max - state.loads()[p]) == best) {
            tied.push_back(p);
        }
    }
    std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
    for (const PartitionIndex p : tied) {
        least = std::min(least, state.loads()[p]);
    }
    std::vector<PartitionIndex> lightest;
    for (const PartitionIndex p : tied) {
        if (state.loads()[p] == least) {
            lightest.push_back(p);
        }
    }
    if (lightest.size() == 1) {
        return lightest.front();
    }
    return lightest[static_cast<std::size_t>(rng.next_below(lightest.size()))];
}

PartitionIndex hash_choose(VertexId v, PartitionIndex k, bool mix) {
    if (k == 0) {
        throw ConfigError("partition count must be at least 1");
    }
    const std::uint64_t key = mix ? mix64(v) : v;
    return static_cast<PartitionIndex>(key % k);
}

std::pair<PartitionState, RunStats> run_baseline(
    const AdjacencyGraph& graph, BaselineAlgo algo, const LdgConfig& config,
    const BaselineChoiceObserver& on_choice) {
    const auto start = std::chrono::steady_clock::now();

    VertexStream stream = make_stream(graph, config.order);
    PartitionState state(config.k, 0);
    Rng rng(config.seed);
    const CapacityBound capacity =
        CapacityBound::compute(graph.n(), config.k, config.epsilon);

    while (auto record = stream.next()) {
        PartitionIndex p;
        if (algo == BaselineAlgo::ldg) {
            p = ldg_choose(state, *record, capacity, rng);
        } else {
            p = hash_choose(record->id, config.k, config.hash_mix);
        }
        if (on_choice) {
            on_choice(BaselineChoiceTrace{state, *record, capacity, p});
        }
        state.assign(record->id, p);
    }

    const auto end = std::chrono::steady_clock::now();
    RunStats stats;
    stats.elapsed_seconds = std::chrono::duration<double>(end - start).count();
    stats.assigned = state.size();
    return {std::move(state), stats};
}

} // namespace wstream
