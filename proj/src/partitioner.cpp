#include "wstream/partitioner.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "wstream/errors.hpp"

namespace wstream {

std::vector<PartitionIndex> eligible_partitions(const PartitionState& state) {
    std::vector<PartitionIndex> all(state.k());
    for (PartitionIndex p = 0; p < state.k(); ++p) {
        all[p] = p;
    }
    if (!state.imbalance_exceeded()) {
        return all;
    }
    const std::vector<PartitionIndex> excluded = state.max_load_partitions();
    std::vector<PartitionIndex> out;
    out.reserve(all.size());
    std::set_difference(all.begin(), all.end(), excluded.begin(), excluded.end(),
                        std::back_inserter(out));
    return out;
}

GreedyScore greedy_score(const PartitionState& state, const VertexRecord& candidate,
                         const std::vector<VertexRecord>& buffered,
                         const std::vector<PartitionIndex>& eligible) {
    if (eligible.empty()) {
        throw ConfigError("eligible partition set is empty");
    }
    const std::vector<std::uint64_t> candidate_counts =
        state.assigned_counts(candidate.neighbors);
    std::vector<std::uint64_t> buffered_counts(state.k(), 0);
    for (const VertexRecord& b : buffered) {
        const std::vector<std::uint64_t> counts = state.assigned_counts(b.neighbors);
        for (PartitionIndex p = 0; p < state.k(); ++p) {
            buffered_counts[p] += counts[p];
        }
    }
    GreedyScore score;
    score.per_partition.resize(state.k());
    for (const PartitionIndex p : eligible) {
        GreedyScore::Entry& entry = score.per_partition[p];
        entry.candidate_edges = candidate_counts[p];
        entry.buffered_edges = buffered_counts[p];
        entry.total = entry.candidate_edges + entry.buffered_edges;
        entry.eligible = true;
    }
    return score;
}

namespace {

PartitionIndex pick_from_score(const PartitionState& state, const GreedyScore& score,
                               const std::vector<PartitionIndex>& eligible, Rng& rng) {
    std::uint64_t best = 0;
    for (const PartitionIndex p : eligible) {
        best = std::max(best, score.per_partition[p].total);
    }
    std::vector<PartitionIndex> tied;
    for (const PartitionIndex p : eligible) {
        if (score.per_partition[p].total == best) {
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

} // namespace

PartitionIndex greedy_choose(const PartitionState& state, const VertexRecord& candidate,
                             const std::vector<VertexRecord>& buffered,
                             const std::vector<PartitionIndex>& eligible, Rng& rng,
                             const ChoiceObserver& observer) {
    const GreedyScore score = greedy_score(state, candidate, buffered, eligible);
    const PartitionIndex chosen = pick_from_score(state, score, eligible, rng);
    if (observer) {
        observer(ChoiceTrace{state, candidate, buffered, eligible, score, chosen});
    }
    return chosen;
}

void step(PartitionState& state, StreamWindow& window, VertexStream& stream, Rng& rng,
          const PartitionerConfig& config, const ChoiceObserver& on_choice) {
    if (window.empty()) {
        throw StateError("stream window is empty");
    }
    const VertexRecord candidate = window.candidate();
    const std::vector<VertexRecord> buffered = window.buffered_neighbors(candidate);

    PartitionIndex target;
    if (state.size() == 0) {
        // All partitions empty: the very first vertex lands uniformly at random.
        target = static_cast<PartitionIndex>(rng.next_below(state.k()));
    } else {
        target = greedy_choose(state, candidate, buffered,
                               eligible_partitions(state), rng, on_choice);
    }
    state.assign(candidate.id, target);

    if (config.co_assign) {
        for (const VertexRecord& b : buffered) {
            const std::vector<PartitionIndex> eligible = eligible_partitions(state);
            PartitionIndex p;
            if (std::binary_search(eligible.begin(), eligible.end(), target)) {
                p = target;
            } else {
                // Gate closed the target; the buffered vertex gets its own choice.
                p = greedy_choose(state, b, window.buffered_neighbors(b), eligible,
                                  rng, on_choice);
            }
            state.assign(b.id, p);
            window.remove_by_id(b.id);
        }
    }

    window.pop_candidate();
    window.fill(stream);
}

std::pair<PartitionState, RunStats> run(const AdjacencyGraph& graph,
                                        const PartitionerConfig& config,
                                        const ChoiceObserver& on_choice,
                                        const StepObserver& on_step) {
    const auto start = std::chrono::steady_clock::now();

    VertexStream stream = make_stream(graph, config.order);
    PartitionState state(config.k, config.slack);
    StreamWindow window(config.window);
    Rng rng(config.seed);

    window.fill(stream);
    while (!window.empty()) {
        step(state, window, stream, rng, config, on_choice);
        if (on_step) {
            on_step(state);
        }
    }

    const auto end = std::chrono::steady_clock::now();
    RunStats stats;
    stats.elapsed_seconds = std::chrono::duration<double>(end - start).count();
    stats.assigned = state.size();
    return {std::move(state), stats};
}

} // namespace wstream
