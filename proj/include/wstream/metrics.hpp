#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wstream/baselines.hpp"
#include "wstream/graph.hpp"
#include "wstream/partition_state.hpp"
#include "wstream/partitioner.hpp"

namespace wstream {

enum class Algorithm { wstream, ldg, hashing };

std::string algorithm_name(Algorithm algo);
Algorithm algorithm_from_name(const std::string& name);

struct QualityReport {
    std::uint64_t cut_edges = 0;
    double edge_cut_ratio = 0.0;   // cut_edges / m, 0 when m = 0
    double load_imbalance = 0.0;   // population std deviation of loads
    std::vector<std::uint64_t> loads;
    double elapsed_seconds = 0.0;
};

// Counts each undirected edge once; an edge is cut iff its endpoints sit in
// different partitions. Throws DataError naming the first unassigned vertex.
std::pair<std::uint64_t, double> edge_cut(const AdjacencyGraph& graph,
                                          const PartitionState& state);

// Population standard deviation: sqrt(sum (load - mean)^2 / count).
double load_imbalance(const std::vector<std::uint64_t>& loads);

// One run under one config: algorithm choice plus every knob any of the
// three partitioners needs.
struct RunSpec {
    Algorithm algorithm = Algorithm::wstream;
    PartitionIndex k = 2;
    std::size_t window = 100;
    std::uint64_t slack = 100;
    double epsilon = 0.0;
    std::uint64_t seed = 1;
    bool co_assign = false;
    StreamOrder order = StreamOrder::as_read();
};

// Executes the run and computes the report on the final state. Wall time
// spans stream creation through the last assignment; metrics are post-hoc.
QualityReport measure_run(const AdjacencyGraph& graph, const RunSpec& spec);

// Run + final state, for callers that also persist metadata.
std::pair<PartitionState, QualityReport> measure_run_with_state(
    const AdjacencyGraph& graph, const RunSpec& spec);

} // namespace wstream
