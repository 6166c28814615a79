#include "wstream/metrics.hpp"

#include <cmath>

#include "wstream/errors.hpp"

namespace wstream {

std::string algorithm_name(Algorithm algo) {
    switch (algo) {
    case Algorithm::wstream: return "wstream";
    case Algorithm::ldg: return "ldg";
    case Algorithm::hashing: return "hashing";
    }
    throw ConfigError("unknown algorithm");
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "wstream") return Algorithm::wstream;
    if (name == "ldg") return Algorithm::ldg;
    if (name == "hashing") return Algorithm::hashing;
    throw ConfigError("unknown algorithm '" + name + "'");
}

std::pair<std::uint64_t, double> edge_cut(const AdjacencyGraph& graph,
                                          const PartitionState& state) {
    std::uint64_t cut = 0;
    for (const VertexId u : graph.vertices()) {
        const auto pu = state.partition_of(u);
        if (!pu) {
            throw DataError("vertex " + std::to_string(u) + " is unassigned");
        }
        for (const VertexId v : graph.neighbors(u)) {
            if (v <= u) {
                continue; // each undirected edge counted once
            }
            const auto pv = state.partition_of(v);
            if (!pv) {
                throw DataError("vertex " + std::to_string(v) + " is unassigned");
            }
            if (*pu != *pv) {
                ++cut;
            }
        }
    }
    const double ratio =
        graph.m() == 0 ? 0.0 : static_cast<double>(cut) / static_cast<double>(graph.m());
    return {cut, ratio};
}

double load_imbalance(const std::vector<std::uint64_t>& loads) {
    if (loads.empty()) {
        throw ConfigError("loads vector is empty");
    }
    double mean = 0.0;
    for (const std::uint64_t load : loads) {
        mean += static_cast<double>(load);
    }
    mean /= static_cast<double>(loads.size());
    double sum_sq = 0.0;
    for (const std::uint64_t load : loads) {
        const double dev = static_cast<double>(load) - mean;
        sum_sq += dev * dev;
    }
    return std::sqrt(sum_sq / static_cast<double>(loads.size()));
}

std::pair<PartitionState, QualityReport> measure_run_with_state(
    const AdjacencyGraph& graph, const RunSpec& spec) {
    PartitionState state(spec.k, spec.slack);
    RunStats stats;
    if (spec.algorithm == Algorithm::wstream) {
        PartitionerConfig config;
        config.k = spec.k;
        config.window = spec.window;
        config.slack = spec.slack;
        config.seed = spec.seed;
        config.co_assign = spec.co_assign;
        config.order = spec.order;
        std::tie(state, stats) = run(graph, config);
    } else {
        LdgConfig config;
        config.k = spec.k;
        config.epsilon = spec.epsilon;
        config.seed = spec.seed;
        config.order = spec.order;
        const BaselineAlgo algo = spec.algorithm == Algorithm::ldg
                                      ? BaselineAlgo::ldg
                                      : BaselineAlgo::hashing;
        std::tie(state, stats) = run_baseline(graph, algo, config);
    }

    QualityReport report;
    std::tie(report.cut_edges, report.edge_cut_ratio) = edge_cut(graph, state);
    report.loads = state.loads();
    report.load_imbalance = load_imbalance(report.loads);
    report.elapsed_seconds = stats.elapsed_seconds;
    return {std::move(state), report};
}

QualityReport measure_run(const AdjacencyGraph& graph, const RunSpec& spec) {
    return measure_run_with_state(graph, spec).second;
}

} // namespace wstream
