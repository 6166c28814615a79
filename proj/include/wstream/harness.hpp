#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wstream/metrics.hpp"

namespace wstream {

// Cross-product experiment description. Every combination of the value sets
// below is one run; the order key selects the stream order for all of them.
struct ExperimentPlan {
    std::vector<std::string> datasets;
    std::vector<Algorithm> algorithms{Algorithm::wstream};
    std::vector<PartitionIndex> ks{2};
    std::vector<std::size_t> windows{100};
    std::vector<std::uint64_t> slacks{100};
    std::vector<double> epsilons{0.0};
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    StreamOrder::Kind order = StreamOrder::Kind::uniform_random;
    bool co_assign = false;

    std::size_t run_count() const;
};

struct ResultRow {
    std::string dataset;
    std::string algorithm;
    PartitionIndex k = 0;
    std::size_t window = 0;
    std::uint64_t slack = 0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::string order;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t cut_edges = 0;
    double edge_cut_ratio = 0.0;
    double load_imbalance = 0.0;
    double elapsed_seconds = 0.0;
};

// Fixed CSV column list, in ResultRow field order.
extern const char* const kResultCsvHeader;

// Plan files are line-oriented "key=value" with comma-separated value sets;
// '#' starts a comment. Keys: dataset, algo, k, window, slack, epsilon,
// seed, order, co_assign. Repeated keys append.
ExperimentPlan parse_plan(std::istream& text);
ExperimentPlan parse_plan_file(const std::string& path);

// Executes every run in the cross-product, in plan order. Unreadable
// datasets produce one line on the diagnostics stream and are skipped;
// the remaining datasets still run.
std::vector<ResultRow> run_plan(const ExperimentPlan& plan, std::ostream& diagnostics);

// RFC-4180-style CSV, rows stable-sorted by (dataset, algorithm, k, window,
// slack, seed). Ratios carry six decimal places, '.' separator, LF endings.
void emit_csv(std::vector<ResultRow> rows, std::ostream& sink);

// Reads a CSV produced by emit_csv (or an externally produced file with the
// same header), for merging externally computed results into one table.
std::vector<ResultRow> parse_result_csv(std::istream& source);

ResultRow make_row(const std::string& dataset, const AdjacencyGraph& graph,
                   const RunSpec& spec, const QualityReport& report);

} // namespace wstream
