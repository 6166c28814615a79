// wstream: streaming graph partitioning experiment runner.
//
// Subcommands:
//   partition  one run of wstream/ldg/hashing over an edge-list file
//   sweep      cross-product experiment plan, CSV output
//   fetch      download + verify datasets listed in a manifest
//   metrics    recompute quality metrics from a graph + metadata file

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wstream/errors.hpp"
#include "wstream/fetch.hpp"
#include "wstream/harness.hpp"
#include "wstream/metrics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

wstream::StreamOrder order_from_flag(const std::string& order, std::uint64_t seed) {
    if (order == "as-read") {
        return wstream::StreamOrder::as_read();
    }
    return wstream::StreamOrder::uniform_random(seed);
}

struct PartitionArgs {
    std::string input;
    std::string algo = "wstream";
    std::uint32_t k = 2;
    std::size_t window = 100;
    std::uint64_t slack = 100;
    double epsilon = 0.0;
    std::uint64_t seed = 1;
    std::string order = "random";
    bool co_assign = false;
    std::string meta_out;
    std::string csv_out;
};

int cmd_partition(const PartitionArgs& args) {
    const wstream::AdjacencyGraph graph =
        wstream::build_adjacency(wstream::parse_edge_list_file(args.input));

    wstream::RunSpec spec;
    spec.algorithm = wstream::algorithm_from_name(args.algo);
    spec.k = args.k;
    spec.window = args.window;
    spec.slack = args.slack;
    spec.epsilon = args.epsilon;
    spec.seed = args.seed;
    spec.co_assign = args.co_assign;
    spec.order = order_from_flag(args.order, args.seed);

    const auto [state, report] = wstream::measure_run_with_state(graph, spec);

    std::cout << "dataset: " << args.input << '\n'
              << "algorithm: " << args.algo << '\n'
              << "n: " << graph.n() << '\n'
              << "m: " << graph.m() << '\n'
              << "cut_edges: " << report.cut_edges << '\n'
              << "edge_cut_ratio: " << report.edge_cut_ratio << '\n'
              << "load_imbalance: " << report.load_imbalance << '\n'
              << "elapsed_seconds: " << report.elapsed_seconds << '\n';

    if (!args.meta_out.empty()) {
        std::ofstream out(args.meta_out, std::ios::binary);
        if (!out) {
            throw wstream::IoError("cannot write " + args.meta_out);
        }
        state.persist(out);
    }
    if (!args.csv_out.empty()) {
        std::ofstream out(args.csv_out, std::ios::binary);
        if (!out) {
            throw wstream::IoError("cannot write " + args.csv_out);
        }
        wstream::emit_csv({wstream::make_row(args.input, graph, spec, report)}, out);
    }
    return kExitOk;
}

struct SweepArgs {
    std::string plan_file;
    std::vector<std::string> datasets;
    std::vector<std::string> algos;
    std::vector<std::uint32_t> ks;
    std::vector<std::size_t> windows;
    std::vector<std::uint64_t> slacks;
    std::vector<double> epsilons;
    std::vector<std::uint64_t> seeds;
    std::string order = "random";
    bool co_assign = false;
    std::string csv_out;
    std::string merge_csv;
};

int cmd_sweep(const SweepArgs& args) {
    wstream::ExperimentPlan plan;
    if (!args.plan_file.empty()) {
        plan = wstream::parse_plan_file(args.plan_file);
    } else {
        if (args.datasets.empty()) {
            throw wstream::ConfigError("sweep needs --plan or --input");
        }
        plan.datasets = args.datasets;
        if (!args.algos.empty()) {
            plan.algorithms.clear();
            for (const std::string& a : args.algos) {
                plan.algorithms.push_back(wstream::algorithm_from_name(a));
            }
        }
        if (!args.ks.empty()) plan.ks = args.ks;
        if (!args.windows.empty()) plan.windows = args.windows;
        if (!args.slacks.empty()) plan.slacks = args.slacks;
        if (!args.epsilons.empty()) plan.epsilons = args.epsilons;
        if (!args.seeds.empty()) plan.seeds = args.seeds;
        plan.order = args.order == "as-read" ? wstream::StreamOrder::Kind::as_read
                                             : wstream::StreamOrder::Kind::uniform_random;
        plan.co_assign = args.co_assign;
    }

    std::vector<wstream::ResultRow> rows = wstream::run_plan(plan, std::cerr);
    if (!args.merge_csv.empty()) {
        std::ifstream in(args.merge_csv, std::ios::binary);
        if (!in) {
            throw wstream::IoError("cannot open " + args.merge_csv);
        }
        const std::vector<wstream::ResultRow> merged = wstream::parse_result_csv(in);
        rows.insert(rows.end(), merged.begin(), merged.end());
    }

    if (args.csv_out.empty()) {
        wstream::emit_csv(std::move(rows), std::cout);
    } else {
        std::ofstream out(args.csv_out, std::ios::binary);
        if (!out) {
            throw wstream::IoError("cannot write " + args.csv_out);
        }
        wstream::emit_csv(std::move(rows), out);
    }
    return kExitOk;
}

struct FetchArgs {
    std::string manifest;
    std::string cache_dir = "datasets";
    bool offline = false;
    bool skip_validation = false;
};

int cmd_fetch(const FetchArgs& args) {
    const std::vector<wstream::DatasetSpec> specs =
        wstream::parse_manifest_file(args.manifest);
    wstream::FetchOptions options;
    options.cache_dir = args.cache_dir;
    options.offline = args.offline;
    options.validate_counts = !args.skip_validation;
    int failures = 0;
    for (const wstream::DatasetSpec& spec : specs) {
        try {
            const auto path = wstream::fetch_dataset(spec, options);
            std::cout << spec.name << ": ok " << path.string() << '\n';
        } catch (const wstream::Error& e) {
            ++failures;
            std::cerr << spec.name << ": " << e.what() << '\n';
        }
    }
    return failures == 0 ? kExitOk : kExitData;
}

struct MetricsArgs {
    std::string input;
    std::string meta;
};

int cmd_metrics(const MetricsArgs& args) {
    const wstream::AdjacencyGraph graph =
        wstream::build_adjacency(wstream::parse_edge_list_file(args.input));
    std::ifstream in(args.meta, std::ios::binary);
    if (!in) {
        throw wstream::IoError("cannot open " + args.meta);
    }
    const wstream::PartitionState state = wstream::PartitionState::load(in);

    const auto [cut, ratio] = wstream::edge_cut(graph, state);
    std::cout << "n: " << graph.n() << '\n'
              << "m: " << graph.m() << '\n'
              << "k: " << state.k() << '\n'
              << "cut_edges: " << cut << '\n'
              << "edge_cut_ratio: " << ratio << '\n'
              << "load_imbalance: " << wstream::load_imbalance(state.loads()) << '\n';
    std::cout << "loads:";
    for (const std::uint64_t load : state.loads()) {
        std::cout << ' ' << load;
    }
    std::cout << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"streaming graph partitioning toolkit"};
    app.require_subcommand(1);

    PartitionArgs part;
    CLI::App* partition = app.add_subcommand("partition", "run one partitioner");
    partition->add_option("--input", part.input, "edge-list file (.gz ok)")->required();
    partition->add_option("--algo", part.algo, "wstream|ldg|hashing")
        ->check(CLI::IsMember({"wstream", "ldg", "hashing"}));
    partition->add_option("--k", part.k, "partition count");
    partition->add_option("--window", part.window, "stream window size");
    partition->add_option("--slack", part.slack, "balance slack (vertex-count gap)");
    partition->add_option("--epsilon", part.epsilon, "ldg capacity slack fraction");
    partition->add_option("--seed", part.seed, "rng seed");
    partition->add_option("--order", part.order, "as-read|random")
        ->check(CLI::IsMember({"as-read", "random"}));
    partition->add_flag("--co-assign", part.co_assign,
                        "assign buffered neighbors with the candidate");
    partition->add_option("--meta-out", part.meta_out, "write metadata file");
    partition->add_option("--csv-out", part.csv_out, "write one-row result CSV");

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run an experiment plan");
    sweep_cmd->add_option("--plan", sweep.plan_file, "plan file (key=value lines)");
    sweep_cmd->add_option("--input", sweep.datasets, "dataset file(s)")->delimiter(',');
    sweep_cmd->add_option("--algo", sweep.algos, "algorithms")->delimiter(',');
    sweep_cmd->add_option("--k", sweep.ks, "partition counts")->delimiter(',');
    sweep_cmd->add_option("--window", sweep.windows, "window sizes")->delimiter(',');
    sweep_cmd->add_option("--slack", sweep.slacks, "balance slacks")->delimiter(',');
    sweep_cmd->add_option("--epsilon", sweep.epsilons, "ldg capacity slacks")
        ->delimiter(',');
    sweep_cmd->add_option("--seed", sweep.seeds, "seeds")->delimiter(',');
    sweep_cmd->add_option("--order", sweep.order, "as-read|random")
        ->check(CLI::IsMember({"as-read", "random"}));
    sweep_cmd->add_flag("--co-assign", sweep.co_assign,
                        "assign buffered neighbors with the candidate");
    sweep_cmd->add_option("--csv-out", sweep.csv_out, "output CSV (default stdout)");
    sweep_cmd->add_option("--merge-csv", sweep.merge_csv,
                          "merge rows from an externally produced result CSV");

    FetchArgs fetch;
    CLI::App* fetch_cmd = app.add_subcommand("fetch", "fetch datasets from a manifest");
    fetch_cmd->add_option("--manifest", fetch.manifest, "manifest file")->required();
    fetch_cmd->add_option("--cache-dir", fetch.cache_dir, "download cache directory");
    fetch_cmd->add_flag("--offline", fetch.offline, "use cache only");
    fetch_cmd->add_flag("--skip-validation", fetch.skip_validation,
                        "skip post-parse n/m validation");

    MetricsArgs metrics;
    CLI::App* metrics_cmd =
        app.add_subcommand("metrics", "recompute metrics from graph + metadata");
    metrics_cmd->add_option("--input", metrics.input, "edge-list file")->required();
    metrics_cmd->add_option("--meta", metrics.meta, "metadata file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (partition->parsed()) {
            return cmd_partition(part);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(sweep);
        }
        if (fetch_cmd->parsed()) {
            return cmd_fetch(fetch);
        }
        if (metrics_cmd->parsed()) {
            return cmd_metrics(metrics);
        }
    } catch (const wstream::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const wstream::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
