#include "wstream/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "wstream/errors.hpp"

namespace wstream {

const char* const kResultCsvHeader =
    "dataset,algorithm,k,window,slack,epsilon,seed,order,n,m,cut_edges,"
    "edge_cut_ratio,load_imbalance,elapsed_seconds";

std::size_t ExperimentPlan::run_count() const {
    return datasets.size() * algorithms.size() * ks.size() * windows.size() *
           slacks.size() * epsilons.size() * seeds.size();
}

namespace {

std::vector<std::string> split_csv_values(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, ',')) {
        // trim surrounding whitespace
        const std::size_t first = current.find_first_not_of(" \t");
        const std::size_t last = current.find_last_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        out.push_back(current.substr(first, last - first + 1));
    }
    return out;
}

template <typename T>
T parse_number(const std::string& text, const char* what, std::size_t line_no) {
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw ParseError(std::string("bad ") + what + " value '" + text + "'",
                         line_no);
    }
    return value;
}

double parse_double(const std::string& text, const char* what, std::size_t line_no) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(text, &consumed);
        if (consumed != text.size()) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string("bad ") + what + " value '" + text + "'",
                         line_no);
    }
}

bool parse_bool(const std::string& text, const char* what, std::size_t line_no) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ParseError(std::string("bad ") + what + " value '" + text + "'", line_no);
}

} // namespace

ExperimentPlan parse_plan(std::istream& text) {
    ExperimentPlan plan;
    bool seen_algo = false, seen_k = false, seen_window = false;
    bool seen_slack = false, seen_epsilon = false, seen_seed = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(text, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        const std::size_t eq = line.find('=', start);
        if (eq == std::string::npos) {
            throw ParseError("expected key=value", line_no);
        }
        std::string key = line.substr(start, eq - start);
        const std::size_t key_end = key.find_last_not_of(" \t");
        key = key.substr(0, key_end + 1);
        const std::vector<std::string> values = split_csv_values(line.substr(eq + 1));
        if (values.empty()) {
            throw ParseError("empty value for key '" + key + "'", line_no);
        }

        if (key == "dataset") {
            plan.datasets.insert(plan.datasets.end(), values.begin(), values.end());
        } else if (key == "algo") {
            if (!seen_algo) {
                plan.algorithms.clear();
                seen_algo = true;
            }
            for (const std::string& v : values) {
                try {
                    plan.algorithms.push_back(algorithm_from_name(v));
                } catch (const ConfigError& e) {
                    throw ParseError(e.what(), line_no);
                }
            }
        } else if (key == "k") {
            if (!seen_k) {
                plan.ks.clear();
                seen_k = true;
            }
            for (const std::string& v : values) {
                plan.ks.push_back(parse_number<PartitionIndex>(v, "k", line_no));
            }
        } else if (key == "window") {
            if (!seen_window) {
                plan.windows.clear();
                seen_window = true;
            }
            for (const std::string& v : values) {
                plan.windows.push_back(parse_number<std::size_t>(v, "window", line_no));
            }
        } else if (key == "slack") {
            if (!seen_slack) {
                plan.slacks.clear();
                seen_slack = true;
            }
            for (const std::string& v : values) {
                plan.slacks.push_back(parse_number<std::uint64_t>(v, "slack", line_no));
            }
        } else if (key == "epsilon") {
            if (!seen_epsilon) {
                plan.epsilons.clear();
                seen_epsilon = true;
            }
            for (const std::string& v : values) {
                plan.epsilons.push_back(parse_double(v, "epsilon", line_no));
            }
        } else if (key == "seed") {
            if (!seen_seed) {
                plan.seeds.clear();
                seen_seed = true;
            }
            for (const std::string& v : values) {
                plan.seeds.push_back(parse_number<std::uint64_t>(v, "seed", line_no));
            }
        } else if (key == "order") {
            if (values.size() != 1) {
                throw ParseError("order takes one value", line_no);
            }
            if (values[0] == "as-read") {
                plan.order = StreamOrder::Kind::as_read;
            } else if (values[0] == "random") {
                plan.order = StreamOrder::Kind::uniform_random;
            } else {
                throw ParseError("order must be 'as-read' or 'random'", line_no);
            }
        } else if (key == "co_assign") {
            if (values.size() != 1) {
                throw ParseError("co_assign takes one value", line_no);
            }
            plan.co_assign = parse_bool(values[0], "co_assign", line_no);
        } else {
            throw ParseError("unknown plan key '" + key + "'", line_no);
        }
    }
    if (plan.datasets.empty()) {
        throw ConfigError("plan names no datasets");
    }
    return plan;
}

ExperimentPlan parse_plan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    return parse_plan(in);
}

ResultRow make_row(const std::string& dataset, const AdjacencyGraph& graph,
                   const RunSpec& spec, const QualityReport& report) {
    ResultRow row;
    row.dataset = dataset;
    row.algorithm = algorithm_name(spec.algorithm);
    row.k = spec.k;
    row.window = spec.window;
    row.slack = spec.slack;
    row.epsilon = spec.epsilon;
    row.seed = spec.seed;
    row.order =
        spec.order.kind == StreamOrder::Kind::as_read ? "as-read" : "random";
    row.n = graph.n();
    row.m = graph.m();
    row.cut_edges = report.cut_edges;
    row.edge_cut_ratio = report.edge_cut_ratio;
    row.load_imbalance = report.load_imbalance;
    row.elapsed_seconds = report.elapsed_seconds;
    return row;
}

std::vector<ResultRow> run_plan(const ExperimentPlan& plan, std::ostream& diagnostics) {
    std::vector<ResultRow> rows;
    for (const std::string& dataset : plan.datasets) {
        AdjacencyGraph graph;
        try {
            graph = build_adjacency(parse_edge_list_file(dataset));
        } catch (const Error& e) {
            diagnostics << "error: dataset " << dataset << ": " << e.what() << '\n';
            continue;
        }
        for (const Algorithm algo : plan.algorithms) {
            for (const PartitionIndex k : plan.ks) {
                for (const std::size_t window : plan.windows) {
                    for (const std::uint64_t slack : plan.slacks) {
                        for (const double epsilon : plan.epsilons) {
                            for (const std::uint64_t seed : plan.seeds) {
                                RunSpec spec;
                                spec.algorithm = algo;
                                spec.k = k;
                                spec.window = window;
                                spec.slack = slack;
                                spec.epsilon = epsilon;
                                spec.seed = seed;
                                spec.co_assign = plan.co_assign;
                                spec.order = plan.order == StreamOrder::Kind::as_read
                                                 ? StreamOrder::as_read()
                                                 : StreamOrder::uniform_random(seed);
                                const QualityReport report = measure_run(graph, spec);
                                rows.push_back(make_row(dataset, graph, spec, report));
                            }
                        }
                    }
                }
            }
        }
    }
    return rows;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string format_fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

} // namespace

void emit_csv(std::vector<ResultRow> rows, std::ostream& sink) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ResultRow& a, const ResultRow& b) {
                         return std::tie(a.dataset, a.algorithm, a.k, a.window,
                                         a.slack, a.seed) <
                                std::tie(b.dataset, b.algorithm, b.k, b.window,
                                         b.slack, b.seed);
                     });
    sink << kResultCsvHeader << '\n';
    for (const ResultRow& r : rows) {
        sink << csv_escape(r.dataset) << ',' << r.algorithm << ',' << r.k << ','
             << r.window << ',' << r.slack << ',' << format_fixed6(r.epsilon) << ','
             << r.seed << ',' << r.order << ',' << r.n << ',' << r.m << ','
             << r.cut_edges << ',' << format_fixed6(r.edge_cut_ratio) << ','
             << format_fixed6(r.load_imbalance) << ','
             << format_fixed6(r.elapsed_seconds) << '\n';
    }
}

namespace {

std::vector<std::string> parse_csv_record(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"' && current.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (quoted) {
        throw FormatError("unterminated quoted field", line_no);
    }
    fields.push_back(std::move(current));
    return fields;
}

} // namespace

std::vector<ResultRow> parse_result_csv(std::istream& source) {
    std::string line;
    if (!std::getline(source, line)) {
        throw FormatError("missing CSV header", 1);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kResultCsvHeader) {
        throw FormatError("unexpected CSV header", 1);
    }
    std::vector<ResultRow> rows;
    std::size_t line_no = 1;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> f = parse_csv_record(line, line_no);
        if (f.size() != 14) {
            throw FormatError("expected 14 fields, got " + std::to_string(f.size()),
                              line_no);
        }
        ResultRow row;
        row.dataset = f[0];
        row.algorithm = f[1];
        row.k = parse_number<PartitionIndex>(f[2], "k", line_no);
        row.window = parse_number<std::size_t>(f[3], "window", line_no);
        row.slack = parse_number<std::uint64_t>(f[4], "slack", line_no);
        row.epsilon = parse_double(f[5], "epsilon", line_no);
        row.seed = parse_number<std::uint64_t>(f[6], "seed", line_no);
        row.order = f[7];
        row.n = parse_number<std::uint64_t>(f[8], "n", line_no);
        row.m = parse_number<std::uint64_t>(f[9], "m", line_no);
        row.cut_edges = parse_number<std::uint64_t>(f[10], "cut_edges", line_no);
        row.edge_cut_ratio = parse_double(f[11], "edge_cut_ratio", line_no);
        row.load_imbalance = parse_double(f[12], "load_imbalance", line_no);
        row.elapsed_seconds = parse_double(f[13], "elapsed_seconds", line_no);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace wstream
