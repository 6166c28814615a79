#include "wstream/partition_state.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "wstream/errors.hpp"

namespace wstream {

PartitionState::PartitionState(PartitionIndex k, std::uint64_t slack)
    : k_(k), slack_(slack), loads_(k, 0) {
    if (k == 0) {
        throw ConfigError("partition count must be at least 1");
    }
}

std::optional<PartitionIndex> PartitionState::partition_of(VertexId v) const {
    const auto it = assignment_.find(v);
    if (it == assignment_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void PartitionState::assign(VertexId v, PartitionIndex p) {
    if (p >= k_) {
        throw ConfigError("partition index " + std::to_string(p) +
                          " out of range [0," + std::to_string(k_) + ")");
    }
    if (!assignment_.emplace(v, p).second) {
        throw StateError("vertex " + std::to_string(v) + " already assigned");
    }
    ++loads_[p];
}

std::uint64_t PartitionState::edges_into(const std::vector<VertexId>& neighbors,
                                         PartitionIndex p) const {
    if (p >= k_) {
        throw ConfigError("partition index " + std::to_string(p) +
                          " out of range [0," + std::to_string(k_) + ")");
    }
    std::uint64_t count = 0;
    for (const VertexId u : neighbors) {
        const auto it = assignment_.find(u);
        if (it != assignment_.end() && it->second == p) {
            ++count;
        }
    }
    return count;
}

std::vector<std::uint64_t>
PartitionState::assigned_counts(const std::vector<VertexId>& neighbors) const {
    std::vector<std::uint64_t> counts(k_, 0);
    for (const VertexId u : neighbors) {
        const auto it = assignment_.find(u);
        if (it != assignment_.end()) {
            ++counts[it->second];
        }
    }
    return counts;
}

std::uint64_t PartitionState::max_load() const {
    return *std::max_element(loads_.begin(), loads_.end());
}

std::uint64_t PartitionState::min_load() const {
    return *std::min_element(loads_.begin(), loads_.end());
}

std::vector<PartitionIndex> PartitionState::max_load_partitions() const {
    const std::uint64_t top = max_load();
    std::vector<PartitionIndex> out;
    for (PartitionIndex p = 0; p < k_; ++p) {
        if (loads_[p] == top) {
            out.push_back(p);
        }
    }
    return out;
}

bool PartitionState::imbalance_exceeded() const {
    const std::uint64_t gap = max_load() - min_load();
    const std::uint64_t threshold = std::max<std::uint64_t>(slack_, 1);
    return gap >= threshold;
}

void PartitionState::persist(std::ostream& sink) const {
    sink << "wstream-meta v1 k=" << k_ << " slack=" << slack_ << '\n';
    std::vector<VertexId> vertices;
    vertices.reserve(assignment_.size());
    for (const auto& [v, p] : assignment_) {
        vertices.push_back(v);
    }
    std::sort(vertices.begin(), vertices.end());
    for (const VertexId v : vertices) {
        sink << v << '\t' << assignment_.at(v) << '\n';
    }
}

namespace {

std::uint64_t parse_u64_field(std::string_view text, std::string_view key,
                              std::size_t line_no) {
    if (text.size() <= key.size() || text.substr(0, key.size()) != key) {
        throw FormatError("expected '" + std::string(key) + "<value>'", line_no);
    }
    const std::string_view value = text.substr(key.size());
    std::uint64_t out = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
        throw FormatError("bad integer in '" + std::string(text) + "'", line_no);
    }
    return out;
}

} // namespace

PartitionState PartitionState::load(std::istream& source) {
    std::string line;
    if (!std::getline(source, line)) {
        throw FormatError("missing metadata header", 1);
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    std::istringstream header(line);
    std::string magic, version, k_field, slack_field;
    header >> magic >> version >> k_field >> slack_field;
    if (magic != "wstream-meta" || version != "v1") {
        throw FormatError("not a wstream-meta v1 file", 1);
    }
    const std::uint64_t k = parse_u64_field(k_field, "k=", 1);
    const std::uint64_t slack = parse_u64_field(slack_field, "slack=", 1);
    if (k == 0 || k > std::numeric_limits<PartitionIndex>::max()) {
        throw FormatError("invalid partition count in header", 1);
    }

    PartitionState state(static_cast<PartitionIndex>(k), slack);
    std::size_t line_no = 1;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw FormatError("expected 'vertex<TAB>partition'", line_no);
        }
        VertexId v = 0;
        std::uint64_t p = 0;
        const auto r1 = std::from_chars(line.data(), line.data() + tab, v);
        const auto r2 =
            std::from_chars(line.data() + tab + 1, line.data() + line.size(), p);
        if (r1.ec != std::errc{} || r1.ptr != line.data() + tab ||
            r2.ec != std::errc{} || r2.ptr != line.data() + line.size()) {
            throw FormatError("bad assignment record", line_no);
        }
        if (p >= k) {
            throw FormatError("partition index " + std::to_string(p) +
                                  " out of range for header k=" + std::to_string(k),
                              line_no);
        }
        try {
            state.assign(v, static_cast<PartitionIndex>(p));
        } catch (const StateError&) {
            throw FormatError("duplicate vertex " + std::to_string(v), line_no);
        }
    }
    return state;
}

bool PartitionState::operator==(const PartitionState& other) const {
    return k_ == other.k_ && slack_ == other.slack_ && loads_ == other.loads_ &&
           assignment_ == other.assignment_;
}

CapacityBound CapacityBound::compute(std::uint64_t n, PartitionIndex k, double alpha) {
    if (k == 0) {
        throw ConfigError("partition count must be at least 1");
    }
    if (alpha < 0.0) {
        throw ConfigError("capacity slack must be non-negative");
    }
    const std::uint64_t base = (n + k - 1) / k; // ceil(n/k)
    const double scaled = (1.0 + alpha) * static_cast<double>(base);
    return CapacityBound{static_cast<std::uint64_t>(std::ceil(scaled))};
}

} // namespace wstream
