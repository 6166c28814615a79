#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wstream/graph.hpp"

namespace wstream {

using PartitionIndex = std::uint32_t;

// The master's metadata store: k partition vertex sets kept as a global
// vertex->partition map plus per-partition load counters, and the balance
// slack used by the dispatch gate.
//
// slack is an absolute vertex-count gap. slack = 0 selects strict balance:
// the gate excludes max-load partitions whenever the gap reaches 1, so the
// final loads differ by at most 1.
class PartitionState {
public:
    PartitionState(PartitionIndex k, std::uint64_t slack);

    PartitionIndex k() const { return k_; }
    std::uint64_t slack() const { return slack_; }
    std::size_t size() const { return assignment_.size(); }
    const std::vector<std::uint64_t>& loads() const { return loads_; }
    const std::unordered_map<VertexId, PartitionIndex>& assignment() const {
        return assignment_;
    }

    bool is_assigned(VertexId v) const { return assignment_.count(v) != 0; }
    std::optional<PartitionIndex> partition_of(VertexId v) const;

    // Single assignment per vertex; throws on double assignment or p >= k.
    void assign(VertexId v, PartitionIndex p);

    // |{u in neighbors : assignment[u] = p}|. Unassigned neighbors don't count.
    std::uint64_t edges_into(const std::vector<VertexId>& neighbors,
                             PartitionIndex p) const;

    // Per-partition assigned-neighbor counts in one pass (same values as
    // calling edges_into for every p).
    std::vector<std::uint64_t> assigned_counts(const std::vector<VertexId>& neighbors) const;

    std::uint64_t max_load() const;
    std::uint64_t min_load() const;

    // All partition indices attaining max(loads).
    std::vector<PartitionIndex> max_load_partitions() const;

    // The dispatch gate: true when max(loads) - min(loads) has reached the
    // slack (or 1, in strict-balance mode).
    bool imbalance_exceeded() const;

    // Metadata file: "wstream-meta v1 k=<k> slack=<slack>" header then one
    // "vertex<TAB>partition" line per assignment, sorted by vertex id.
    // UTF-8, LF endings, byte-stable for golden tests.
    void persist(std::ostream& sink) const;
    static PartitionState load(std::istream& source);

    bool operator==(const PartitionState& other) const;

private:
    PartitionIndex k_;
    std::uint64_t slack_;
    std::unordered_map<VertexId, PartitionIndex> assignment_;
    std::vector<std::uint64_t> loads_;
};

// LDG's capacity bound: l_max = ceil((1 + alpha) * ceil(n / k)) for a
// fractional slack alpha >= 0. Distinct from PartitionState::slack, which is
// an absolute gap.
struct CapacityBound {
    std::uint64_t l_max = 0;

    static CapacityBound compute(std::uint64_t n, PartitionIndex k, double alpha);
};

} // namespace wstream
