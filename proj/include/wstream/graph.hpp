#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wstream/rng.hpp"

namespace wstream {

using VertexId = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>; // canonical: first < second

// Normalized undirected edge list. Self-loops are dropped, duplicate and
// reversed-duplicate pairs merged, pairs stored (min,max). Edges keep the
// order of their first appearance in the source so that first-appearance
// vertex order can be recovered; serialization sorts.
struct EdgeList {
    std::vector<Edge> edges;

    void add(VertexId u, VertexId v); // normalizes; ignores self-loops/dups
    std::vector<Edge> sorted_edges() const;

private:
    struct EdgeHash {
        std::size_t operator()(const Edge& e) const {
            return static_cast<std::size_t>(mix64(e.first) ^ mix64(~e.second));
        }
    };
    std::unordered_set<Edge, EdgeHash> seen_;
};

// Undirected adjacency built from an EdgeList. Vertex ids are kept as read;
// vertices exist only as edge endpoints.
class AdjacencyGraph {
public:
    std::size_t n() const { return order_.size(); }
    std::size_t m() const { return edge_count_; }

    bool contains(VertexId v) const { return adjacency_.count(v) != 0; }
    const std::vector<VertexId>& neighbors(VertexId v) const; // sorted
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    // Vertex ids in first-appearance order of the source edge list.
    const std::vector<VertexId>& vertices() const { return order_; }

private:
    friend AdjacencyGraph build_adjacency(const EdgeList& edges);
    std::unordered_map<VertexId, std::vector<VertexId>> adjacency_;
    std::vector<VertexId> order_;
    std::size_t edge_count_ = 0;
};

// One stream tuple: a vertex id plus its full adjacency list.
struct VertexRecord {
    VertexId id = 0;
    std::vector<VertexId> neighbors; // sorted

    bool operator==(const VertexRecord&) const = default;
};

struct StreamOrder {
    enum class Kind { as_read, uniform_random };
    Kind kind = Kind::as_read;
    std::uint64_t seed = 0;

    static StreamOrder as_read() { return {Kind::as_read, 0}; }
    static StreamOrder uniform_random(std::uint64_t seed) {
        return {Kind::uniform_random, seed};
    }
};

// Seeded, ordered one-pass vertex stream over a graph. Single consumer; the
// graph must outlive the stream.
class VertexStream {
public:
    VertexStream(const AdjacencyGraph& graph, std::vector<VertexId> order)
        : graph_(&graph), order_(std::move(order)) {}

    bool exhausted() const { return pos_ >= order_.size(); }
    std::size_t remaining() const { return order_.size() - pos_; }
    std::optional<VertexRecord> next();

private:
    const AdjacencyGraph* graph_;
    std::vector<VertexId> order_;
    std::size_t pos_ = 0;
};

// SNAP-style edge list text: two whitespace-separated non-negative integers
// per line, '#' comment lines. Malformed lines raise ParseError with the
// 1-based line number.
EdgeList parse_edge_list(std::istream& text);
EdgeList parse_edge_list(const std::string& text);

// Reads a file, transparently decompressing when the path ends in ".gz".
EdgeList parse_edge_list_file(const std::string& path);
std::string read_text_file(const std::string& path); // .gz-aware

// Canonical pairs sorted ascending, one "u<TAB>v" line each.
void serialize_edge_list(const EdgeList& edges, std::ostream& out);
std::string serialize_edge_list(const EdgeList& edges);

AdjacencyGraph build_adjacency(const EdgeList& edges);

VertexStream make_stream(const AdjacencyGraph& graph, const StreamOrder& order);

} // namespace wstream
