#include "wstream/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include <zlib.h>

#include "wstream/errors.hpp"

namespace wstream {

void EdgeList::add(VertexId u, VertexId v) {
    if (u == v) {
        return;
    }
    if (u > v) {
        std::swap(u, v);
    }
    if (seen_.emplace(u, v).second) {
        edges.emplace_back(u, v);
    }
}

std::vector<Edge> EdgeList::sorted_edges() const {
    std::vector<Edge> out = edges;
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool parse_vertex_token(std::string_view token, VertexId& out) {
    if (token.empty()) {
        return false;
    }
    const char* first = token.data();
    const char* last = first + token.size();
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

} // namespace

EdgeList parse_edge_list(std::istream& text) {
    EdgeList result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(text, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::vector<std::string_view> tokens;
        std::string_view rest{line};
        while (true) {
            const std::size_t begin = rest.find_first_not_of(" \t\r");
            if (begin == std::string_view::npos) {
                break;
            }
            std::size_t end = rest.find_first_of(" \t\r", begin);
            if (end == std::string_view::npos) {
                end = rest.size();
            }
            tokens.push_back(rest.substr(begin, end - begin));
            rest = rest.substr(end);
        }
        if (tokens.size() != 2) {
            throw ParseError("expected two vertex ids, got " +
                                 std::to_string(tokens.size()) + " tokens",
                             line_no);
        }
        VertexId u = 0;
        VertexId v = 0;
        if (!parse_vertex_token(tokens[0], u) || !parse_vertex_token(tokens[1], v)) {
            throw ParseError("vertex ids must be non-negative integers", line_no);
        }
        result.add(u, v);
    }
    return result;
}

EdgeList parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string read_text_file(const std::string& path) {
    const bool gz = path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
    if (gz) {
        gzFile file = gzopen(path.c_str(), "rb");
        if (file == nullptr) {
            throw IoError("cannot open " + path);
        }
        std::string data;
        char buffer[1 << 16];
        int got = 0;
        while ((got = gzread(file, buffer, sizeof buffer)) > 0) {
            data.append(buffer, static_cast<std::size_t>(got));
        }
        const bool failed = got < 0;
        gzclose(file);
        if (failed) {
            throw IoError("gzip decompression failed for " + path);
        }
        return data;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

EdgeList parse_edge_list_file(const std::string& path) {
    const std::string data = read_text_file(path);
    std::istringstream in(data);
    return parse_edge_list(in);
}

void serialize_edge_list(const EdgeList& edges, std::ostream& out) {
    for (const Edge& e : edges.sorted_edges()) {
        out << e.first << '\t' << e.second << '\n';
    }
}

std::string serialize_edge_list(const EdgeList& edges) {
    std::ostringstream out;
    serialize_edge_list(edges, out);
    return out.str();
}

AdjacencyGraph build_adjacency(const EdgeList& edges) {
    AdjacencyGraph g;
    for (const Edge& e : edges.edges) {
        for (const VertexId v : {e.first, e.second}) {
            if (g.adjacency_.emplace(v, std::vector<VertexId>{}).second) {
                g.order_.push_back(v);
            }
        }
        g.adjacency_[e.first].push_back(e.second);
        g.adjacency_[e.second].push_back(e.first);
        ++g.edge_count_;
    }
    for (auto& [id, nbrs] : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    return g;
}

const std::vector<VertexId>& AdjacencyGraph::neighbors(VertexId v) const {
    const auto it = adjacency_.find(v);
    if (it == adjacency_.end()) {
        throw StateError("vertex " + std::to_string(v) + " not in graph");
    }
    return it->second;
}

std::optional<VertexRecord> VertexStream::next() {
    if (exhausted()) {
        return std::nullopt;
    }
    const VertexId id = order_[pos_++];
    return VertexRecord{id, graph_->neighbors(id)};
}

VertexStream make_stream(const AdjacencyGraph& graph, const StreamOrder& order) {
    std::vector<VertexId> ids = graph.vertices();
    if (order.kind == StreamOrder::Kind::uniform_random) {
        Rng rng(order.seed);
        rng.shuffle(ids);
    }
    return VertexStream(graph, std::move(ids));
}

} // namespace wstream
