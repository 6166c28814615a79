#pragma once

#include <cstddef>
#include <list>
#include <unordered_map>
#include <vector>

#include "wstream/graph.hpp"

namespace wstream {

// Bounded FIFO buffer of upcoming vertex records. The front record is the
// candidate vertex; other records that are neighbors of the candidate are its
// buffered vertices. Each vertex appears at most once, so membership is by id.
class StreamWindow {
public:
    explicit StreamWindow(std::size_t capacity);

    std::size_t capacity() const { return capacity_; }
    std::size_t size() const { return buffer_.size(); }
    bool empty() const { return buffer_.empty(); }
    bool contains(VertexId id) const { return members_.count(id) != 0; }

    // Pulls records until the buffer is full or the stream is exhausted.
    void fill(VertexStream& stream);

    // Front record, without removal.
    const VertexRecord& candidate() const;

    // Records other than the front whose id appears in c.neighbors,
    // in window (arrival) order.
    std::vector<VertexRecord> buffered_neighbors(const VertexRecord& c) const;

    VertexRecord pop_candidate();

    // Removes a record from any position, preserving the order of the rest.
    void remove_by_id(VertexId id);

    // Window ids in arrival order (test/diagnostic helper).
    std::vector<VertexId> ids() const;

private:
    std::size_t capacity_;
    std::list<VertexRecord> buffer_;
    std::unordered_map<VertexId, std::list<VertexRecord>::iterator> members_;
};

} // namespace wstream
