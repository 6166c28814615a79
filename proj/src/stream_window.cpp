#include "wstream/stream_window.hpp"

#include <algorithm>

#include "wstream/errors.hpp"

namespace wstream {

StreamWindow::StreamWindow(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) {
        throw ConfigError("window capacity must be at least 1");
    }
}

void StreamWindow::fill(VertexStream& stream) {
    while (buffer_.size() < capacity_) {
        auto record = stream.next();
        if (!record) {
            break;
        }
        buffer_.push_back(std::move(*record));
        members_.emplace(buffer_.back().id, std::prev(buffer_.end()));
    }
}

const VertexRecord& StreamWindow::candidate() const {
    if (buffer_.empty()) {
        throw StateError("stream window is empty");
    }
    return buffer_.front();
}

std::vector<VertexRecord> StreamWindow::buffered_neighbors(const VertexRecord& c) const {
    std::vector<VertexRecord> result;
    if (buffer_.empty()) {
        return result;
    }
    // Window order, skipping the front and the queried record itself.
    for (auto it = std::next(buffer_.begin()); it != buffer_.end(); ++it) {
        if (it->id == c.id) {
            continue;
        }
        if (std::binary_search(c.neighbors.begin(), c.neighbors.end(), it->id)) {
            result.push_back(*it);
        }
    }
    return result;
}

VertexRecord StreamWindow::pop_candidate() {
    if (buffer_.empty()) {
        throw StateError("stream window is empty");
    }
    VertexRecord front = std::move(buffer_.front());
    members_.erase(front.id);
    buffer_.pop_front();
    return front;
}

void StreamWindow::remove_by_id(VertexId id) {
    const auto it = members_.find(id);
    if (it == members_.end()) {
        throw StateError("vertex " + std::to_string(id) + " not in window");
    }
    buffer_.erase(it->second);
    members_.erase(it);
}

std::vector<VertexId> StreamWindow::ids() const {
    std::vector<VertexId> out;
    out.reserve(buffer_.size());
    for (const VertexRecord& r : buffer_) {
        out.push_back(r.id);
    }
    return out;
}

} // namespace wstream
