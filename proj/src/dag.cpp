#include "mergecalc/dag.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

#include "mergecalc/error.hpp"

namespace mergecalc {

VertexId Dag::add_vertex(std::string label) {
    auto v = static_cast<VertexId>(labels_.size());
    if (label.empty()) label = "v" + std::to_string(v);
    labels_.push_back(std::move(label));
    out_.emplace_back();
    in_.emplace_back();
    return v;
}

EdgeId Dag::add_edge(VertexId tail, VertexId head) {
    if (!has_vertex(tail) || !has_vertex(head)) {
        throw MergeError(ErrorKind::UnknownVertex, "edge endpoint out of range");
    }
    auto e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({e, tail, head});
    out_[static_cast<std::size_t>(tail)].push_back(e);
    in_[static_cast<std::size_t>(head)].push_back(e);
    return e;
}

VertexId Dag::find_vertex(const std::string& label) const {
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        if (labels_[v] == label) return static_cast<VertexId>(v);
    }
    return -1;
}

void Dag::unlink(std::vector<EdgeId>& list, EdgeId e) {
    list.erase(std::find(list.begin(), list.end(), e));
}

void Dag::link(std::vector<EdgeId>& list, EdgeId e) {
    list.insert(std::lower_bound(list.begin(), list.end(), e), e);
}

void Dag::set_tail(EdgeId e, VertexId v) {
    if (!has_vertex(v)) throw MergeError(ErrorKind::UnknownVertex, "set_tail");
    auto& ed = edges_.at(static_cast<std::size_t>(e));
    unlink(out_[static_cast<std::size_t>(ed.tail)], e);
    ed.tail = v;
    link(out_[static_cast<std::size_t>(v)], e);
}

void Dag::set_head(EdgeId e, VertexId v) {
    if (!has_vertex(v)) throw MergeError(ErrorKind::UnknownVertex, "set_head");
    auto& ed = edges_.at(static_cast<std::size_t>(e));
    unlink(in_[static_cast<std::size_t>(ed.head)], e);
    ed.head = v;
    link(in_[static_cast<std::size_t>(v)], e);
}

namespace {

std::vector<VertexId> kahn(const Dag& dag) {
    const auto n = dag.vertex_count();
    std::vector<int> indeg(n, 0);
    for (const auto& e : dag.edges()) ++indeg[static_cast<std::size_t>(e.head)];
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v) {
        if (indeg[v] == 0) ready.push(static_cast<VertexId>(v));
    }
    std::vector<VertexId> order;
    order.reserve(n);
    while (!ready.empty()) {
        VertexId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (EdgeId e : dag.out_edges(v)) {
            auto h = static_cast<std::size_t>(dag.edge(e).head);
            if (--indeg[h] == 0) ready.push(static_cast<VertexId>(h));
        }
    }
    return order;
}

}  // namespace

std::vector<VertexId> topological_order(const Dag& dag) {
    auto order = kahn(dag);
    if (order.size() != dag.vertex_count()) {
        throw MergeError(ErrorKind::CycleDetected, "graph has a directed cycle");
    }
    return order;
}

bool is_acyclic(const Dag& dag) { return kahn(dag).size() == dag.vertex_count(); }

std::vector<std::vector<bool>> reachability(const Dag& dag) {
    const auto n = dag.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    auto order = topological_order(dag);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto u = static_cast<std::size_t>(*it);
        for (EdgeId e : dag.out_edges(*it)) {
            auto h = static_cast<std::size_t>(dag.edge(e).head);
            reach[u][h] = true;
            for (std::size_t w = 0; w < n; ++w) {
                if (reach[h][w]) reach[u][w] = true;
            }
        }
    }
    return reach;
}

std::size_t edge_limit() {
    if (const char* env = std::getenv("MERGE_MAX_EDGES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 10000;
}

void check_edge_limit(const Dag& dag) {
    if (dag.edge_count() > edge_limit()) {
        throw MergeError(ErrorKind::GraphTooLarge,
                         std::to_string(dag.edge_count()) + " edges exceeds limit " +
                             std::to_string(edge_limit()));
    }
}

}  // namespace mergecalc
