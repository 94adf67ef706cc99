#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mergecalc {

using VertexId = int;
using EdgeId = int;

struct Edge {
    EdgeId id;
    VertexId tail;
    VertexId head;
};

// Directed multigraph. Vertices and edges are dense indices; an edge id equals its
// position. Labels are what the outside world sees.
class Dag {
public:
    VertexId add_vertex(std::string label = {});
    EdgeId add_edge(VertexId tail, VertexId head);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& label(VertexId v) const { return labels_.at(static_cast<std::size_t>(v)); }
    void set_label(VertexId v, std::string label) { labels_.at(static_cast<std::size_t>(v)) = std::move(label); }

    // Edge ids in increasing order.
    const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(static_cast<std::size_t>(v)); }
    const std::vector<EdgeId>& in_edges(VertexId v) const { return in_.at(static_cast<std::size_t>(v)); }

    bool has_vertex(VertexId v) const { return v >= 0 && static_cast<std::size_t>(v) < labels_.size(); }
    VertexId find_vertex(const std::string& label) const;  // -1 if absent

    // Endpoint surgery used by the splicing constructions.
    void set_tail(EdgeId e, VertexId v);
    void set_head(EdgeId e, VertexId v);

private:
    void unlink(std::vector<EdgeId>& list, EdgeId e);
    void link(std::vector<EdgeId>& list, EdgeId e);

    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

// Stable by vertex index: among ready vertices the smallest index goes first.
std::vector<VertexId> topological_order(const Dag& dag);
bool is_acyclic(const Dag& dag);

// reach[u][v] true iff a non-empty directed path u -> v exists.
std::vector<std::vector<bool>> reachability(const Dag& dag);

// Edge limit policy; MERGE_MAX_EDGES overrides the default of 10000.
std::size_t edge_limit();
void check_edge_limit(const Dag& dag);

}  // namespace mergecalc
