#include "mergecalc/flow.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>

#include "mergecalc/error.hpp"

namespace mergecalc {

namespace {

void check_terminals(const Dag& dag, VertexId u, VertexId v) {
    if (!dag.has_vertex(u) || !dag.has_vertex(v)) throw MergeError(ErrorKind::UnknownVertex, "flow terminal");
    if (u == v) throw MergeError(ErrorKind::MalformedNetwork, "flow terminals coincide");
    check_edge_limit(dag);
}

// Residual arcs of x in edge-id order: forward along unused out-edges, backward along
// used in-edges.
struct Arc {
    EdgeId edge;
    bool forward;
};

std::vector<Arc> residual_arcs(const Dag& dag, const std::vector<char>& flow, VertexId x) {
    std::vector<Arc> arcs;
    for (EdgeId e : dag.out_edges(x)) {
        if (!flow[static_cast<std::size_t>(e)]) arcs.push_back({e, true});
    }
    for (EdgeId e : dag.in_edges(x)) {
        if (flow[static_cast<std::size_t>(e)]) arcs.push_back({e, false});
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.edge < b.edge; });
    return arcs;
}

std::vector<char> max_flow(const Dag& dag, VertexId u, VertexId v, int& value) {
    std::vector<char> flow(dag.edge_count(), 0);
    value = 0;
    for (;;) {
        std::vector<Arc> via(dag.vertex_count(), {-1, true});
        std::vector<char> seen(dag.vertex_count(), 0);
        std::deque<VertexId> queue{u};
        seen[static_cast<std::size_t>(u)] = 1;
        while (!queue.empty() && !seen[static_cast<std::size_t>(v)]) {
            VertexId x = queue.front();
            queue.pop_front();
            for (const Arc& a : residual_arcs(dag, flow, x)) {
                const Edge& e = dag.edge(a.edge);
                VertexId y = a.forward ? e.head : e.tail;
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                via[static_cast<std::size_t>(y)] = a;
                queue.push_back(y);
            }
        }
        if (!seen[static_cast<std::size_t>(v)]) break;
        for (VertexId y = v; y != u;) {
            Arc a = via[static_cast<std::size_t>(y)];
            const Edge& e = dag.edge(a.edge);
            flow[static_cast<std::size_t>(a.edge)] = a.forward ? 1 : 0;
            y = a.forward ? e.tail : e.head;
        }
        ++value;
    }
    return flow;
}

}  // namespace

int min_cut(const Dag& dag, VertexId u, VertexId v) {
    check_terminals(dag, u, v);
    int value = 0;
    max_flow(dag, u, v, value);
    return value;
}

std::vector<Path> menger_paths(const Dag& dag, VertexId u, VertexId v) {
    check_terminals(dag, u, v);
    int value = 0;
    auto flow = max_flow(dag, u, v, value);
    if (value == 0) throw MergeError(ErrorKind::NoPath, "no path from " + dag.label(u) + " to " + dag.label(v));
    std::vector<Path> paths;
    for (int k = 0; k < value; ++k) {
        Path path;
        for (VertexId x = u; x != v;) {
            EdgeId next = -1;
            for (EdgeId e : dag.out_edges(x)) {
                if (flow[static_cast<std::size_t>(e)]) {
                    next = e;
                    break;
                }
            }
            flow[static_cast<std::size_t>(next)] = 0;
            path.push_back(next);
            x = dag.edge(next).head;
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

std::vector<Path> all_paths(const Dag& dag, VertexId u, VertexId v, std::size_t budget, bool* complete) {
    std::vector<Path> out;
    Path stack;
    bool done = true;
    // Prune vertices that cannot reach v.
    std::vector<char> reaches(dag.vertex_count(), 0);
    {
        std::deque<VertexId> queue{v};
        reaches[static_cast<std::size_t>(v)] = 1;
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            for (EdgeId e : dag.in_edges(x)) {
                VertexId t = dag.edge(e).tail;
                if (!reaches[static_cast<std::size_t>(t)]) {
                    reaches[static_cast<std::size_t>(t)] = 1;
                    queue.push_back(t);
                }
            }
        }
    }
    auto dfs = [&](auto&& self, VertexId x) -> void {
        if (!done) return;
        if (x == v) {
            if (out.size() >= budget) {
                done = false;
                return;
            }
            out.push_back(stack);
            return;
        }
        for (EdgeId e : dag.out_edges(x)) {
            VertexId h = dag.edge(e).head;
            if (!reaches[static_cast<std::size_t>(h)]) continue;
            stack.push_back(e);
            self(self, h);
            stack.pop_back();
        }
    };
    if (reaches[static_cast<std::size_t>(u)]) dfs(dfs, u);
    if (complete) *complete = done;
    return out;
}

namespace {

// Can `need` more edge-disjoint paths reach v using only unblocked edges, where
// `supply` lists (start vertex, how many paths may start there)?
bool routable(const Dag& dag, const std::vector<char>& blocked, std::vector<std::pair<VertexId, int>> supply,
              VertexId v, int need) {
    std::vector<char> flow(dag.edge_count(), 0);
    int got = 0;
    for (auto& s : supply) {
        if (s.first == v) {
            got += s.second;
            s.second = 0;
        }
    }
    while (got < need) {
        std::vector<Arc> via(dag.vertex_count(), {-1, true});
        std::vector<char> seen(dag.vertex_count(), 0);
        std::deque<VertexId> queue;
        for (const auto& s : supply) {
            if (s.second > 0 && !seen[static_cast<std::size_t>(s.first)]) {
                seen[static_cast<std::size_t>(s.first)] = 1;
                queue.push_back(s.first);
            }
        }
        while (!queue.empty() && !seen[static_cast<std::size_t>(v)]) {
            VertexId x = queue.front();
            queue.pop_front();
            for (const Arc& a : residual_arcs(dag, flow, x)) {
                if (blocked[static_cast<std::size_t>(a.edge)]) continue;
                const Edge& e = dag.edge(a.edge);
                VertexId y = a.forward ? e.head : e.tail;
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = 1;
                via[static_cast<std::size_t>(y)] = a;
                queue.push_back(y);
            }
        }
        if (!seen[static_cast<std::size_t>(v)]) return false;
        VertexId y = v;
        while (via[static_cast<std::size_t>(y)].edge >= 0) {
            Arc a = via[static_cast<std::size_t>(y)];
            const Edge& e = dag.edge(a.edge);
            flow[static_cast<std::size_t>(a.edge)] = a.forward ? 1 : 0;
            y = a.forward ? e.tail : e.head;
        }
        for (auto& s : supply) {
            if (s.first == y && s.second > 0) {
                --s.second;
                break;
            }
        }
        ++got;
    }
    return true;
}

}  // namespace

namespace {

// Paths are grown edge by edge. A branch survives only while the free edges can still
// carry the rest of the set, so dead ends are cut at once. Paths within a set come in
// increasing order of first edge, which makes every set appear once.
struct SetSearch {
    const Dag& dag;
    VertexId u;
    VertexId v;
    int cut;
    std::size_t budget;
    PathSetEnumeration result;
    std::vector<char> blocked;
    PathSet done;
    Path current;

    int rest() const { return cut - static_cast<int>(done.size()) - 1; }

    void step(EdgeId e) {
        blocked[static_cast<std::size_t>(e)] = 1;
        VertexId h = dag.edge(e).head;
        if (routable(dag, blocked, {{h, 1}, {u, rest()}}, v, rest() + 1)) {
            current.push_back(e);
            grow(h);
            current.pop_back();
        }
        blocked[static_cast<std::size_t>(e)] = 0;
    }

    void start() {
        if (static_cast<int>(done.size()) == cut) {
            if (result.sets.size() >= budget) {
                result.complete = false;
                return;
            }
            PathSet set = done;
            std::sort(set.begin(), set.end());
            result.sets.push_back(std::move(set));
            return;
        }
        const EdgeId floor = done.empty() ? -1 : done.back().front();
        // Paths are generated in first-edge order, so a first edge that was skipped stays
        // unused for the rest of this set. Blocking it lets the flow check see that.
        std::vector<EdgeId> skipped;
        for (EdgeId e : dag.out_edges(u)) {
            if (!result.complete) break;
            if (e <= floor || blocked[static_cast<std::size_t>(e)]) continue;
            step(e);
            blocked[static_cast<std::size_t>(e)] = 1;
            skipped.push_back(e);
        }
        for (EdgeId e : skipped) blocked[static_cast<std::size_t>(e)] = 0;
    }

    void grow(VertexId x) {
        if (x == v) {
            done.push_back(std::move(current));
            current.clear();
            start();
            current = std::move(done.back());
            done.pop_back();
            return;
        }
        for (EdgeId e : dag.out_edges(x)) {
            if (!result.complete) return;
            if (!blocked[static_cast<std::size_t>(e)]) step(e);
        }
    }
};

}  // namespace

PathSetEnumeration all_menger_path_sets(const Dag& dag, VertexId u, VertexId v, std::size_t budget, bool strict) {
    const int cut = min_cut(dag, u, v);
    if (cut == 0) throw MergeError(ErrorKind::NoPath, "min-cut is zero");
    SetSearch search{dag, u, v, cut, budget, {}, std::vector<char>(dag.edge_count(), 0), {}, {}};
    search.start();
    if (!search.result.complete && strict) throw MergeError(ErrorKind::BudgetExceeded, "path-set budget exhausted");
    return std::move(search.result);
}

}  // namespace mergecalc
