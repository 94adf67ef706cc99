#pragma once

// Deliberately naive reference implementations. Nothing here calls into the flow or
// analysis code, so agreement with the library is meaningful.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "mergecalc/flow.hpp"
#include "mergecalc/network.hpp"

namespace oracle {

using mergecalc::Dag;
using mergecalc::EdgeId;
using mergecalc::Path;
using mergecalc::VertexId;

inline void paths_from(const Dag& dag, VertexId x, VertexId v, Path& stack, std::vector<Path>& out) {
    if (x == v) {
        out.push_back(stack);
        return;
    }
    for (const auto& e : dag.edges()) {
        if (e.tail != x) continue;
        stack.push_back(e.id);
        paths_from(dag, e.head, v, stack, out);
        stack.pop_back();
    }
}

inline std::vector<Path> simple_paths(const Dag& dag, VertexId u, VertexId v) {
    std::vector<Path> out;
    Path stack;
    paths_from(dag, u, v, stack, out);
    return out;
}

inline bool disjoint(const Path& a, const Path& b) {
    for (EdgeId e : a) {
        if (std::find(b.begin(), b.end(), e) != b.end()) return false;
    }
    return true;
}

// Every family of pairwise edge-disjoint u->v paths, as index sets into simple_paths.
inline void families(const std::vector<Path>& paths, std::size_t from, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
    out.push_back(cur);
    for (std::size_t i = from; i < paths.size(); ++i) {
        bool ok = std::all_of(cur.begin(), cur.end(), [&](std::size_t c) { return disjoint(paths[c], paths[i]); });
        if (!ok) continue;
        cur.push_back(i);
        families(paths, i + 1, cur, out);
        cur.pop_back();
    }
}

inline int max_disjoint(const Dag& dag, VertexId u, VertexId v) {
    auto paths = simple_paths(dag, u, v);
    std::vector<std::vector<std::size_t>> fam;
    std::vector<std::size_t> cur;
    families(paths, 0, cur, fam);
    std::size_t best = 0;
    for (const auto& f : fam) best = std::max(best, f.size());
    return static_cast<int>(best);
}

// Number of maximum families, with each family a set of edge sets.
inline std::size_t count_max_families(const Dag& dag, VertexId u, VertexId v) {
    auto paths = simple_paths(dag, u, v);
    std::vector<std::vector<std::size_t>> fam;
    std::vector<std::size_t> cur;
    families(paths, 0, cur, fam);
    std::size_t best = 0;
    for (const auto& f : fam) best = std::max(best, f.size());
    std::set<std::set<std::set<EdgeId>>> seen;
    for (const auto& f : fam) {
        if (f.size() != best) continue;
        std::set<std::set<EdgeId>> s;
        for (auto i : f) s.insert(std::set<EdgeId>(paths[i].begin(), paths[i].end()));
        seen.insert(s);
    }
    return seen.size();
}

// Random DAG on vertices ordered 0..n-1, groups on random terminal pairs, paths taken
// from a flow decomposition, then trimmed to the covered part.
inline mergecalc::MergeNetwork random_covered(std::mt19937& rng, int max_edges) {
    for (;;) {
        std::uniform_int_distribution<int> vcount(4, 8);
        const int nv = vcount(rng);
        Dag dag;
        for (int v = 0; v < nv; ++v) dag.add_vertex();
        std::uniform_int_distribution<int> ecount(nv, max_edges + 4);
        const int ne = ecount(rng);
        std::uniform_int_distribution<int> pick(0, nv - 1);
        for (int k = 0; k < ne; ++k) {
            int a = pick(rng);
            int b = pick(rng);
            if (a == b) continue;
            dag.add_edge(std::min(a, b), std::max(a, b));
        }
        std::uniform_int_distribution<int> gcount(1, 3);
        const int ng = gcount(rng);
        mergecalc::MergeNetwork net;
        net.dag = dag;
        std::set<VertexId> used_src;
        std::set<VertexId> used_snk;
        bool ok = true;
        for (int g = 0; g < ng && ok; ++g) {
            int s = pick(rng) % std::max(1, nv / 2);
            int t = nv / 2 + pick(rng) % (nv - nv / 2);
            if (used_src.count(s) || used_snk.count(t) || used_snk.count(s) || used_src.count(t)) {
                ok = false;
                break;
            }
            if (mergecalc::min_cut(dag, s, t) == 0) {
                ok = false;
                break;
            }
            used_src.insert(s);
            used_snk.insert(t);
            mergecalc::PathGroup grp;
            grp.source = s;
            grp.sink = t;
            grp.paths = mergecalc::menger_paths(dag, s, t);
            net.groups.push_back(grp);
        }
        if (!ok) continue;
        std::vector<bool> keep(dag.edge_count(), false);
        for (const auto& grp : net.groups) {
            for (const auto& p : grp.paths) {
                for (EdgeId e : p) keep[static_cast<std::size_t>(e)] = true;
            }
        }
        auto trimmed = mergecalc::compact(net, keep);
        if (static_cast<int>(trimmed.dag.edge_count()) > max_edges) continue;
        return trimmed;
    }
}

// Edges entered by at least two paths through distinct predecessor edges. Counted
// straight from the path lists; knows nothing about runs or heads.
inline std::set<EdgeId> merging_edges(const mergecalc::MergeNetwork& net) {
    std::map<EdgeId, std::set<EdgeId>> preds;
    for (const auto& g : net.groups) {
        for (const auto& p : g.paths) {
            for (std::size_t k = 1; k < p.size(); ++k) preds[p[k]].insert(p[k - 1]);
        }
    }
    std::set<EdgeId> out;
    for (const auto& [e, ps] : preds) {
        if (ps.size() >= 2) out.insert(e);
    }
    return out;
}

// For a two-group graph: per path, the other group's path indices met at merging
// edges, in path order. Two decodings of one graph must agree on this exactly.
inline std::vector<std::vector<int>> meeting_signature(const mergecalc::MergeNetwork& net) {
    auto marks = merging_edges(net);
    std::map<EdgeId, std::vector<std::pair<int, int>>> users;
    for (int g = 0; g < 2; ++g) {
        for (std::size_t i = 0; i < net.groups[static_cast<std::size_t>(g)].paths.size(); ++i) {
            for (EdgeId e : net.groups[static_cast<std::size_t>(g)].paths[i]) users[e].push_back({g, static_cast<int>(i)});
        }
    }
    std::vector<std::vector<int>> sig;
    for (int g = 0; g < 2; ++g) {
        for (std::size_t i = 0; i < net.groups[static_cast<std::size_t>(g)].paths.size(); ++i) {
            std::vector<int> row;
            for (EdgeId e : net.groups[static_cast<std::size_t>(g)].paths[i]) {
                if (!marks.count(e)) continue;
                for (auto [h, j] : users[e]) {
                    if (h != g) row.push_back(j);
                }
            }
            sig.push_back(row);
        }
    }
    return sig;
}

// Pell numbers by their recurrence.
inline long long pell(int n) {
    long long a = 0;
    long long b = 1;
    for (int k = 1; k < n; ++k) {
        long long c = 2 * b + a;
        a = b;
        b = c;
    }
    return n == 0 ? 0 : b;
}

}  // namespace oracle
