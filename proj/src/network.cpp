#include "mergecalc/network.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mergecalc/error.hpp"
#include "mergecalc/flow.hpp"

namespace mergecalc {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MergeError(ErrorKind::MalformedNetwork, what); }

std::string where(std::size_t g, std::size_t p) {
    return "group " + std::to_string(g) + " path " + std::to_string(p);
}

}  // namespace

const Path& path_of(const MergeNetwork& net, PathRef ref) {
    return net.groups.at(static_cast<std::size_t>(ref.group)).paths.at(static_cast<std::size_t>(ref.path));
}

void validate(const MergeNetwork& net) {
    const Dag& dag = net.dag;
    check_edge_limit(dag);
    if (!is_acyclic(dag)) throw MergeError(ErrorKind::CycleDetected, "network graph has a cycle");

    std::set<VertexId> sinks;
    std::set<VertexId> sources;
    for (std::size_t g = 0; g < net.groups.size(); ++g) {
        const auto& grp = net.groups[g];
        if (!dag.has_vertex(grp.source) || !dag.has_vertex(grp.sink)) {
            throw MergeError(ErrorKind::UnknownVertex, "group " + std::to_string(g) + " terminal");
        }
        if (grp.source == grp.sink) malformed("group " + std::to_string(g) + " source equals sink");
        if (!sinks.insert(grp.sink).second) malformed("sinks must be distinct");
        sources.insert(grp.source);

        std::set<EdgeId> used;
        for (std::size_t p = 0; p < grp.paths.size(); ++p) {
            const auto& path = grp.paths[p];
            if (path.empty()) malformed(where(g, p) + " is empty");
            VertexId at = grp.source;
            for (EdgeId e : path) {
                if (e < 0 || static_cast<std::size_t>(e) >= dag.edge_count()) malformed(where(g, p) + " bad edge id");
                if (dag.edge(e).tail != at) malformed(where(g, p) + " is not a walk");
                at = dag.edge(e).head;
                if (!used.insert(e).second) malformed(where(g, p) + " shares an edge within its group");
            }
            if (at != grp.sink) malformed(where(g, p) + " does not end at the sink");
        }
    }
    if (net.mode == SourceMode::Distinct) {
        if (sources.size() != net.groups.size()) malformed("distinct-source mode needs distinct sources");
        if (!net.starting_subpaths.empty()) malformed("starting subpaths need identical-source mode");
    } else {
        if (sources.size() > 1) malformed("identical-source mode needs one source");
        for (std::size_t i = 0; i < net.starting_subpaths.size(); ++i) {
            const auto& omega = net.starting_subpaths[i];
            if (net.groups.size() < 2 || net.groups[0].paths.size() <= i || net.groups[1].paths.size() <= i) {
                malformed("starting subpath " + std::to_string(i) + " has no path pair");
            }
            for (int g = 0; g < 2; ++g) {
                const auto& path = net.groups[static_cast<std::size_t>(g)].paths[i];
                if (omega.empty() || omega.size() > path.size() || !std::equal(omega.begin(), omega.end(), path.begin())) {
                    malformed("starting subpath " + std::to_string(i) + " is not a shared prefix");
                }
            }
        }
    }
}

void validate_cuts(const MergeNetwork& net) {
    for (std::size_t g = 0; g < net.groups.size(); ++g) {
        const auto& grp = net.groups[g];
        if (min_cut(net.dag, grp.source, grp.sink) != grp.cut()) {
            malformed("group " + std::to_string(g) + " path count differs from min-cut");
        }
    }
}

bool is_covered(const MergeNetwork& net) {
    std::vector<bool> on(net.dag.edge_count(), false);
    for (const auto& grp : net.groups) {
        for (const auto& path : grp.paths) {
            for (EdgeId e : path) on[static_cast<std::size_t>(e)] = true;
        }
    }
    return std::all_of(on.begin(), on.end(), [](bool b) { return b; });
}

std::vector<std::vector<Occurrence>> edge_occurrences(const MergeNetwork& net) {
    std::vector<std::vector<Occurrence>> occ(net.dag.edge_count());
    for (std::size_t g = 0; g < net.groups.size(); ++g) {
        const auto& paths = net.groups[g].paths;
        for (std::size_t p = 0; p < paths.size(); ++p) {
            for (std::size_t k = 0; k < paths[p].size(); ++k) {
                occ[static_cast<std::size_t>(paths[p][k])].push_back(
                    {{static_cast<int>(g), static_cast<int>(p)}, static_cast<int>(k)});
            }
        }
    }
    return occ;
}

MergeNetwork compact(const MergeNetwork& net, const std::vector<bool>& keep_edge) {
    const Dag& dag = net.dag;
    std::vector<bool> keep_vertex(dag.vertex_count(), false);
    for (const auto& grp : net.groups) {
        keep_vertex[static_cast<std::size_t>(grp.source)] = true;
        keep_vertex[static_cast<std::size_t>(grp.sink)] = true;
    }
    for (const auto& e : dag.edges()) {
        if (keep_edge[static_cast<std::size_t>(e.id)]) {
            keep_vertex[static_cast<std::size_t>(e.tail)] = true;
            keep_vertex[static_cast<std::size_t>(e.head)] = true;
        }
    }
    MergeNetwork out;
    out.mode = net.mode;
    std::vector<VertexId> vmap(dag.vertex_count(), -1);
    for (std::size_t v = 0; v < dag.vertex_count(); ++v) {
        if (keep_vertex[v]) vmap[v] = out.dag.add_vertex(dag.label(static_cast<VertexId>(v)));
    }
    std::vector<EdgeId> emap(dag.edge_count(), -1);
    for (const auto& e : dag.edges()) {
        if (keep_edge[static_cast<std::size_t>(e.id)]) {
            emap[static_cast<std::size_t>(e.id)] =
                out.dag.add_edge(vmap[static_cast<std::size_t>(e.tail)], vmap[static_cast<std::size_t>(e.head)]);
        }
    }
    auto map_path = [&](const Path& path) {
        Path mapped;
        mapped.reserve(path.size());
        for (EdgeId e : path) {
            EdgeId m = emap[static_cast<std::size_t>(e)];
            if (m < 0) malformed("path references a dropped edge");
            mapped.push_back(m);
        }
        return mapped;
    };
    for (const auto& grp : net.groups) {
        PathGroup ng;
        ng.source = vmap[static_cast<std::size_t>(grp.source)];
        ng.sink = vmap[static_cast<std::size_t>(grp.sink)];
        for (const auto& path : grp.paths) ng.paths.push_back(map_path(path));
        out.groups.push_back(std::move(ng));
    }
    for (const auto& omega : net.starting_subpaths) out.starting_subpaths.push_back(map_path(omega));
    return out;
}

MergeNetwork reduce(const MergeNetwork& net) {
    if (!is_covered(net)) throw MergeError(ErrorKind::NotCovered, "reduce needs a covered network");
    MergeNetwork work = net;
    std::set<VertexId> terminals;
    for (const auto& grp : work.groups) {
        terminals.insert(grp.source);
        terminals.insert(grp.sink);
    }
    std::vector<bool> keep(work.dag.edge_count(), true);
    std::vector<int> indeg(work.dag.vertex_count(), 0);
    std::vector<int> outdeg(work.dag.vertex_count(), 0);
    for (const auto& e : work.dag.edges()) {
        ++outdeg[static_cast<std::size_t>(e.tail)];
        ++indeg[static_cast<std::size_t>(e.head)];
    }
    auto drop_from = [](Path& path, EdgeId e) {
        auto it = std::find(path.begin(), path.end(), e);
        if (it != path.end()) path.erase(it);
    };
    for (std::size_t v = 0; v < work.dag.vertex_count(); ++v) {
        auto vid = static_cast<VertexId>(v);
        if (terminals.count(vid) || indeg[v] != 1 || outdeg[v] != 1) continue;
        EdgeId in_e = -1;
        EdgeId out_e = -1;
        for (EdgeId e : work.dag.in_edges(vid)) {
            if (keep[static_cast<std::size_t>(e)]) in_e = e;
        }
        for (EdgeId e : work.dag.out_edges(vid)) {
            if (keep[static_cast<std::size_t>(e)]) out_e = e;
        }
        // in_e absorbs out_e: same path set traverses both.
        keep[static_cast<std::size_t>(out_e)] = false;
        work.dag.set_head(in_e, work.dag.edge(out_e).head);
        for (auto& grp : work.groups) {
            for (auto& path : grp.paths) drop_from(path, out_e);
        }
        for (auto& omega : work.starting_subpaths) drop_from(omega, out_e);
        indeg[v] = outdeg[v] = 0;
    }
    return compact(work, keep);
}

MergeNetwork reversed(const MergeNetwork& net) {
    MergeNetwork out;
    for (std::size_t v = 0; v < net.dag.vertex_count(); ++v) out.dag.add_vertex(net.dag.label(static_cast<VertexId>(v)));
    for (const auto& e : net.dag.edges()) out.dag.add_edge(e.head, e.tail);
    for (const auto& grp : net.groups) {
        PathGroup ng;
        ng.source = grp.sink;
        ng.sink = grp.source;
        for (const auto& path : grp.paths) ng.paths.emplace_back(path.rbegin(), path.rend());
        out.groups.push_back(std::move(ng));
    }
    out.mode = SourceMode::Distinct;
    return out;
}

}  // namespace mergecalc
