#include "mergecalc/layout.hpp"

#include <string>

#include "mergecalc/error.hpp"

namespace mergecalc {

Layout::Layout(std::vector<int> sizes) : group_sizes(std::move(sizes)) {
    for (int s : group_sizes) orders.emplace_back(static_cast<std::size_t>(s));
}

int Layout::add_token() { return token_count++; }

MergeNetwork build_layout(const Layout& layout) {
    MergeNetwork net;
    net.mode = layout.identical ? SourceMode::Identical : SourceMode::Distinct;
    const auto groups = layout.group_sizes.size();
    if (layout.identical && (groups < 2 || layout.starting_pairs > layout.group_sizes[0] ||
                             layout.starting_pairs > layout.group_sizes[1])) {
        throw MergeError(ErrorKind::MalformedNetwork, "starting pairs exceed path counts");
    }

    std::vector<VertexId> source(groups);
    std::vector<VertexId> sink(groups);
    if (layout.identical) {
        VertexId s = net.dag.add_vertex("S");
        for (auto& v : source) v = s;
    } else {
        for (std::size_t g = 0; g < groups; ++g) source[g] = net.dag.add_vertex("S" + std::to_string(g + 1));
    }
    for (std::size_t g = 0; g < groups; ++g) sink[g] = net.dag.add_vertex("R" + std::to_string(g + 1));

    std::vector<EdgeId> shared(static_cast<std::size_t>(layout.token_count));
    std::vector<VertexId> head(shared.size());
    std::vector<VertexId> tail(shared.size());
    for (std::size_t k = 0; k < shared.size(); ++k) {
        head[k] = net.dag.add_vertex("h" + std::to_string(k + 1));
        tail[k] = net.dag.add_vertex("t" + std::to_string(k + 1));
        shared[k] = net.dag.add_edge(head[k], tail[k]);
    }
    std::vector<EdgeId> omega;
    std::vector<VertexId> omega_end;
    for (int i = 0; i < layout.starting_pairs; ++i) {
        VertexId w = net.dag.add_vertex("w" + std::to_string(i + 1));
        omega.push_back(net.dag.add_edge(source[0], w));
        omega_end.push_back(w);
        net.starting_subpaths.push_back({omega.back()});
    }

    for (std::size_t g = 0; g < groups; ++g) {
        PathGroup grp;
        grp.source = source[g];
        grp.sink = sink[g];
        for (std::size_t p = 0; p < layout.orders[g].size(); ++p) {
            Path path;
            VertexId at = source[g];
            if (layout.identical && g < 2 && static_cast<int>(p) < layout.starting_pairs) {
                path.push_back(omega[p]);
                at = omega_end[p];
            }
            for (int k : layout.orders[g][p]) {
                if (k < 0 || k >= layout.token_count) throw MergeError(ErrorKind::MalformedNetwork, "token out of range");
                auto ku = static_cast<std::size_t>(k);
                path.push_back(net.dag.add_edge(at, head[ku]));
                path.push_back(shared[ku]);
                at = tail[ku];
            }
            path.push_back(net.dag.add_edge(at, sink[g]));
            grp.paths.push_back(std::move(path));
        }
        net.groups.push_back(std::move(grp));
    }
    if (!is_acyclic(net.dag)) throw MergeError(ErrorKind::CycleDetected, "token orders are inconsistent");
    return reduce(net);
}

}  // namespace mergecalc
