#include "mergecalc/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "mergecalc/analysis.hpp"
#include "mergecalc/error.hpp"
#include "mergecalc/layout.hpp"

namespace mergecalc {

namespace {

int mod2(int x) { return x % 2 == 1 ? 1 : 2; }  // 1 for odd, 2 for even

int residue(int x, int n) {
    int r = ((x % n) + n) % n;
    return r == 0 ? n : r;
}

void require(bool ok, ErrorKind kind, const std::string& what) {
    if (!ok) throw MergeError(kind, what);
}

void require_param(int value, int min, const char* name) {
    require(value >= min, ErrorKind::ParamTooSmall, std::string(name) + " must be >= " + std::to_string(min));
}

// ---- graph surgery ----

struct Offsets {
    int v = 0;
    int e = 0;
};

Offsets append(Dag& dst, const Dag& src, bool reverse_edges = false) {
    Offsets off{static_cast<int>(dst.vertex_count()), static_cast<int>(dst.edge_count())};
    for (std::size_t v = 0; v < src.vertex_count(); ++v) dst.add_vertex(src.label(static_cast<VertexId>(v)));
    for (const auto& e : src.edges()) {
        if (reverse_edges) {
            dst.add_edge(e.head + off.v, e.tail + off.v);
        } else {
            dst.add_edge(e.tail + off.v, e.head + off.v);
        }
    }
    return off;
}

Path shifted(const Path& path, int eoff, bool reverse = false) {
    Path out;
    out.reserve(path.size());
    for (EdgeId e : path) out.push_back(e + eoff);
    if (reverse) std::reverse(out.begin(), out.end());
    return out;
}

Path joined(Path a, const Path& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Moves every edge endpoint at `from` onto `to`.
void fuse_into(Dag& dag, VertexId from, VertexId to) {
    auto ins = dag.in_edges(from);
    auto outs = dag.out_edges(from);
    for (EdgeId e : ins) dag.set_head(e, to);
    for (EdgeId e : outs) dag.set_tail(e, to);
}

VertexId junction(Dag& dag, EdgeId in, const std::vector<EdgeId>& outs) {
    VertexId j = dag.add_vertex();
    dag.set_head(in, j);
    for (EdgeId e : outs) dag.set_tail(e, j);
    return j;
}

void standard_labels(MergeNetwork& net) {
    std::set<VertexId> named;
    const bool one_source = net.mode == SourceMode::Identical;
    for (std::size_t g = 0; g < net.groups.size(); ++g) {
        const auto& grp = net.groups[g];
        net.dag.set_label(grp.source, one_source ? "S" : "S" + std::to_string(g + 1));
        net.dag.set_label(grp.sink, "R" + std::to_string(g + 1));
        named.insert(grp.source);
        named.insert(grp.sink);
    }
    int k = 0;
    for (std::size_t v = 0; v < net.dag.vertex_count(); ++v) {
        if (!named.count(static_cast<VertexId>(v))) net.dag.set_label(static_cast<VertexId>(v), "v" + std::to_string(++k));
    }
}

// Drops edges no path uses, checks the result, reduces and renames.
MergeNetwork finish(const MergeNetwork& raw) {
    std::vector<bool> keep(raw.dag.edge_count(), false);
    for (const auto& grp : raw.groups) {
        for (const auto& p : grp.paths) {
            for (EdgeId e : p) keep[static_cast<std::size_t>(e)] = true;
        }
    }
    auto net = compact(raw, keep);
    validate(net);
    net = reduce(net);
    standard_labels(net);
    return net;
}

std::size_t index_of(const Path& path, EdgeId e) {
    auto it = std::find(path.begin(), path.end(), e);
    if (it == path.end()) throw MergeError(ErrorKind::MalformedNetwork, "edge not on path");
    return static_cast<std::size_t>(it - path.begin());
}

void require_two_group(const MergeNetwork& net, SourceMode mode, const char* who) {
    require(net.groups.size() == 2, ErrorKind::NotTwoGroup, std::string(who) + " needs a two-group network");
    require(net.mode == mode, ErrorKind::IncompatibleInterface,
            std::string(who) + (mode == SourceMode::Identical ? " needs an identical source" : " needs distinct sources"));
}

void require_starts(const MergeNetwork& net, int count, const char* who) {
    require(static_cast<int>(net.starting_subpaths.size()) == count, ErrorKind::IncompatibleInterface,
            std::string(who) + " needs " + std::to_string(count) + " starting subpaths");
}

}  // namespace

// ---- sequences ----

MergingSequence two_n_sequence(int n) {
    require_param(n, 1, "n");
    MergingSequence seq{2, n, {}, false};
    for (int i = 1; i <= n; ++i) {
        seq.strokes.push_back({mod2(i), 1});
        if (i <= n - 1) {
            seq.strokes.push_back({mod2(i), i + 1});
            seq.strokes.push_back({mod2(i + 1), i + 1});
        }
    }
    seq.strokes.push_back({mod2(n + 1), 1});
    return seq;
}

MergingSequence e_sequence(int n) {
    require_param(n, 1, "n");
    const int total = (n - 1) * (n - 1);
    std::vector<Stroke> slots(static_cast<std::size_t>(total), {0, 0});
    auto place = [&](int k, int i, int j) {
        require(k >= 1 && k <= total && slots[static_cast<std::size_t>(k - 1)].first == 0, ErrorKind::MalformedNetwork,
                "index sets overlap");
        slots[static_cast<std::size_t>(k - 1)] = {i + 1, j + 1};  // stored 1-based
    };
    for (int i = 0; i <= n - 2; ++i) {
        for (int j = 1; j <= n - i - 1; ++j) place(i * (2 * n - i - 2) + j, i, j);
    }
    for (int i = 0; i <= n - 3; ++i) {
        for (int j = 1; j <= n - i - 2; ++j) place(i * (2 * n - i - 3) + (n - 1) + j, n - 1 - j, n - 1 - i);
    }
    for (const auto& s : slots) require(s.first != 0, ErrorKind::MalformedNetwork, "index sets leave a gap");
    return {n, n, slots, true};
}

MergingSequence f_sequence(int n) {
    require_param(n, 1, "n");
    const int total = 2 * n * n - 3 * n + 2;
    std::vector<Stroke> slots(static_cast<std::size_t>(total), {0, 0});
    auto place = [&](int k, Stroke s) {
        require(k >= 1 && k <= total && slots[static_cast<std::size_t>(k - 1)].first == 0, ErrorKind::MalformedNetwork,
                "stroke positions overlap");
        slots[static_cast<std::size_t>(k - 1)] = s;
    };
    for (int i = 0; i <= n - 1; ++i) {
        for (int j = 1; j <= n - 1; ++j) place(2 * i * (n - 1) + j, {residue(j - i, n), i + 1});
        if (i == n - 1) place(2 * i * (n - 1) + n, {residue(n - i, n), i + 1});
    }
    for (int i = 0; i <= n - 2; ++i) {
        for (int j = 1; j <= n - 1; ++j) place((2 * i + 1) * (n - 1) + j, {n - i, residue(i - j + 2, n)});
    }
    for (const auto& s : slots) require(s.first != 0, ErrorKind::MalformedNetwork, "stroke positions leave a gap");
    return {n, n, slots, false};
}

MergingSequence h_sequence(int k) {
    require_param(k, 1, "k");
    MergingSequence seq{1, k, {}, false};
    for (int j = 1; j <= k; ++j) seq.strokes.push_back({1, j});
    return seq;
}

MergeNetwork gen_two_n_extremal(int n) { return decode(two_n_sequence(n)); }
MergeNetwork gen_e(int n) { return decode(e_sequence(n)); }
MergeNetwork gen_f(int n) { return decode(f_sequence(n)); }
MergeNetwork gen_h(int k) { return decode(h_sequence(k)); }

// ---- multi-group families ----

MergeNetwork gen_ones_two_chain(int k) {
    require_param(k, 1, "k");
    std::vector<int> sizes(static_cast<std::size_t>(k), 1);
    sizes.push_back(2);
    Layout lay(sizes);
    std::vector<int> first(static_cast<std::size_t>(k + 1));
    std::vector<int> second(static_cast<std::size_t>(k + 1));
    std::vector<int> link(static_cast<std::size_t>(k + 1), -1);  // link[i]: beta_i with beta_{i+1}
    for (int i = 1; i <= k; ++i) {
        first[static_cast<std::size_t>(i)] = lay.add_token();
        second[static_cast<std::size_t>(i)] = lay.add_token();
        if (i < k) link[static_cast<std::size_t>(i)] = lay.add_token();
    }
    for (int i = 1; i <= k; ++i) {
        auto u = static_cast<std::size_t>(i);
        if (i > 1) lay.visit(i - 1, 0, link[u - 1]);
        lay.visit(i - 1, 0, first[u]);
        lay.visit(i - 1, 0, second[u]);
        if (i < k) lay.visit(i - 1, 0, link[u]);
        lay.visit(k, 0, first[u]);
        lay.visit(k, 1, second[u]);
    }
    return build_layout(lay);
}

MergeNetwork gen_ones_two_grid(int k) {
    require_param(k, 1, "k");
    const int h = (k + 1) / 2;
    std::vector<int> sizes(static_cast<std::size_t>(k), 1);
    sizes.push_back(2);
    Layout lay(sizes);
    std::map<std::pair<int, int>, int> cross;
    for (int i = 1; i <= h; ++i) {
        for (int j = h + 1; j <= k; ++j) cross[{i, j}] = lay.add_token();
    }
    std::map<int, int> on_first;   // beta index -> token with psi_1
    std::map<int, int> on_second;  // beta index -> token with psi_2
    on_first[1] = lay.add_token();
    for (int j = h + 1; j <= k; ++j) on_first[j] = lay.add_token();
    for (int i = 1; i <= h; ++i) on_second[i] = lay.add_token();
    // The last path's psi_2 merging; for k = 1 it is a second merging of beta_1.
    const int last_second = lay.add_token();

    for (int i = 1; i <= h; ++i) {
        if (i == 1) lay.visit(0, 0, on_first[1]);
        lay.visit(i - 1, 0, on_second[i]);
        if (i == k) lay.visit(i - 1, 0, last_second);
        for (int j = h + 1; j <= k; ++j) lay.visit(i - 1, 0, cross[{i, j}]);
    }
    for (int j = h + 1; j <= k; ++j) {
        for (int i = 1; i <= h; ++i) lay.visit(j - 1, 0, cross[{i, j}]);
        lay.visit(j - 1, 0, on_first[j]);
        if (j == k) lay.visit(j - 1, 0, last_second);
    }
    lay.visit(k, 0, on_first[1]);
    for (int j = h + 1; j <= k; ++j) lay.visit(k, 0, on_first[j]);
    for (int i = 1; i <= h; ++i) lay.visit(k, 1, on_second[i]);
    lay.visit(k, 1, last_second);
    return build_layout(lay);
}

MergeNetwork gen_ones_n(int k, int n) {
    require_param(k, 1, "k");
    require_param(n, 1, "n");
    const int k1 = ((k + 1) / 2 + 1) / 2;
    const int k2 = k / 2;
    auto band = [&](int i) { return i <= k1 ? 1 : (i <= k1 + k2 ? 2 : 3); };
    std::vector<int> sizes(static_cast<std::size_t>(k), 1);
    sizes.push_back(n);
    Layout lay(sizes);
    std::map<std::pair<int, int>, int> meet;   // (beta, psi)
    std::map<std::pair<int, int>, int> cross;  // (outer beta, middle beta)
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= n; ++j) meet[{i, j}] = lay.add_token();
    }
    for (int i = 1; i <= k; ++i) {
        if (band(i) == 2) continue;
        for (int b = k1 + 1; b <= k1 + k2; ++b) cross[{i, b}] = lay.add_token();
    }
    for (int i = 1; i <= k; ++i) {
        auto meets = [&] {
            for (int j = 1; j <= n; ++j) lay.visit(i - 1, 0, meet[{i, j}]);
        };
        switch (band(i)) {
            case 1:
                meets();
                for (int b = k1 + 1; b <= k1 + k2; ++b) lay.visit(i - 1, 0, cross[{i, b}]);
                break;
            case 2:
                for (int a = 1; a <= k1; ++a) lay.visit(i - 1, 0, cross[{a, i}]);
                meets();
                for (int c = k1 + k2 + 1; c <= k; ++c) lay.visit(i - 1, 0, cross[{c, i}]);
                break;
            default:
                for (int b = k1 + 1; b <= k1 + k2; ++b) lay.visit(i - 1, 0, cross[{i, b}]);
                meets();
                break;
        }
    }
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= k; ++i) lay.visit(k, j - 1, meet[{i, j}]);
    }
    return build_layout(lay);
}

MergeNetwork gen_one_two_n(int n) {
    require_param(n, 4, "n");
    std::vector<Stroke> base = {{2, 1}, {1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {2, 1}};
    for (int i = 3; i <= n; ++i) {
        base.push_back({mod2(i), 1});
        if (i <= n - 1) {
            base.push_back({mod2(i), i + 1});
            base.push_back({mod2(i + 1), i + 1});
        }
    }
    Layout lay({1, 2, n});
    std::vector<int> on_bundle(static_cast<std::size_t>(n));
    std::vector<int> on_pair(2);
    for (auto& t : on_bundle) t = lay.add_token();
    for (auto& t : on_pair) t = lay.add_token();
    for (int j = 0; j < n; ++j) {
        lay.visit(0, 0, on_bundle[static_cast<std::size_t>(j)]);
        lay.visit(2, j, on_bundle[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < 2; ++i) {
        lay.visit(0, 0, on_pair[static_cast<std::size_t>(i)]);
        lay.visit(1, i, on_pair[static_cast<std::size_t>(i)]);
    }
    for (auto [i, j] : base) {
        int t = lay.add_token();
        lay.visit(1, i - 1, t);
        lay.visit(2, j - 1, t);
    }
    return build_layout(lay);
}

// ---- splicing ----

MergeNetwork swap_groups(const MergeNetwork& net) {
    require(net.groups.size() == 2, ErrorKind::NotTwoGroup, "swap needs two groups");
    MergeNetwork out = net;
    std::swap(out.groups[0], out.groups[1]);
    return out;
}

MergeNetwork concat_f_g(const MergeNetwork& f_graph, const MergeNetwork& g_in) {
    require_two_group(f_graph, SourceMode::Distinct, "concat_f_g");
    require_two_group(g_in, SourceMode::Distinct, "concat_f_g");
    const auto fv = two_group_view(f_graph);
    const int n = static_cast<int>(fv.on_psi.size());
    require(static_cast<int>(fv.on_phi.size()) == n, ErrorKind::IncompatibleInterface, "first graph must be (n,n)");
    require(!fv.on_phi[0].empty(), ErrorKind::IncompatibleInterface, "phi_1 of the first graph never merges");
    const int f_last = fv.on_phi[0].back();
    require(fv.info[static_cast<std::size_t>(f_last)].psi == n - 1 &&
                fv.on_psi[static_cast<std::size_t>(n - 1)].back() == f_last,
            ErrorKind::IncompatibleInterface, "last merging on phi_1 must be the last one on psi_n");
    require(static_cast<int>(g_in.groups[1].paths.size()) == n, ErrorKind::MismatchedN, "psi counts differ");

    // Relabel g so its first stroke reads (1,n).
    MergeNetwork g = g_in;
    const auto seq = encode(g);
    require(!seq.strokes.empty(), ErrorKind::IncompatibleInterface, "second graph has no merging");
    std::swap(g.groups[0].paths[0], g.groups[0].paths[static_cast<std::size_t>(seq.strokes[0].first - 1)]);
    std::swap(g.groups[1].paths[static_cast<std::size_t>(n - 1)],
              g.groups[1].paths[static_cast<std::size_t>(seq.strokes[0].second - 1)]);
    const auto gv = two_group_view(g);
    const int g_first = gv.on_phi[0].front();
    require(gv.on_psi[static_cast<std::size_t>(n - 1)].front() == g_first, ErrorKind::IncompatibleInterface,
            "first stroke of the second graph is not minimal");
    const int k = static_cast<int>(g.groups[0].paths.size());

    MergeNetwork out;
    out.dag = f_graph.dag;
    const Offsets off = append(out.dag, g.dag);
    const auto& fm = fv.mergings[static_cast<std::size_t>(f_last)];
    const auto& gm = gv.mergings[static_cast<std::size_t>(g_first)];

    auto f_head = [&](const Path& p) { return Path(p.begin(), p.begin() + static_cast<long>(index_of(p, fm.run.back()) + 1)); };
    auto g_tail = [&](const Path& p) {
        Path s = shifted(p, off.e);
        return Path(s.begin() + static_cast<long>(index_of(p, gm.start_edge)), s.end());
    };

    PathGroup phi;
    phi.source = f_graph.groups[0].source;
    phi.sink = g.groups[0].sink + off.v;
    phi.paths.push_back(joined(f_head(f_graph.groups[0].paths[0]), g_tail(g.groups[0].paths[0])));
    for (int i = 1; i < n; ++i) phi.paths.push_back(f_graph.groups[0].paths[static_cast<std::size_t>(i)]);
    for (int i = 1; i < k; ++i) phi.paths.push_back(shifted(g.groups[0].paths[static_cast<std::size_t>(i)], off.e));

    PathGroup psi;
    psi.source = f_graph.groups[1].source;
    psi.sink = g.groups[1].sink + off.v;
    for (int i = 0; i < n - 1; ++i) {
        const auto& a = f_graph.groups[1].paths[static_cast<std::size_t>(i)];
        const auto& b = g.groups[1].paths[static_cast<std::size_t>(i)];
        junction(out.dag, a.back(), {b.front() + off.e});
        psi.paths.push_back(joined(a, shifted(b, off.e)));
    }
    psi.paths.push_back(joined(f_head(f_graph.groups[1].paths[static_cast<std::size_t>(n - 1)]),
                               g_tail(g.groups[1].paths[static_cast<std::size_t>(n - 1)])));

    fuse_into(out.dag, gm.head + off.v, fm.tail);
    fuse_into(out.dag, g.groups[0].source + off.v, phi.source);
    fuse_into(out.dag, f_graph.groups[0].sink, phi.sink);

    out.groups = {phi, psi};
    return finish(out);
}

MergeNetwork gen_mn_lower(int m, int n) {
    require_param(m, 1, "m");
    require_param(n, 1, "n");
    if (m == 1) return gen_h(n);
    if (n == 1) return swap_groups(gen_h(m));
    if (m < n) return swap_groups(gen_mn_lower(n, m));
    return concat_f_g(gen_f(n), gen_mn_lower(m - n + 1, n));
}

MergeNetwork concat_back_to_back(const MergeNetwork& g1, const MergeNetwork& g2) {
    require_two_group(g1, SourceMode::Identical, "concat_back_to_back");
    require_two_group(g2, SourceMode::Identical, "concat_back_to_back");
    const int n = g1.groups[0].cut();
    require(g1.groups[1].cut() == n && g2.groups[0].cut() == n && g2.groups[1].cut() == n, ErrorKind::MismatchedN,
            "both graphs must be (n,n) with the same n");
    require_starts(g1, n, "concat_back_to_back");
    require_starts(g2, n, "concat_back_to_back");

    MergeNetwork out;
    out.dag = g1.dag;
    const Offsets off = append(out.dag, g2.dag, true);
    for (int g = 0; g < 2; ++g) {
        PathGroup grp;
        grp.source = g2.groups[static_cast<std::size_t>(g)].sink + off.v;
        grp.sink = g1.groups[static_cast<std::size_t>(g)].sink;
        for (int i = 0; i < n; ++i) {
            auto u = static_cast<std::size_t>(i);
            grp.paths.push_back(joined(shifted(g2.groups[static_cast<std::size_t>(g)].paths[u], off.e, true),
                                       g1.groups[static_cast<std::size_t>(g)].paths[u]));
        }
        out.groups.push_back(std::move(grp));
    }
    for (int i = 0; i < n; ++i) {
        auto u = static_cast<std::size_t>(i);
        junction(out.dag, g2.starting_subpaths[u].front() + off.e, {g1.starting_subpaths[u].front()});
    }
    return finish(out);
}

MergeNetwork concat_shifted(const MergeNetwork& g1, const MergeNetwork& g2) {
    require_two_group(g1, SourceMode::Identical, "concat_shifted");
    require_two_group(g2, SourceMode::Identical, "concat_shifted");
    const int big = g1.groups[0].cut();
    const int n = big - 1;
    require(g1.groups[1].cut() == big, ErrorKind::MismatchedN, "first graph must be square");
    require(n >= 2, ErrorKind::MismatchedN, "needs n >= 2 so the second graph has paths");
    require(g2.groups[0].cut() == n - 1 && g2.groups[1].cut() == n - 1, ErrorKind::MismatchedN,
            "second graph must be (n-1,n-1) when the first is (n+1,n+1)");
    require_starts(g1, big, "concat_shifted");
    require_starts(g2, n - 1, "concat_shifted");
    const auto v1 = two_group_view(g1);
    require(v1.on_phi[static_cast<std::size_t>(n)].empty() && v1.on_psi[0].empty(), ErrorKind::IncompatibleInterface,
            "last phi and first psi of the first graph must not merge");

    MergeNetwork out;
    out.dag = g1.dag;
    const Offsets off = append(out.dag, g2.dag, true);
    const VertexId src_phi = g2.groups[0].sink + off.v;
    const VertexId src_psi = g2.groups[1].sink + off.v;

    PathGroup phi{src_phi, g1.groups[0].sink, {}};
    PathGroup psi{src_psi, g1.groups[1].sink, {}};
    phi.paths.push_back(g1.groups[0].paths[0]);
    for (int i = 1; i <= n - 1; ++i) {
        auto u = static_cast<std::size_t>(i);
        phi.paths.push_back(joined(shifted(g2.groups[0].paths[u - 1], off.e, true), g1.groups[0].paths[u]));
        psi.paths.push_back(joined(shifted(g2.groups[1].paths[u - 1], off.e, true), g1.groups[1].paths[u]));
        junction(out.dag, g2.starting_subpaths[u - 1].front() + off.e, {g1.starting_subpaths[u].front()});
    }
    psi.paths.push_back(g1.groups[1].paths[static_cast<std::size_t>(n)]);
    out.dag.set_tail(g1.starting_subpaths[0].front(), src_phi);
    out.dag.set_tail(g1.starting_subpaths[static_cast<std::size_t>(n)].front(), src_psi);
    out.groups = {phi, psi};
    return finish(out);
}

MergeNetwork concat_chain(const std::vector<MergeNetwork>& parts) {
    require(!parts.empty(), ErrorKind::MismatchedN, "concat_chain needs at least one part");
    const int wide = parts[0].groups.size() == 2 ? parts[0].groups[1].cut() : 0;
    int prev = 0;
    for (const auto& p : parts) {
        require_two_group(p, SourceMode::Identical, "concat_chain");
        const int narrow = p.groups[0].cut();
        require(p.groups[1].cut() == wide, ErrorKind::MismatchedN, "every part needs the same psi count");
        require(narrow >= prev && narrow <= wide, ErrorKind::NonMonotoneCuts, "phi counts must be non-decreasing and <= psi count");
        prev = narrow;
    }

    MergeNetwork out;
    out.mode = SourceMode::Identical;
    std::vector<Offsets> offs;
    for (const auto& p : parts) offs.push_back(append(out.dag, p.dag));
    std::vector<Path> carried(static_cast<std::size_t>(wide));
    for (std::size_t j = 0; j < parts.size(); ++j) {
        const auto& p = parts[j];
        const int eo = offs[j].e;
        const int narrow = p.groups[0].cut();
        if (j > 0) {
            for (int i = 0; i < wide; ++i) {
                auto u = static_cast<std::size_t>(i);
                std::vector<EdgeId> firsts{p.groups[1].paths[u].front() + eo};
                if (i < narrow && p.groups[0].paths[u].front() != p.groups[1].paths[u].front()) {
                    firsts.push_back(p.groups[0].paths[u].front() + eo);
                }
                junction(out.dag, carried[u].back(), firsts);
            }
        }
        PathGroup grp{parts[0].groups[0].source + offs[0].v, p.groups[0].sink + offs[j].v, {}};
        for (int i = 0; i < narrow; ++i) {
            auto u = static_cast<std::size_t>(i);
            grp.paths.push_back(joined(carried[u], shifted(p.groups[0].paths[u], eo)));
        }
        out.groups.push_back(std::move(grp));
        for (int i = 0; i < wide; ++i) {
            auto u = static_cast<std::size_t>(i);
            carried[u] = joined(carried[u], shifted(p.groups[1].paths[u], eo));
        }
    }
    PathGroup last{parts[0].groups[0].source + offs[0].v, parts.back().groups[1].sink + offs.back().v, carried};
    out.groups.push_back(std::move(last));
    for (const auto& w : parts[0].starting_subpaths) out.starting_subpaths.push_back(shifted(w, offs[0].e));
    return finish(out);
}

MergeNetwork widen_psi(const MergeNetwork& net, int total) {
    require(net.groups.size() >= 2, ErrorKind::NotTwoGroup, "widen_psi needs a second group");
    MergeNetwork out = net;
    auto& grp = out.groups[1];
    while (grp.cut() < total) grp.paths.push_back({out.dag.add_edge(grp.source, grp.sink)});
    return out;
}

// ---- fixtures ----

namespace {

// Hand-entered graphs with named vertices.
struct Sketch {
    MergeNetwork net;
    std::map<std::string, VertexId> ids;

    VertexId v(const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        VertexId id = net.dag.add_vertex(name);
        ids[name] = id;
        return id;
    }
    // Path through named vertices; edges are created on first use of each pair.
    Path path(const std::vector<std::string>& names) {
        Path p;
        for (std::size_t k = 0; k + 1 < names.size(); ++k) {
            VertexId a = v(names[k]);
            VertexId b = v(names[k + 1]);
            EdgeId found = -1;
            for (EdgeId e : net.dag.out_edges(a)) {
                if (net.dag.edge(e).head == b) found = e;
            }
            if (found < 0) found = net.dag.add_edge(a, b);
            p.push_back(found);
        }
        return p;
    }
    void group(const std::string& s, const std::string& r, const std::vector<std::vector<std::string>>& paths) {
        PathGroup g{v(s), v(r), {}};
        for (const auto& p : paths) g.paths.push_back(path(p));
        net.groups.push_back(std::move(g));
    }
};

MergeNetwork butterfly() {
    Sketch s;
    s.net.mode = SourceMode::Identical;
    s.group("S", "R1", {{"S", "A", "R1"}, {"S", "B", "C", "D", "R1"}});
    s.group("S", "R2", {{"S", "A", "C", "D", "R2"}, {"S", "B", "R2"}});
    s.net.starting_subpaths = {s.path({"S", "A"}), s.path({"S", "B"})};
    return s.net;
}

MergeNetwork butterfly_two_way() {
    Sketch s;
    s.group("S1", "R1", {{"S1", "A", "B", "R1"}});
    s.group("S2", "R2", {{"S2", "A", "B", "R2"}});
    return s.net;
}

MergeNetwork two_unicast() {
    Sketch s;
    s.group("S1", "R1", {{"S1", "A", "B", "E", "F", "C", "D", "R1"}});
    s.group("S2", "R2", {{"S2", "A", "B", "C", "D", "R2"}, {"S2", "E", "F", "R2"}});
    return s.net;
}

MergeNetwork three_path_merging() {
    Sketch s;
    s.group("X1", "Y1", {{"X1", "A", "B", "C", "D", "Y1"}});
    s.group("X2", "Y2", {{"X2", "A", "B", "C", "D", "Y2"}});
    s.group("X3", "Y3", {{"X3", "B", "C", "Y3"}});
    return s.net;
}

// Token layout from named per-path orders over two groups.
// orders[g][p] lists token ids along path p of group g.
MergeNetwork token_orders(const std::vector<int>& sizes, const std::vector<std::vector<std::vector<int>>>& orders) {
    Layout lay(sizes);
    int top = -1;
    for (const auto& g : orders) {
        for (const auto& p : g) {
            for (int t : p) top = std::max(top, t);
        }
    }
    for (int t = 0; t <= top; ++t) lay.add_token();
    lay.orders = orders;
    return build_layout(lay);
}

MergeNetwork two_group_orders(const std::vector<std::vector<std::string>>& phi,
                              const std::vector<std::vector<std::string>>& psi) {
    Layout lay({static_cast<int>(phi.size()), static_cast<int>(psi.size())});
    std::map<std::string, int> token;
    auto tok = [&](const std::string& name) {
        auto it = token.find(name);
        if (it != token.end()) return it->second;
        return token[name] = lay.add_token();
    };
    for (std::size_t p = 0; p < phi.size(); ++p) {
        for (const auto& t : phi[p]) lay.visit(0, static_cast<int>(p), tok(t));
    }
    for (std::size_t p = 0; p < psi.size(); ++p) {
        for (const auto& t : psi[p]) lay.visit(1, static_cast<int>(p), tok(t));
    }
    auto net = build_layout(lay);
    // Name shared edges after their tokens: h<k>/t<k> -> <name>.h / <name>.t
    for (const auto& [name, k] : token) {
        VertexId h = net.dag.find_vertex("h" + std::to_string(k + 1));
        VertexId t = net.dag.find_vertex("t" + std::to_string(k + 1));
        if (h >= 0) net.dag.set_label(h, "h(" + name + ")");
        if (t >= 0) net.dag.set_label(t, "t(" + name + ")");
    }
    return net;
}

const std::vector<FixtureInfo> kCatalog = {
    {"butterfly", "single source, two sinks; bottleneck C->D", 1, false},
    {"butterfly-two-way", "two senders exchanging through A->B", 1, false},
    {"two-unicast", "one unicast path against a two-path unicast", 3, true},
    {"three-path-merging", "two-way merging A->B->C->D and three-way merging B->C", 2, false},
    {"picgv", "crossing mergings gamma1..gamma4 with an alternative path set", 4, true},
    {"stack-a", "[(1,2),(2,1)] on a (2,2) graph", 2, false},
    {"stack-b", "[(1,1),(2,1),(2,2),(3,2)] on a (3,2) graph", 4, false},
    {"aa-distinct", "(2,2) graph with alternating walks of lengths 1,4,1,4", 5, false},
    {"aa-identical", "identical-source (3,3) graph with psi walks 5,1,5", 4, false},
    {"two-three-extremal", "(2,3) graph with 8 mergings", 8, false},
    {"two-five-blocks", "(2,5) graph with six adjacent pairs in three mini-blocks", 11, false},
    {"one-two-two-extremal", "(1,2,2) graph with 8 mergings", 8, false},
    {"one-two-three-extremal", "(1,2,3) graph with 12 mergings", 12, false},
    {"two-two-edge-labeled", "the (2,2) graph with 5 mergings used as the base for (1,2,2)", 5, false},
};

}  // namespace

const std::vector<FixtureInfo>& fixture_catalog() { return kCatalog; }

MergeNetwork fixture(const std::string& name) {
    if (name == "butterfly") return butterfly();
    if (name == "butterfly-two-way") return butterfly_two_way();
    if (name == "two-unicast") return two_unicast();
    if (name == "three-path-merging") return three_path_merging();
    if (name == "picgv") return two_group_orders({{"g1", "g4"}, {"g3", "g2"}}, {{"g1", "g2"}, {"g3", "g4"}});
    if (name == "stack-a") return decode({2, 2, {{1, 2}, {2, 1}}, false});
    if (name == "stack-b") return decode({3, 2, {{1, 1}, {2, 1}, {2, 2}, {3, 2}}, false});
    if (name == "aa-distinct") return decode({2, 2, {{1, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 1}}, false});
    if (name == "aa-identical") return decode({3, 3, {{1, 2}, {1, 3}, {2, 3}, {2, 2}}, true});
    if (name == "two-three-extremal") return gen_two_n_extremal(3);
    if (name == "two-five-blocks") {
        // Letters run alphabetically along each phi path.
        return two_group_orders({{"A", "B", "C", "D", "E", "F"}, {"J", "K", "L", "M", "N"}},
                                {{"A", "J"}, {"B", "K", "D"}, {"L", "C"}, {"E", "N"}, {"F", "M"}});
    }
    if (name == "two-two-edge-labeled") return gen_two_n_extremal(2);
    // Both taken from the exhaustive extension search. The added path (group 0) meets
    // every base path once.
    if (name == "one-two-two-extremal") {
        return token_orders({1, 2, 2}, {{{0, 1, 2, 3}}, {{4, 1, 5}, {6, 2, 7}}, {{4, 6, 0}, {3, 5, 7}}});
    }
    if (name == "one-two-three-extremal") {
        return token_orders({1, 2, 3},
                            {{{0, 1, 2, 3, 4}}, {{2, 5, 6, 7, 8}, {3, 9, 10, 11}}, {{4, 5, 9, 7, 11}, {0, 6}, {1, 8, 10}}});
    }
    throw MergeError(ErrorKind::UnknownFixture, "no fixture named \"" + name + "\"");
}

// ---- recipes ----

namespace {

int floor_sq4(int k) { return k * k / 4; }

}  // namespace

std::vector<std::string> family_names() {
    return {"two-n", "e", "f", "h", "ones-two-chain", "ones-two-grid", "ones-n", "one-two-n", "mn-lower"};
}

Recipe recipe(const std::string& family, const std::vector<int>& params) {
    auto want = [&](std::size_t count) {
        require(params.size() == count, ErrorKind::ParseError,
                "family " + family + " takes " + std::to_string(count) + " parameter(s)");
    };
    Recipe r{family, params, 0, true};
    if (family == "two-n") {
        want(1);
        r.expected_mergings = 3 * params[0] - 1;
    } else if (family == "e") {
        want(1);
        r.expected_mergings = (params[0] - 1) * (params[0] - 1);
    } else if (family == "f") {
        want(1);
        r.expected_mergings = 2 * params[0] * params[0] - 3 * params[0] + 2;
    } else if (family == "h") {
        want(1);
        r.expected_mergings = params[0];
    } else if (family == "ones-two-chain") {
        want(1);
        r.expected_mergings = 3 * params[0] - 1;
    } else if (family == "ones-two-grid") {
        want(1);
        r.expected_mergings = floor_sq4(params[0]) + params[0] + 2;
    } else if (family == "ones-n") {
        want(2);
        r.expected_mergings = params[1] * params[0] + floor_sq4(params[0]);
    } else if (family == "one-two-n") {
        want(1);
        r.expected_mergings = 4 * params[0] + 1;
    } else if (family == "mn-lower") {
        want(2);
        r.expected_mergings = 2 * params[0] * params[1] - params[0] - params[1] + 1;
    } else {
        throw MergeError(ErrorKind::ParseError, "unknown family \"" + family + "\"");
    }
    for (int p : params) require_param(p, 1, "every parameter");
    return r;
}

MergeNetwork Recipe::build() const {
    if (family == "two-n") return gen_two_n_extremal(params[0]);
    if (family == "e") return gen_e(params[0]);
    if (family == "f") return gen_f(params[0]);
    if (family == "h") return gen_h(params[0]);
    if (family == "ones-two-chain") return gen_ones_two_chain(params[0]);
    if (family == "ones-two-grid") return gen_ones_two_grid(params[0]);
    if (family == "ones-n") return gen_ones_n(params[0], params[1]);
    if (family == "one-two-n") return gen_one_two_n(params[0]);
    if (family == "mn-lower") return gen_mn_lower(params[0], params[1]);
    throw MergeError(ErrorKind::ParseError, "unknown family \"" + family + "\"");
}

std::string Recipe::label() const {
    std::string s = family + "(";
    for (std::size_t k = 0; k < params.size(); ++k) s += (k ? "," : "") + std::to_string(params[k]);
    return s + ")";
}

}  // namespace mergecalc
