#include "mergecalc/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "mergecalc/error.hpp"

namespace mergecalc {

std::vector<MergedSubpath> find_mergings(const MergeNetwork& net) {
    check_edge_limit(net.dag);
    const auto occ = edge_occurrences(net);
    std::vector<MergedSubpath> out;
    for (std::size_t e = 0; e < occ.size(); ++e) {
        const auto& here = occ[e];
        if (here.size() < 2) continue;
        std::set<EdgeId> preds;
        for (const auto& o : here) {
            if (o.position > 0) preds.insert(path_of(net, o.ref)[static_cast<std::size_t>(o.position - 1)]);
        }
        if (preds.size() < 2) continue;

        MergedSubpath m;
        m.start_edge = static_cast<EdgeId>(e);
        for (const auto& o : here) m.participants.push_back(o.ref);
        std::sort(m.participants.begin(), m.participants.end());
        m.run.push_back(m.start_edge);
        // Extend while every participant continues on the same edge.
        for (int step = 1;; ++step) {
            EdgeId next = -1;
            bool shared = true;
            for (const auto& o : here) {
                const auto& path = path_of(net, o.ref);
                auto k = static_cast<std::size_t>(o.position + step);
                if (k >= path.size()) {
                    shared = false;
                    break;
                }
                if (next == -1) next = path[k];
                if (path[k] != next) {
                    shared = false;
                    break;
                }
            }
            if (!shared) break;
            m.run.push_back(next);
        }
        m.head = net.dag.edge(m.start_edge).tail;
        m.tail = net.dag.edge(m.run.back()).head;
        out.push_back(std::move(m));
    }
    return out;
}

int count_mergings(const MergeNetwork& net) { return static_cast<int>(find_mergings(net).size()); }

int count_high_indegree_vertices(const MergeNetwork& net) {
    std::set<VertexId> sinks;
    for (const auto& g : net.groups) sinks.insert(g.sink);
    int count = 0;
    for (std::size_t v = 0; v < net.dag.vertex_count(); ++v) {
        auto vid = static_cast<VertexId>(v);
        if (!sinks.count(vid) && net.dag.in_edges(vid).size() >= 2) ++count;
    }
    return count;
}

namespace {

// Adjacency of the graph in which edges carried only by `group` are reversed.
std::vector<std::vector<VertexId>> partially_reversed(const MergeNetwork& net, int group, ReverseRule rule) {
    const auto occ = edge_occurrences(net);
    std::vector<std::vector<VertexId>> adj(net.dag.vertex_count());
    auto mine = [&](const Occurrence& o) { return o.ref.group == group; };
    for (const auto& e : net.dag.edges()) {
        const auto& here = occ[static_cast<std::size_t>(e.id)];
        bool flip = rule == ReverseRule::OnlyGroup
                        ? !here.empty() && std::all_of(here.begin(), here.end(), mine)
                        : std::any_of(here.begin(), here.end(), mine);
        if (flip) {
            adj[static_cast<std::size_t>(e.head)].push_back(e.tail);
        } else {
            adj[static_cast<std::size_t>(e.tail)].push_back(e.head);
        }
    }
    return adj;
}

// Vertices reachable from `from` by a non-empty path.
std::vector<char> reach_nonempty(const std::vector<std::vector<VertexId>>& adj, VertexId from) {
    std::vector<char> seen(adj.size(), 0);
    std::deque<VertexId> queue;
    for (VertexId w : adj[static_cast<std::size_t>(from)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            queue.push_back(w);
        }
    }
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId w : adj[static_cast<std::size_t>(x)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

bool SemiReach::contains(EndpointRef from, EndpointRef to) const {
    return std::find(relation.begin(), relation.end(), std::make_pair(from, to)) != relation.end();
}

SemiReach semi_reach(const MergeNetwork& net, int group, ReverseRule rule) {
    if (group < 0 || static_cast<std::size_t>(group) >= net.groups.size()) {
        throw MergeError(ErrorKind::MalformedNetwork, "no group " + std::to_string(group));
    }
    SemiReach sr;
    sr.group_index = group;
    const auto mergings = find_mergings(net);
    if (mergings.empty()) return sr;
    const auto adj = partially_reversed(net, group, rule);
    std::vector<std::pair<EndpointRef, VertexId>> endpoints;
    for (std::size_t k = 0; k < mergings.size(); ++k) {
        endpoints.push_back({{static_cast<int>(k), Endpoint::Head}, mergings[k].head});
        endpoints.push_back({{static_cast<int>(k), Endpoint::Tail}, mergings[k].tail});
    }
    for (const auto& [from, fv] : endpoints) {
        auto seen = reach_nonempty(adj, fv);
        for (const auto& [to, tv] : endpoints) {
            if (seen[static_cast<std::size_t>(tv)]) sr.relation.push_back({from, to});
        }
    }
    return sr;
}

RerouteWitness reroute_witness(const MergeNetwork& net) {
    const auto mergings = find_mergings(net);
    RerouteWitness w;
    for (std::size_t g = 0; g < net.groups.size(); ++g) {
        w.group = static_cast<int>(g);
        const auto adj = partially_reversed(net, w.group, ReverseRule::AnyGroup);
        for (std::size_t k = 0; k < mergings.size(); ++k) {
            if (reach_nonempty(adj, mergings[k].head)[static_cast<std::size_t>(mergings[k].head)]) {
                w.kind = RerouteKind::HeadSelfReach;
                w.merging = static_cast<int>(k);
                w.vertex = mergings[k].head;
                return w;
            }
        }
    }
    // Rerouting that no merging head sees: a residual cycle through crossing vertices
    // only, or two paths of one group passing the same vertex (swap their suffixes).
    for (std::size_t g = 0; g < net.groups.size(); ++g) {
        w.group = static_cast<int>(g);
        const auto adj = partially_reversed(net, w.group, ReverseRule::AnyGroup);
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (reach_nonempty(adj, static_cast<VertexId>(v))[v]) {
                w.kind = RerouteKind::ResidualCycle;
                w.vertex = static_cast<VertexId>(v);
                return w;
            }
        }
        std::vector<int> through(net.dag.vertex_count(), 0);
        for (const auto& p : net.groups[g].paths) {
            for (std::size_t k = 0; k + 1 < p.size(); ++k) {
                VertexId x = net.dag.edge(p[k]).head;
                if (++through[static_cast<std::size_t>(x)] == 2) {
                    w.kind = RerouteKind::Crossing;
                    w.vertex = x;
                    return w;
                }
            }
        }
    }
    return {};
}

bool is_reroutable(const MergeNetwork& net) { return reroute_witness(net).kind != RerouteKind::None; }

bool brute_force_reroutable(const MergeNetwork& net, std::size_t budget) {
    for (const auto& grp : net.groups) {
        // Two sets settle the question, so the search stops there.
        auto sets = all_menger_path_sets(net.dag, grp.source, grp.sink, std::min<std::size_t>(budget, 2));
        if (sets.sets.size() >= 2) return true;
    }
    return false;
}

MinimizeResult minimize_mergings(const MergeNetwork& net, std::size_t budget) {
    std::vector<std::vector<PathSet>> choices;
    std::size_t total = 1;
    for (const auto& grp : net.groups) {
        auto sets = all_menger_path_sets(net.dag, grp.source, grp.sink, budget, true);
        total *= sets.sets.size();
        if (total > budget) throw MergeError(ErrorKind::BudgetExceeded, "too many path-set combinations");
        choices.push_back(std::move(sets.sets));
    }
    MinimizeResult best;
    best.value = std::numeric_limits<int>::max();
    best.combinations = total;
    std::vector<std::size_t> pick(choices.size(), 0);
    MergeNetwork trial = net;
    trial.starting_subpaths.clear();
    for (std::size_t done = 0; done < total; ++done) {
        for (std::size_t g = 0; g < choices.size(); ++g) trial.groups[g].paths = choices[g][pick[g]];
        int value = count_mergings(trial);
        if (value < best.value) {
            best.value = value;
            best.witness.clear();
            for (std::size_t g = 0; g < choices.size(); ++g) best.witness.push_back(choices[g][pick[g]]);
        }
        for (std::size_t g = 0; g < pick.size(); ++g) {
            if (++pick[g] < choices[g].size()) break;
            pick[g] = 0;
        }
    }
    return best;
}

TwoGroupView two_group_view(const MergeNetwork& net) {
    if (net.groups.size() != 2) throw MergeError(ErrorKind::NotTwoGroup, "network has " + std::to_string(net.groups.size()) + " groups");
    TwoGroupView view;
    view.mergings = find_mergings(net);
    view.on_phi.assign(net.groups[0].paths.size(), {});
    view.on_psi.assign(net.groups[1].paths.size(), {});
    const auto occ = edge_occurrences(net);
    for (std::size_t k = 0; k < view.mergings.size(); ++k) {
        const auto& m = view.mergings[k];
        const auto& here = occ[static_cast<std::size_t>(m.start_edge)];
        if (here.size() != 2 || here[0].ref.group == here[1].ref.group) {
            throw MergeError(ErrorKind::MultiwayMerging, "merging at edge " + std::to_string(m.start_edge) + " is not two-way");
        }
        TwoGroupView::Merge info;
        for (const auto& o : here) {
            if (o.ref.group == 0) {
                info.phi = o.ref.path;
                info.phi_pos = o.position;
            } else {
                info.psi = o.ref.path;
                info.psi_pos = o.position;
            }
        }
        view.info.push_back(info);
        view.on_phi[static_cast<std::size_t>(info.phi)].push_back(static_cast<int>(k));
        view.on_psi[static_cast<std::size_t>(info.psi)].push_back(static_cast<int>(k));
    }
    for (auto& list : view.on_phi) {
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            return view.info[static_cast<std::size_t>(a)].phi_pos < view.info[static_cast<std::size_t>(b)].phi_pos;
        });
    }
    for (auto& list : view.on_psi) {
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            return view.info[static_cast<std::size_t>(a)].psi_pos < view.info[static_cast<std::size_t>(b)].psi_pos;
        });
    }
    return view;
}

namespace {

struct Walker {
    const MergeNetwork& net;
    TwoGroupView view;
    bool identical;
    AaSequence seq;
    std::set<std::pair<int, int>> seen;

    Walker(const MergeNetwork& n) : net(n), view(two_group_view(n)), identical(n.mode == SourceMode::Identical) {}

    void visit(VertexId v, int phi, int psi, bool starting) {
        if (!seen.insert({phi, psi}).second) {
            throw MergeError(ErrorKind::RerouteDetected, "path pair (" + std::to_string(phi) + "," + std::to_string(psi) +
                                                             ") repeats in one alternating walk");
        }
        seq.visits.push_back({v, phi, psi, starting});
    }

    // Next merging strictly after `pos` on phi path `phi`, or -1.
    int next_on_phi(int phi, int pos) const {
        for (int k : view.on_phi[static_cast<std::size_t>(phi)]) {
            if (view.info[static_cast<std::size_t>(k)].phi_pos > pos) return k;
        }
        return -1;
    }

    int prev_on_psi(int psi, int pos) const {
        int found = -1;
        for (int k : view.on_psi[static_cast<std::size_t>(psi)]) {
            if (view.info[static_cast<std::size_t>(k)].psi_pos < pos) found = k;
        }
        return found;
    }

    bool has_start(int psi) const {
        return identical && static_cast<std::size_t>(psi) < net.starting_subpaths.size();
    }

    // Go against psi from position pos; returns false when the walk ended at S2.
    bool against_psi(int psi, int pos, int& phi_out, int& phi_pos_out) {
        int q = prev_on_psi(psi, pos);
        if (q >= 0) {
            const auto& info = view.info[static_cast<std::size_t>(q)];
            visit(view.mergings[static_cast<std::size_t>(q)].tail, info.phi, info.psi, false);
            phi_out = info.phi;
            phi_pos_out = info.phi_pos;
            return true;
        }
        if (has_start(psi)) {
            const auto& omega = net.starting_subpaths[static_cast<std::size_t>(psi)];
            visit(net.dag.edge(omega.back()).head, psi, psi, true);
            phi_out = psi;
            phi_pos_out = static_cast<int>(omega.size()) - 1;
            return true;
        }
        seq.terminus = AaTerminus::S2;
        return false;
    }

    // Go along phi from position pos; returns false when the walk ended at R1.
    bool along_phi(int phi, int pos, int& psi_out, int& psi_pos_out) {
        int k = next_on_phi(phi, pos);
        if (k < 0) {
            seq.terminus = identical ? AaTerminus::R1Identical : AaTerminus::R1;
            return false;
        }
        const auto& info = view.info[static_cast<std::size_t>(k)];
        visit(view.mergings[static_cast<std::size_t>(k)].head, info.phi, info.psi, false);
        psi_out = info.psi;
        psi_pos_out = info.psi_pos;
        return true;
    }
};

}  // namespace

AaSequence phi_aa_sequence(const MergeNetwork& net, int phi_index) {
    if (net.mode == SourceMode::Identical) {
        throw MergeError(ErrorKind::PhiWalkUnsupported, "phi walks are undefined with an identical source");
    }
    Walker w(net);
    if (phi_index < 0 || static_cast<std::size_t>(phi_index) >= w.view.on_phi.size()) {
        throw MergeError(ErrorKind::MalformedNetwork, "no phi path " + std::to_string(phi_index));
    }
    w.seq.kind = AaKind::Phi;
    w.seq.start_index = phi_index;
    int phi = phi_index;
    int pos = -1;
    for (;;) {
        int psi = 0;
        int psi_pos = 0;
        if (!w.along_phi(phi, pos, psi, psi_pos)) break;
        if (!w.against_psi(psi, psi_pos, phi, pos)) break;
    }
    return w.seq;
}

AaSequence psi_aa_sequence(const MergeNetwork& net, int psi_index) {
    Walker w(net);
    if (psi_index < 0 || static_cast<std::size_t>(psi_index) >= w.view.on_psi.size()) {
        throw MergeError(ErrorKind::MalformedNetwork, "no psi path " + std::to_string(psi_index));
    }
    w.seq.kind = AaKind::Psi;
    w.seq.start_index = psi_index;
    int psi = psi_index;
    int pos = std::numeric_limits<int>::max();
    for (;;) {
        int phi = 0;
        int phi_pos = 0;
        if (!w.against_psi(psi, pos, phi, phi_pos)) break;
        if (!w.along_phi(phi, phi_pos, psi, pos)) break;
    }
    return w.seq;
}

AaIdentity aa_merging_identity(const MergeNetwork& net) {
    // The walks can close up on themselves without revisiting a pair once a group has a
    // second path set, so the loop detector alone does not catch every reroutable input.
    if (is_reroutable(net)) throw MergeError(ErrorKind::RerouteDetected, "alternating walks need a non-reroutable network");
    AaIdentity id;
    auto view = two_group_view(net);
    id.lhs = static_cast<int>(view.mergings.size());
    const int m = static_cast<int>(view.on_phi.size());
    const int n = static_cast<int>(view.on_psi.size());
    if (net.mode == SourceMode::Distinct) {
        for (int i = 0; i < m; ++i) id.sequences.push_back(phi_aa_sequence(net, i));
        for (int j = 0; j < n; ++j) id.sequences.push_back(psi_aa_sequence(net, j));
        for (int i = 0; i < m && id.positivity; ++i) {
            if (view.on_phi[static_cast<std::size_t>(i)].empty()) {
                id.positivity = false;
                id.note = "phi path " + std::to_string(i) + " never merges";
            }
        }
        for (int j = 0; j < n && id.positivity; ++j) {
            if (view.on_psi[static_cast<std::size_t>(j)].empty()) {
                id.positivity = false;
                id.note = "psi path " + std::to_string(j) + " never merges";
            }
        }
    } else {
        for (int j = 0; j < n; ++j) id.sequences.push_back(psi_aa_sequence(net, j));
        id.offset = static_cast<int>(net.starting_subpaths.size());
        if (m != n || id.offset != n) {
            id.positivity = false;
            id.note = "identical source needs n starting subpaths on an (n,n) network";
        }
    }
    for (const auto& s : id.sequences) id.sum_lengths += s.length();
    id.holds = 2 * id.lhs == id.sum_lengths - id.offset;
    return id;
}

BlockDecomposition block_decomposition(const MergeNetwork& net) {
    if (net.groups.size() != 2 || net.groups[0].paths.size() != 2) {
        throw MergeError(ErrorKind::NotTwoByN, "block decomposition needs a (2,n) network");
    }
    auto view = two_group_view(net);
    const auto reach = reachability(net.dag);
    auto smaller = [&](int a, int b) {
        if (a == b) return false;
        const auto& ia = view.info[static_cast<std::size_t>(a)];
        const auto& ib = view.info[static_cast<std::size_t>(b)];
        if (ia.phi == ib.phi) return ia.phi_pos < ib.phi_pos;
        if (ia.psi == ib.psi) return ia.psi_pos < ib.psi_pos;
        VertexId t = view.mergings[static_cast<std::size_t>(a)].tail;
        VertexId h = view.mergings[static_cast<std::size_t>(b)].head;
        return t == h || reach[static_cast<std::size_t>(t)][static_cast<std::size_t>(h)];
    };

    std::vector<SigmaPair> sigma;
    for (std::size_t j = 0; j < view.on_psi.size(); ++j) {
        const auto& list = view.on_psi[j];
        for (std::size_t k = 0; k + 1 < list.size(); ++k) {
            SigmaPair p;
            p.lambda = list[k];
            p.mu = list[k + 1];
            p.psi = static_cast<int>(j);
            p.type = view.info[static_cast<std::size_t>(p.lambda)].phi == 0 ? PairType::I : PairType::II;
            sigma.push_back(p);
        }
    }
    auto prec = [&](const SigmaPair& p, const SigmaPair& q) {
        return p.type == q.type ? smaller(p.lambda, q.lambda) : smaller(p.lambda, q.mu);
    };
    const std::size_t x = sigma.size();
    std::vector<int> wins(x, 0);
    for (std::size_t a = 0; a < x; ++a) {
        for (std::size_t b = 0; b < x; ++b) {
            if (a == b) continue;
            bool ab = prec(sigma[a], sigma[b]);
            bool ba = prec(sigma[b], sigma[a]);
            if (ab == ba) throw MergeError(ErrorKind::IncomparablePairs, "pair order is not total");
            if (ab) ++wins[a];
        }
    }
    std::vector<int> rank_seen(x, 0);
    for (int w : wins) {
        if (rank_seen[static_cast<std::size_t>(w)]++) throw MergeError(ErrorKind::IncomparablePairs, "pair order is not transitive");
    }
    BlockDecomposition bd;
    bd.theta.resize(x);
    for (std::size_t a = 0; a < x; ++a) bd.theta[x - 1 - static_cast<std::size_t>(wins[a])] = sigma[a];

    for (std::size_t a = 0; a < x; ++a) {
        if (a == 0 || bd.theta[a].type != bd.theta[a - 1].type) bd.mini_blocks.emplace_back();
        bd.mini_blocks.back().push_back(static_cast<int>(a));
    }
    auto largest_second = [&](const std::vector<int>& block) {
        int best = bd.theta[static_cast<std::size_t>(block[0])].mu;
        for (int idx : block) {
            int mu = bd.theta[static_cast<std::size_t>(idx)].mu;
            if (smaller(best, mu)) best = mu;
        }
        return best;
    };
    auto smallest_first = [&](const std::vector<int>& block) {
        int best = bd.theta[static_cast<std::size_t>(block[0])].lambda;
        for (int idx : block) {
            int lambda = bd.theta[static_cast<std::size_t>(idx)].lambda;
            if (smaller(lambda, best)) best = lambda;
        }
        return best;
    };
    for (std::size_t b = 0; b < bd.mini_blocks.size(); ++b) {
        bool linked = b > 0 && largest_second(bd.mini_blocks[b - 1]) == smallest_first(bd.mini_blocks[b]);
        if (!linked) bd.medium_blocks.emplace_back();
        bd.medium_blocks.back().push_back(static_cast<int>(b));
    }
    bd.x = static_cast<int>(x);
    bd.y = static_cast<int>(bd.mini_blocks.size());
    bd.z = static_cast<int>(bd.medium_blocks.size());
    return bd;
}

bool singleton_gap_property(const BlockDecomposition& bd) {
    for (const auto& medium : bd.medium_blocks) {
        int last_singleton = -1;
        bool big_since = false;
        for (std::size_t k = 0; k < medium.size(); ++k) {
            auto size = bd.mini_blocks[static_cast<std::size_t>(medium[k])].size();
            if (size == 1) {
                if (last_singleton >= 0 && !big_since) return false;
                last_singleton = static_cast<int>(k);
                big_since = false;
            } else if (size >= 3) {
                big_since = true;
            }
        }
    }
    return true;
}

}  // namespace mergecalc
