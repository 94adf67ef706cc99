#include <doctest.h>

#include <random>
#include <set>

#include "mergecalc/dag.hpp"
#include "mergecalc/error.hpp"
#include "mergecalc/flow.hpp"
#include "mergecalc/network.hpp"
#include "oracles.hpp"

using namespace mergecalc;

namespace {

// Butterfly: S feeds A and B, both reach C, C->D is the bottleneck.
struct Butterfly {
    Dag dag;
    VertexId S, A, B, C, D, R1, R2;
    Butterfly() {
        S = dag.add_vertex("S");
        A = dag.add_vertex("A");
        B = dag.add_vertex("B");
        C = dag.add_vertex("C");
        D = dag.add_vertex("D");
        R1 = dag.add_vertex("R1");
        R2 = dag.add_vertex("R2");
        dag.add_edge(S, A);   // 0
        dag.add_edge(S, B);   // 1
        dag.add_edge(A, R1);  // 2
        dag.add_edge(A, C);   // 3
        dag.add_edge(B, C);   // 4
        dag.add_edge(B, R2);  // 5
        dag.add_edge(C, D);   // 6
        dag.add_edge(D, R1);  // 7
        dag.add_edge(D, R2);  // 8
    }
};

std::size_t position(const std::vector<VertexId>& order, VertexId v) {
    return static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin());
}

}  // namespace

TEST_CASE("topological order") {
    Dag one;
    one.add_vertex();
    CHECK(topological_order(one) == std::vector<VertexId>{0});

    Dag loop;
    auto a = loop.add_vertex("a");
    auto b = loop.add_vertex("b");
    loop.add_edge(a, b);
    loop.add_edge(b, a);
    CHECK_THROWS_AS(topological_order(loop), MergeError);
    CHECK_FALSE(is_acyclic(loop));

    Butterfly bf;
    auto order = topological_order(bf.dag);
    CHECK(position(order, bf.S) < position(order, bf.C));
    CHECK(position(order, bf.C) < position(order, bf.D));
    CHECK(position(order, bf.D) < position(order, bf.R1));
    CHECK(position(order, bf.D) < position(order, bf.R2));
    for (const auto& e : bf.dag.edges()) CHECK(position(order, e.tail) < position(order, e.head));
}

TEST_CASE("min cut and menger paths on small graphs") {
    Dag line;
    auto u = line.add_vertex();
    auto v = line.add_vertex();
    line.add_edge(u, v);
    CHECK(min_cut(line, u, v) == 1);
    CHECK(menger_paths(line, u, v) == std::vector<Path>{{0}});
    CHECK(all_menger_path_sets(line, u, v, 10).sets.size() == 1);
    CHECK_THROWS_AS(min_cut(line, u, 7), MergeError);
    CHECK_THROWS_AS(menger_paths(line, v, u), MergeError);

    Butterfly bf;
    CHECK(min_cut(bf.dag, bf.S, bf.R1) == 2);
    auto paths = menger_paths(bf.dag, bf.S, bf.R1);
    std::set<Path> got(paths.begin(), paths.end());
    // S->A->R1 and S->B->C->D->R1
    CHECK(got == std::set<Path>{{0, 2}, {1, 4, 6, 7}});
}

TEST_CASE("flow agrees with brute-force disjoint families on random graphs") {
    std::mt19937 rng(7);
    for (int round = 0; round < 300; ++round) {
        Dag dag;
        std::uniform_int_distribution<int> nv(3, 6);
        int n = nv(rng);
        for (int k = 0; k < n; ++k) dag.add_vertex();
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::uniform_int_distribution<int> ne(2, 12);
        int edges = ne(rng);
        for (int k = 0; k < edges; ++k) {
            int a = pick(rng);
            int b = pick(rng);
            if (a != b) dag.add_edge(std::min(a, b), std::max(a, b));
        }
        VertexId s = 0;
        VertexId t = n - 1;
        int cut = min_cut(dag, s, t);
        REQUIRE(cut == oracle::max_disjoint(dag, s, t));
        if (cut == 0) continue;
        auto paths = menger_paths(dag, s, t);
        REQUIRE(static_cast<int>(paths.size()) == cut);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            for (std::size_t j = i + 1; j < paths.size(); ++j) CHECK(oracle::disjoint(paths[i], paths[j]));
        }
        auto sets = all_menger_path_sets(dag, s, t, 100000);
        CHECK(sets.complete);
        CHECK(sets.sets.size() == oracle::count_max_families(dag, s, t));
    }
}

TEST_CASE("path set enumeration budget") {
    Dag dag;
    auto a = dag.add_vertex();
    auto b = dag.add_vertex();
    auto c = dag.add_vertex();
    for (int k = 0; k < 4; ++k) dag.add_edge(a, b);
    for (int k = 0; k < 4; ++k) dag.add_edge(b, c);
    // cut 4 through b: 4! pairings of in/out edges
    CHECK(all_menger_path_sets(dag, a, c, 1000).sets.size() == 24);
    auto partial = all_menger_path_sets(dag, a, c, 5);
    CHECK_FALSE(partial.complete);
    CHECK(partial.sets.size() == 5);
    CHECK_THROWS_AS(all_menger_path_sets(dag, a, c, 5, true), MergeError);
}

TEST_CASE("coverage, validation and reduction") {
    Butterfly bf;
    MergeNetwork net;
    net.dag = bf.dag;
    net.mode = SourceMode::Identical;
    net.groups.push_back({bf.S, bf.R1, {{0, 2}, {1, 4, 6, 7}}});
    net.groups.push_back({bf.S, bf.R2, {{0, 3, 6, 8}, {1, 5}}});
    CHECK_NOTHROW(validate(net));
    CHECK_NOTHROW(validate_cuts(net));
    CHECK(is_covered(net));

    MergeNetwork extra = net;
    auto x = extra.dag.add_vertex("X");
    extra.dag.add_edge(bf.A, x);
    CHECK_FALSE(is_covered(extra));
    CHECK_THROWS_AS(reduce(extra), MergeError);

    // Subdividing C->D and reducing gives back the same shape.
    auto red = reduce(net);
    CHECK(red.dag.edge_count() == net.dag.edge_count());
    CHECK(red.dag.vertex_count() == net.dag.vertex_count());
    CHECK(reduce(red).dag.edge_count() == red.dag.edge_count());

    MergeNetwork sub = net;
    auto mid = sub.dag.add_vertex("M");
    auto tail_piece = sub.dag.add_edge(mid, bf.D);
    sub.dag.set_head(6, mid);
    for (auto& grp : sub.groups) {
        for (auto& p : grp.paths) {
            auto it = std::find(p.begin(), p.end(), 6);
            if (it != p.end()) p.insert(it + 1, tail_piece);
        }
    }
    CHECK_NOTHROW(validate(sub));
    auto back = reduce(sub);
    CHECK(back.dag.edge_count() == net.dag.edge_count());
    CHECK(back.dag.vertex_count() == net.dag.vertex_count());
    CHECK(back.dag.find_vertex("M") == -1);

    MergeNetwork bad = net;
    bad.groups[1].paths[0] = {0, 2};
    CHECK_THROWS_AS(validate(bad), MergeError);
}

TEST_CASE("edge limit") {
    Dag dag;
    auto a = dag.add_vertex();
    auto b = dag.add_vertex();
    for (int k = 0; k < 20; ++k) dag.add_edge(a, b);
    setenv("MERGE_MAX_EDGES", "10", 1);
    CHECK_THROWS_AS(min_cut(dag, a, b), MergeError);
    unsetenv("MERGE_MAX_EDGES");
    CHECK(min_cut(dag, a, b) == 20);
}
