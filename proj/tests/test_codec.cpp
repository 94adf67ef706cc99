#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mergecalc/analysis.hpp"
#include "mergecalc/codec.hpp"
#include "mergecalc/constructions.hpp"
#include "mergecalc/error.hpp"
#include "oracles.hpp"

using namespace mergecalc;

namespace {

MergingSequence random_sequence(std::mt19937& rng, int max_side, int max_len) {
    std::uniform_int_distribution<int> side(1, max_side);
    std::uniform_int_distribution<int> len(0, max_len);
    MergingSequence seq{side(rng), side(rng), {}, false};
    const int count = len(rng);
    std::uniform_int_distribution<int> pi(1, seq.m);
    std::uniform_int_distribution<int> pj(1, seq.n);
    for (int k = 0; k < count; ++k) seq.strokes.push_back({pi(rng), pj(rng)});
    return seq;
}

MergeNetwork relabeled(const MergeNetwork& net, const std::vector<int>& phi, const std::vector<int>& psi) {
    MergeNetwork out = net;
    for (std::size_t i = 0; i < phi.size(); ++i) out.groups[0].paths[i] = net.groups[0].paths[static_cast<std::size_t>(phi[i])];
    for (std::size_t j = 0; j < psi.size(); ++j) out.groups[1].paths[j] = net.groups[1].paths[static_cast<std::size_t>(psi[j])];
    return out;
}

}  // namespace

TEST_CASE("decoding the stacked examples") {
    auto a = decode({2, 2, {{1, 2}, {2, 1}}, false});
    CHECK(count_mergings(a) == 2);
    CHECK(is_covered(a));
    auto b = decode({3, 2, {{1, 1}, {2, 1}, {2, 2}, {3, 2}}, false});
    CHECK(count_mergings(b) == 4);
    auto empty = decode({2, 3, {}, false});
    CHECK(count_mergings(empty) == 0);
    CHECK(empty.groups[0].cut() == 2);
    CHECK(empty.groups[1].cut() == 3);
    CHECK_NOTHROW(validate_cuts(b));
}

TEST_CASE("validation") {
    auto b = decode({3, 2, {{1, 1}, {2, 1}, {2, 2}, {3, 2}}, false});
    MergingSequence bad{3, 2, {{1, 1}, {2, 1}, {3, 2}, {2, 2}}, false};
    CHECK_NOTHROW(validate(bad));  // in range; the problem is relative to b
    try {
        validate_against(bad, b);
        FAIL("expected a rejection");
    } catch (const InvalidStrokeError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_NOTHROW(validate_against({3, 2, {{1, 1}, {2, 1}, {2, 2}, {3, 2}}, false}, b));

    CHECK_THROWS_AS(validate({2, 2, {{3, 1}}, false}), InvalidStrokeError);
    CHECK_THROWS_AS(validate({2, 2, {{1, 0}}, false}), InvalidStrokeError);
    CHECK_THROWS_AS(validate({2, 3, {}, true}), InvalidStrokeError);
    CHECK_NOTHROW(validate({3, 1, {{1, 1}, {2, 1}, {3, 1}}, false}));
    CHECK_NOTHROW(validate(two_n_sequence(5)));
}

TEST_CASE("encode picks the smallest stroke order") {
    auto a = decode({2, 2, {{2, 1}, {1, 2}}, false});
    auto seq = encode(a);
    CHECK(seq.strokes == std::vector<Stroke>{{1, 2}, {2, 1}});

    auto e4 = encode(gen_e(4));
    CHECK(e4.identical);
    // 0-based listing (0,1),(0,2),(0,3),(2,3),(1,3),(1,1),(1,2),(2,2),(2,1)
    CHECK(e4.strokes == std::vector<Stroke>{{1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 4}, {2, 2}, {2, 3}, {3, 3}, {3, 2}});
    CHECK(e_sequence(4).strokes == e4.strokes);
    CHECK(encode(gen_f(3)).strokes == f_sequence(3).strokes);

    CHECK_THROWS_AS(encode(fixture("three-path-merging")), MergeError);
    CHECK_THROWS_AS(encode(gen_ones_two_chain(2)), MergeError);
}

TEST_CASE("round trip on random sequences") {
    std::mt19937 rng(2024);
    for (int round = 0; round < 1000; ++round) {
        auto seq = random_sequence(rng, 4, 10);
        auto net = decode(seq);
        REQUIRE(is_covered(net));
        REQUIRE(is_acyclic(net.dag));
        CHECK(count_mergings(net) == static_cast<int>(seq.strokes.size()));
        auto back = encode(net);
        CHECK_NOTHROW(validate_against(back, net));
        auto again = decode(back);
        CHECK(oracle::meeting_signature(again) == oracle::meeting_signature(net));
        CHECK(again.dag.edge_count() == net.dag.edge_count());
        CHECK(encode(again) == back);
    }
}

TEST_CASE("canonical keys") {
    std::mt19937 rng(17);
    for (int round = 0; round < 200; ++round) {
        auto seq = random_sequence(rng, 3, 7);
        auto net = decode(seq);
        std::vector<int> phi(static_cast<std::size_t>(seq.m));
        std::vector<int> psi(static_cast<std::size_t>(seq.n));
        std::iota(phi.begin(), phi.end(), 0);
        std::iota(psi.begin(), psi.end(), 0);
        std::shuffle(phi.begin(), phi.end(), rng);
        std::shuffle(psi.begin(), psi.end(), rng);
        CHECK(canonical_key(relabeled(net, phi, psi)) == canonical_key(net));
        CHECK(canonical_key(net) == canonical_key(seq));
    }
    auto a = decode({2, 2, {{1, 2}, {2, 1}}, false});
    auto b = decode({3, 2, {{1, 1}, {2, 1}, {2, 2}, {3, 2}}, false});
    CHECK(canonical_key(a) != canonical_key(b));
    // crossing versus parallel pair of mergings on a (2,2) graph
    CHECK(canonical_key(decode({2, 2, {{1, 1}, {2, 2}}, false})) == canonical_key(decode({2, 2, {{1, 2}, {2, 1}}, false})));
    CHECK(canonical_key(decode({2, 2, {{1, 1}, {1, 2}}, false})) != canonical_key(decode({2, 2, {{1, 1}, {2, 1}}, false})));

    // identical source: phi_i and psi_i move together
    auto e3 = gen_e(3);
    auto swapped = relabeled(e3, {1, 0, 2}, {1, 0, 2});
    std::swap(swapped.starting_subpaths[0], swapped.starting_subpaths[1]);
    CHECK(canonical_key(swapped) == canonical_key(e3));
}

TEST_CASE("sequence text") {
    MergingSequence seq{2, 3, {{1, 1}, {2, 3}}, false};
    CHECK(format_sequence(seq) == "2 3 : (1,1) (2,3)");
    CHECK(parse_sequence("2 3 : (1,1) (2,3)") == seq);
    CHECK(parse_sequence("  2 3:(1,1)(2,3) ") == seq);
    auto e = e_sequence(3);
    CHECK(format_sequence(e) == "3 3 * : (1,2) (1,3) (2,3) (2,2)");
    CHECK(parse_sequence(format_sequence(e)) == e);
    CHECK(parse_sequence("1 1 :") == MergingSequence{1, 1, {}, false});
    CHECK_THROWS_AS(parse_sequence("2 3 (1,1)"), MergeError);
    CHECK_THROWS_AS(parse_sequence("2 : (1,1)"), MergeError);
    CHECK_THROWS_AS(parse_sequence("2 2 : (1,x)"), MergeError);
    CHECK_THROWS_AS(parse_sequence("2 2 + : (1,1)"), MergeError);
}
