#pragma once

#include <string>
#include <vector>

#include "mergecalc/codec.hpp"
#include "mergecalc/network.hpp"

namespace mergecalc {

// ---- sequence-defined families ----

MergingSequence two_n_sequence(int n);  // (2,n), 3n-1 strokes
MergingSequence e_sequence(int n);      // identical source (n,n), (n-1)^2 strokes
MergingSequence f_sequence(int n);      // (n,n), 2n^2-3n+2 strokes
MergingSequence h_sequence(int k);      // (1,k), k strokes

MergeNetwork gen_two_n_extremal(int n);
MergeNetwork gen_e(int n);
MergeNetwork gen_f(int n);
MergeNetwork gen_h(int k);

// Multi-group families. Groups 0..k-1 hold the single paths, the last group the
// bundle of 2 (or n) paths.
MergeNetwork gen_ones_two_chain(int k);
MergeNetwork gen_ones_two_grid(int k);
MergeNetwork gen_ones_n(int k, int n);
// Groups: the added path, the 2-path bundle, the n-path bundle. Needs n >= 4.
MergeNetwork gen_one_two_n(int n);

// ---- splicing ----

// F is an (n,n) graph whose last merging on phi_1 is also last on psi_n (true for gen_f).
// g is a (k,n) distinct-source graph; its paths are relabeled so the first stroke of
// encode(g) becomes (1,n). Result: (k+n-1, n).
MergeNetwork concat_f_g(const MergeNetwork& f_graph, const MergeNetwork& g);

// Non-reroutable (m,n) graph with 2mn-m-n+1 mergings, any m,n >= 1.
MergeNetwork gen_mn_lower(int m, int n);

// Two identical-source (n,n) graphs with n starting subpaths each; g2 is reversed and
// glued in front of g1. Distinct-source (n,n) result.
MergeNetwork concat_back_to_back(const MergeNetwork& g1, const MergeNetwork& g2);

// g1: identical-source (n+1,n+1) whose last phi and first psi never merge.
// g2: identical-source (n-1,n-1), n >= 2. Distinct-source (n,n) result.
MergeNetwork concat_shifted(const MergeNetwork& g1, const MergeNetwork& g2);

// Parts are identical-source (n_j, N) graphs, n_1 <= n_2 <= ... <= N. Result has one
// source and groups n_1, ..., n_{k-1}, N.
MergeNetwork concat_chain(const std::vector<MergeNetwork>& parts);

// Adds direct source->sink paths to group 1 until it has `total` paths.
MergeNetwork widen_psi(const MergeNetwork& net, int total);

// Same graph with group 0 and group 1 exchanged.
MergeNetwork swap_groups(const MergeNetwork& net);

// ---- fixtures ----

struct FixtureInfo {
    std::string name;
    std::string description;
    int mergings = 0;
    bool reroutable = false;
};

const std::vector<FixtureInfo>& fixture_catalog();
MergeNetwork fixture(const std::string& name);  // throws UnknownFixture

// ---- uniform access for sweeps and the CLI ----

struct Recipe {
    std::string family;
    std::vector<int> params;
    int expected_mergings = 0;
    bool expected_nonreroutable = true;

    MergeNetwork build() const;
    std::string label() const;
};

// Families: two-n (n), e (n), f (n), h (k), ones-two-chain (k), ones-two-grid (k),
// ones-n (k n), one-two-n (n), mn-lower (m n).
Recipe recipe(const std::string& family, const std::vector<int>& params);
std::vector<std::string> family_names();

}  // namespace mergecalc
