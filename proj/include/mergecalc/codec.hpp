#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mergecalc/network.hpp"

namespace mergecalc {

using Stroke = std::pair<int, int>;  // (phi index, psi index), 1-based

struct MergingSequence {
    int m = 0;
    int n = 0;
    std::vector<Stroke> strokes;
    // Identical source: S->w_i is shared by phi_i and psi_i before any stroke. Needs m == n.
    bool identical = false;

    friend bool operator==(const MergingSequence&, const MergingSequence&) = default;
};

// Index ranges and mode constraints. Throws InvalidStrokeError at the first bad entry.
void validate(const MergingSequence& seq);

// Checks that seq describes `net`: stroke k must be the next unused merging on phi_i, that
// merging must be with psi_j, and it must lie past every merging already drawn on psi_j.
// Ordering violations only make sense against a target graph, so this is where they show.
void validate_against(const MergingSequence& seq, const MergeNetwork& net);

// Reduced covered network; stroke k becomes the k-th merging, placed after all earlier
// mergings on both of its paths.
MergeNetwork decode(const MergingSequence& seq);

// Lexicographically smallest stroke order among the orders consistent with the graph.
// Throws NotTwoGroup / MultiwayMerging.
MergingSequence encode(const MergeNetwork& net);

// Minimum encoding over all path relabelings (phi x psi, or simultaneous in identical mode).
std::string canonical_key(const MergingSequence& seq);
std::string canonical_key(const MergeNetwork& net);

// "m n : (i,j) (i,j) ..."; identical mode writes "m n * : ...".
std::string format_sequence(const MergingSequence& seq);
MergingSequence parse_sequence(const std::string& text);

}  // namespace mergecalc
