#pragma once

#include <string>
#include <vector>

#include "mergecalc/network.hpp"

namespace mergecalc {

// Abstract description of a network by the order in which each path meets shared
// edges ("tokens"). Every token becomes one shared edge h->t; consecutive stations on
// a path are joined by private edges. Most generators are written against this.
struct Layout {
    std::vector<int> group_sizes;
    int token_count = 0;
    // orders[g][p] = token ids met by path p of group g, in path order.
    std::vector<std::vector<std::vector<int>>> orders;
    // Identical source: one source S, and path i of groups 0 and 1 share S->w_i first.
    bool identical = false;
    int starting_pairs = 0;

    explicit Layout(std::vector<int> sizes = {});
    int add_token();
    void visit(int group, int path, int token) {
        orders.at(static_cast<std::size_t>(group)).at(static_cast<std::size_t>(path)).push_back(token);
    }
};

// Throws CycleDetected when the per-path orders cannot be realized acyclically.
// Output is reduced and covered; vertex labels are S<g>, R<g>, h<k>, t<k> (1-based),
// plus S and w<i> in identical mode.
MergeNetwork build_layout(const Layout& layout);

}  // namespace mergecalc
