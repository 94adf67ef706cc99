#pragma once

#include <cstddef>
#include <vector>

#include "mergecalc/dag.hpp"
#include "mergecalc/network.hpp"

namespace mergecalc {

// Unit-capacity max-flow value between u and v (edge-disjoint path count).
int min_cut(const Dag& dag, VertexId u, VertexId v);

// min_cut(u,v) edge-disjoint u->v paths from one integral flow. Augmentation and
// decomposition both prefer the lowest edge id, so results are reproducible.
std::vector<Path> menger_paths(const Dag& dag, VertexId u, VertexId v);

// A path set is stored with its paths sorted, so equal sets compare equal.
using PathSet = std::vector<Path>;

struct PathSetEnumeration {
    std::vector<PathSet> sets;
    bool complete = true;
};

// Every distinct set of min_cut(u,v) edge-disjoint u->v paths, up to `budget` sets.
// Throws BudgetExceeded when `strict` is set and the budget runs out; otherwise the
// partial list comes back with complete=false.
PathSetEnumeration all_menger_path_sets(const Dag& dag, VertexId u, VertexId v, std::size_t budget,
                                        bool strict = false);

// All simple u->v paths in edge-id lexicographic order (DAG, so every walk is simple).
std::vector<Path> all_paths(const Dag& dag, VertexId u, VertexId v, std::size_t budget, bool* complete = nullptr);

}  // namespace mergecalc
