#pragma once

#include <optional>
#include <vector>

#include "mergecalc/dag.hpp"

namespace mergecalc {

using Path = std::vector<EdgeId>;

struct PathGroup {
    VertexId source = -1;
    VertexId sink = -1;
    std::vector<Path> paths;

    int cut() const { return static_cast<int>(paths.size()); }
};

enum class SourceMode { Distinct, Identical };

struct MergeNetwork {
    Dag dag;
    std::vector<PathGroup> groups;
    SourceMode mode = SourceMode::Distinct;
    // Identical-source only: entry i is the shared prefix of paths i in groups 0 and 1.
    std::vector<Path> starting_subpaths;
};

struct PathRef {
    int group = 0;
    int path = 0;

    friend bool operator==(const PathRef&, const PathRef&) = default;
    friend auto operator<=>(const PathRef&, const PathRef&) = default;
};

// Structural checks: acyclic, paths are walks source->sink, no repeated edge,
// edge-disjoint within each group, source/sink conventions of the mode.
// Throws MalformedNetwork / CycleDetected. min-cut equality is checked separately
// by validate_cuts because it costs a flow computation per group.
void validate(const MergeNetwork& net);
void validate_cuts(const MergeNetwork& net);

bool is_covered(const MergeNetwork& net);

// For every edge, the (group, path, position) triples that traverse it.
struct Occurrence {
    PathRef ref;
    int position;
};
std::vector<std::vector<Occurrence>> edge_occurrences(const MergeNetwork& net);

const Path& path_of(const MergeNetwork& net, PathRef ref);

// Contracts non-terminal vertices with in-degree 1 and out-degree 1.
MergeNetwork reduce(const MergeNetwork& net);

// Drops deleted edges (marked in `keep` false) and vertices left isolated that are not
// group terminals; renumbers densely. Paths must not reference dropped edges.
MergeNetwork compact(const MergeNetwork& net, const std::vector<bool>& keep_edge);

// Reverses every edge; sources become sinks, paths are reversed.
MergeNetwork reversed(const MergeNetwork& net);

}  // namespace mergecalc
