#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mergecalc/flow.hpp"
#include "mergecalc/network.hpp"

namespace mergecalc {

struct MergedSubpath {
    EdgeId start_edge = -1;
    Path run;
    std::vector<PathRef> participants;  // sorted
    VertexId head = -1;                 // tail vertex of start_edge
    VertexId tail = -1;                 // head vertex of the last run edge
};

// One entry per start edge, ordered by start edge id.
std::vector<MergedSubpath> find_mergings(const MergeNetwork& net);
int count_mergings(const MergeNetwork& net);

// Non-sink vertices with in-degree >= 2; equals count_mergings on reduced covered
// networks whose mergings are two-way.
int count_high_indegree_vertices(const MergeNetwork& net);

enum class Endpoint { Head, Tail };

struct EndpointRef {
    int merging = 0;  // index into find_mergings
    Endpoint end = Endpoint::Head;

    friend bool operator==(const EndpointRef&, const EndpointRef&) = default;
    friend auto operator<=>(const EndpointRef&, const EndpointRef&) = default;
};

struct SemiReach {
    int group_index = 0;
    // (from, to): a non-empty directed path exists in the partially reversed graph.
    std::vector<std::pair<EndpointRef, EndpointRef>> relation;

    bool contains(EndpointRef from, EndpointRef to) const;
};

// OnlyGroup reverses the edges used by group `group` and no other group. AnyGroup also
// reverses edges it shares with other groups, which turns G' into the flow residual
// graph of that group. The two agree on two-group networks; with three or more groups
// only AnyGroup tracks actual rerouting (a (1,1,2) chain already separates them).
enum class ReverseRule { OnlyGroup, AnyGroup };

SemiReach semi_reach(const MergeNetwork& net, int group, ReverseRule rule = ReverseRule::OnlyGroup);

enum class RerouteKind { None, HeadSelfReach, ResidualCycle, Crossing };

struct RerouteWitness {
    RerouteKind kind = RerouteKind::None;
    int group = -1;
    int merging = -1;  // HeadSelfReach only
    VertexId vertex = -1;
};

// First looks for a merging head that semi-reaches itself under the AnyGroup rule. On
// graphs where some vertex is not a merging endpoint, rerouting can also hide in a
// residual cycle avoiding every head, or in two same-group paths crossing at a vertex.
RerouteWitness reroute_witness(const MergeNetwork& net);
bool is_reroutable(const MergeNetwork& net);

// Oracle: some group admits two or more Menger path sets.
bool brute_force_reroutable(const MergeNetwork& net, std::size_t budget = 200000);

struct MinimizeResult {
    int value = 0;
    std::vector<PathSet> witness;  // one path set per group
    std::size_t combinations = 0;
};

MinimizeResult minimize_mergings(const MergeNetwork& net, std::size_t budget = 200000);

// ---- alternating walks on two-group networks ----

enum class AaKind { Phi, Psi };
enum class AaTerminus { R1, S2, R1Identical };

struct AaStation {
    VertexId vertex = -1;
    int phi = 0;  // path indices, 0-based
    int psi = 0;
    bool starting = false;  // a starting subpath tail rather than a merging endpoint
};

struct AaSequence {
    AaKind kind = AaKind::Phi;
    int start_index = 0;
    std::vector<AaStation> visits;
    AaTerminus terminus = AaTerminus::R1;

    int length() const { return static_cast<int>(visits.size()); }
};

AaSequence phi_aa_sequence(const MergeNetwork& net, int phi_index);
AaSequence psi_aa_sequence(const MergeNetwork& net, int psi_index);

struct AaIdentity {
    int lhs = 0;          // merging count
    int sum_lengths = 0;  // over the walks that apply to the mode
    int offset = 0;       // starting subpath count (identical source), else 0
    bool holds = false;   // 2*lhs == sum_lengths - offset
    bool positivity = true;
    std::string note;     // which standing assumption failed, if any
    std::vector<AaSequence> sequences;

    double rhs() const { return 0.5 * (sum_lengths - offset); }
};

// Throws RerouteDetected on reroutable input.
AaIdentity aa_merging_identity(const MergeNetwork& net);

// ---- adjacent-pair block structure of (2,n) networks ----

enum class PairType { I, II };

struct SigmaPair {
    int lambda = 0;  // merging indices, lambda before mu on one psi path
    int mu = 0;
    PairType type = PairType::I;
    int psi = 0;
};

struct BlockDecomposition {
    std::vector<SigmaPair> theta;                 // sorted by the pair order
    std::vector<std::vector<int>> mini_blocks;    // indices into theta
    std::vector<std::vector<int>> medium_blocks;  // indices into mini_blocks
    int x = 0;
    int y = 0;
    int z = 0;
};

BlockDecomposition block_decomposition(const MergeNetwork& net);

// Between two adjacent singleton mini-blocks of one medium-block sits a mini-block of
// size >= 3.
bool singleton_gap_property(const BlockDecomposition& bd);

// Per-path merging lists for two-group networks whose mergings are all two-way.
struct TwoGroupView {
    struct Merge {
        int phi = 0;
        int psi = 0;
        int phi_pos = 0;  // start edge position along the phi path
        int psi_pos = 0;
    };
    std::vector<MergedSubpath> mergings;
    std::vector<Merge> info;
    std::vector<std::vector<int>> on_phi;  // merging indices in path order
    std::vector<std::vector<int>> on_psi;
};

TwoGroupView two_group_view(const MergeNetwork& net);

}  // namespace mergecalc
