#pragma once

#include <json.hpp>
#include <string>

#include "mergecalc/analysis.hpp"
#include "mergecalc/bounds.hpp"
#include "mergecalc/network.hpp"
#include "mergecalc/search.hpp"

namespace mergecalc {

using Json = nlohmann::json;  // std::map-backed, so keys come out sorted

// {"vertices":[ids],"edges":[[eid,tail,head]],"groups":[{"source","sink","paths"}],
//  "mode":..., "starting_subpaths":...}. Vertex labels ride along in "labels".
Json network_to_json(const MergeNetwork& net);
// Throws ParseError on shape problems, MalformedNetwork / CycleDetected via validate.
MergeNetwork network_from_json(const Json& j);

// Two-space indent plus trailing newline; byte-stable for equal inputs.
std::string dump(const Json& j);

// Graphviz digraph. Vertices that start a merging are drawn as filled dots; edges carry
// the paths that use them (g.p, 1-based).
std::string network_to_dot(const MergeNetwork& net);

Json merging_to_json(const MergeNetwork& net, const MergedSubpath& m);
Json aa_to_json(const MergeNetwork& net, const AaSequence& seq);
Json blocks_to_json(const BlockDecomposition& bd);
Json bounds_to_json(const BoundTable& t);
// Witnesses as merging-sequence text (two groups) or the token listing (more groups).
Json outcome_to_json(const SearchOutcome& out);
Json known_check_to_json(const KnownCheck& c);

}  // namespace mergecalc
