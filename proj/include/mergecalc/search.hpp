#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mergecalc/codec.hpp"
#include "mergecalc/network.hpp"

namespace mergecalc {

struct SearchLimits {
    std::size_t max_nodes = 5'000'000;
    double max_seconds = 600.0;
};

struct SearchWitness {
    std::string key;  // canonical sequence text; multi-group witnesses use a path listing
    MergeNetwork graph;
};

struct SearchOutcome {
    std::string quantity;  // "M" or "M*"
    std::vector<int> params;
    int value = 0;
    std::vector<SearchWitness> witnesses;  // every extremal graph found, sorted by key
    std::optional<std::size_t> count;      // set by count_extremal_two_n
    std::size_t explored = 0;
    std::chrono::duration<double> elapsed{};
    bool complete = false;
    int depth_bound = 0;
    std::vector<std::string> assumptions;

    std::string label() const;
};

// Called once per distinct non-reroutable candidate (canonical form) as it is found.
using CandidateVisitor = std::function<void(const MergingSequence&, const MergeNetwork&)>;

// Level-by-level enumeration of merging sequences with canonical dedup.
SearchOutcome search_m(int m, int n, const SearchLimits& limits = {}, const CandidateVisitor& visit = {});
SearchOutcome search_m_star(int n, const SearchLimits& limits = {}, const CandidateVisitor& visit = {});

// Non-reroutable (2,n) graphs with 3n-1 mergings up to relabeling.
SearchOutcome count_extremal_two_n(int n, const SearchLimits& limits = {});

// Starts from every non-reroutable (m,n) graph and adds `extra` single-path groups one at
// a time. Result params are (1,...,1,m,n).
SearchOutcome search_with_added_path(int m, int n, int extra, const SearchLimits& limits = {});

// Every non-reroutable graph obtained from `base` by one extra single-path group whose
// mergings are two-way and meet each existing path at most once. The new group is group 0.
std::vector<MergeNetwork> added_path_extensions(const MergeNetwork& base);

enum class KnownStatus { Reproduced, LowerBoundWitnessed, Skipped, Mismatch };

struct KnownCheck {
    std::string label;
    long long published_value = 0;
    KnownStatus status = KnownStatus::Skipped;
    std::optional<long long> computed;  // search value or witness count
    long long lower = 0;
    long long upper = 0;
    std::string note;
};

const char* known_status_name(KnownStatus s);

// Runs the desk-scale searches and the witness constructions for every known value.
std::vector<KnownCheck> verify_known_table(const SearchLimits& per_entry = {});

}  // namespace mergecalc
