// Perfect matching enumeration, the perfect matching index tau, fixed-k
// cover decisions and the six-matching double cover checker. All searches
// over the complete enumerated matching set, exact by construction.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snark/multipole.hpp"
#include "snark/search.hpp"

namespace snark {

struct PerfectMatchingSet {
    std::string subject; // hash of the graph the set belongs to
    std::vector<std::vector<int>> matchings; // sorted edge ids each
    bool complete = false;
};

// Backtracking on the lowest-indexed uncovered vertex; deterministic order.
// Empty set (still marked complete) when no perfect matching exists.
PerfectMatchingSet enumerate_perfect_matchings(const Multipole& g);

bool is_perfect_matching(const Multipole& g, const std::vector<int>& edge_ids);

// Cache file so tau, oddness and CDC analyses share one enumeration.
std::string matching_set_to_json(const PerfectMatchingSet& s);
PerfectMatchingSet matching_set_from_json(const std::string& text);

// A cover is a multiset of indices into the matching set.
struct MatchingCover {
    std::vector<int> matching_indices;
};

struct CoverResult {
    Verdict verdict = Verdict::No;
    MatchingCover cover; // valid when verdict == Yes
    std::uint64_t nodes = 0;
};

// Exact decision: can k perfect matchings (repeats allowed) cover E(g)?
CoverResult covers_with_k(const Multipole& g, const PerfectMatchingSet& pms,
                          int k, const SearchLimits& limits = {});

struct TauSearchStep {
    int k;
    Verdict verdict;
    std::uint64_t nodes;
};

struct TauResult {
    Verdict verdict = Verdict::No;
    int tau = -1;
    MatchingCover cover;
    std::vector<TauSearchStep> log; // one entry per k tried, NONEs included
};

// Smallest k with a k-cover. tau = 3 short-circuits to 3-edge-colorability
// (three perfect matchings covering a cubic graph must partition it).
// Throws std::invalid_argument when g has a bridge (index undefined).
TauResult perfect_matching_index(const Multipole& g,
                                 const PerfectMatchingSet& pms,
                                 const SearchLimits& limits = {});

// Six perfect matchings covering every edge exactly twice.
CoverResult fulkerson_double_cover(const Multipole& g,
                                   const PerfectMatchingSet& pms,
                                   const SearchLimits& limits = {});

// True iff the union of the chosen matchings is all of E(g); with
// exactly_twice, every edge must be covered exactly two times.
bool verify_matching_cover(const Multipole& g, const PerfectMatchingSet& pms,
                           const MatchingCover& cover, bool exactly_twice = false);

} // namespace snark
