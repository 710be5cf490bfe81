// Exact 3-edge-coloring of multipoles with parity-lemma pruning, plus the
// measures built on it: resistance r3, vertex resistance rho, and oddness.
//
// Coloring items are the edges (ids 0..m-1) followed by the semiedges
// (ids m..m+s-1); colors are 1..3, 0 means unassigned.

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "snark/matching.hpp"
#include "snark/multipole.hpp"
#include "snark/search.hpp"

namespace snark {

struct EdgeColoring {
    std::vector<int> item_colors;
    int edge_color(int eid) const { return item_colors[eid]; }
};

struct ColoringResult {
    Verdict verdict = Verdict::No; // Yes = found, No = exhaustively uncolorable
    EdgeColoring coloring;
    std::uint64_t nodes = 0;
};

// (semiedge index, color 1..3) boundary pre-assignments.
using FixedColors = std::vector<std::pair<int, int>>;

ColoringResult find_3_edge_coloring(const Multipole& m,
                                    const FixedColors& fixed = {},
                                    const SearchLimits& limits = {});

// Visits every proper total coloring extending `fixed` exactly once (no
// color-symmetry quotient). Callback returns false to stop early.
// Returns Yes if stopped early, No when the enumeration completed, Timeout
// when the budget ran out.
Verdict for_each_coloring(const Multipole& m, const FixedColors& fixed,
                          const std::function<bool(const EdgeColoring&)>& cb,
                          const SearchLimits& limits = {});

// Plain backtracking in item-id order, properness checks only. Kept as the
// reference implementation the pruned solver is tested against.
ColoringResult find_3_edge_coloring_reference(const Multipole& m,
                                              const FixedColors& fixed = {},
                                              const SearchLimits& limits = {});

bool is_proper_coloring(const Multipole& m, const EdgeColoring& c);

// Reusable solver when many removal variants of one graph are tested.
class ColoringSolver {
  public:
    explicit ColoringSolver(const Multipole& g);
    ~ColoringSolver();
    ColoringSolver(const ColoringSolver&) = delete;
    ColoringSolver& operator=(const ColoringSolver&) = delete;

    // removed_edges is a bitmask over edge ids; removed edges act as deleted
    // (their stubs are free, which is equivalent for colorability).
    ColoringResult solve(const FixedColors& fixed,
                         const std::vector<std::uint64_t>& removed_edges,
                         const SearchLimits& limits, bool break_symmetry) const;
    Verdict enumerate(const FixedColors& fixed,
                      const std::vector<std::uint64_t>& removed_edges,
                      const std::function<bool(const EdgeColoring&)>& cb,
                      const SearchLimits& limits) const;

  private:
    struct Impl;
    Impl* impl_;
};

struct EdgeCut {
    std::vector<int> side_a; // proper nonempty vertex subset
};

// Parity-lemma verifier: all three color classes must meet the cut with the
// parity of the cut's size, where the cut consists of the crossing edges
// plus any semiedges owned inside side_a. Requires all degrees 3; throws
// std::invalid_argument on an invalid cut.
bool verify_parity(const Multipole& m, const EdgeColoring& c, const EdgeCut& cut);

struct ResistanceResult {
    Verdict verdict = Verdict::No; // No = every removal set up to the cap fails
    int value = -1;
    std::vector<int> witness; // removed edge ids (vertex ids for rho)
    EdgeColoring coloring;    // proper coloring after the removal
    std::uint64_t nodes = 0;
};

// Iterative deepening over removal sets in lexicographic order; the reported
// witness is the lexicographically least among minimum-size ones.
// max_size < 0 means unbounded.
ResistanceResult resistance_r3(const Multipole& g,
                               const SearchLimits& limits = {},
                               int max_size = -1);
ResistanceResult vertex_resistance_rho(const Multipole& g,
                                       const SearchLimits& limits = {},
                                       int max_size = -1);

struct TwoFactor {
    std::vector<int> edges;                   // edge ids
    std::vector<std::vector<int>> components; // vertex cycles
    int odd_count = 0;
};

TwoFactor two_factor_from_matching(const Multipole& g,
                                   const std::vector<int>& matching_edges);

struct OddnessResult {
    Verdict verdict = Verdict::No; // No = graph has no 2-factor
    int value = -1;
    TwoFactor witness;
};

// Minimum odd-component count over all 2-factors (matching complements).
// Requires the complete enumeration.
OddnessResult oddness(const Multipole& g, const PerfectMatchingSet& pms,
                      const SearchLimits& limits = {});

} // namespace snark
