// Certificates: tagged JSON witnesses with solver-free verifiers.
// {"kind": ..., "subject": <graph hash>, "payload": {...}} where kind is one
// of coloring, matching-cover, cdc, cycle, cyclic-cut. Verification never
// runs a search; it only checks the witness against the graph.

#pragma once

#include <string>
#include <vector>

#include "snark/cdc.hpp"
#include "snark/coloring.hpp"
#include "snark/matching.hpp"
#include "snark/multipole.hpp"

namespace snark {

std::string coloring_certificate(const Multipole& g, const EdgeColoring& c);
// r3 / rho witnesses: a proper coloring of the graph after the removal.
std::string removal_coloring_certificate(const Multipole& g,
                                         const std::vector<int>& removed_edges,
                                         const EdgeColoring& c);
std::string vertex_removal_coloring_certificate(
    const Multipole& g, const std::vector<int>& removed_vertices,
    const EdgeColoring& c);
// Cover witnesses embed the matchings themselves so checking is standalone.
std::string matching_cover_certificate(const Multipole& g,
                                       const PerfectMatchingSet& pms,
                                       const MatchingCover& cover,
                                       bool double_cover);
std::string cdc_certificate(const Multipole& g, const CycleDoubleCover& cdc);
std::string cycle_certificate(const Multipole& g, const std::vector<int>& cycle);
// Oddness witness: the spanning disjoint cycles of a 2-factor.
std::string two_factor_certificate(const Multipole& g, const TwoFactor& tf);
std::string cyclic_cut_certificate(const Multipole& g, const CyclicCutWitness& w);

struct VerifyOutcome {
    bool pass = false;
    std::string reason;
};

VerifyOutcome verify_certificate(const std::string& cert_json, const Multipole& g);

} // namespace snark
