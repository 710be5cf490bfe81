// Consolidated per-graph analysis: runs the requested measure engines,
// attaches a verifiable certificate to every positive claim, and emits a
// deterministic JSON report (wall times live in their own subobject).

#pragma once

#include <string>

#include "snark/matching.hpp"
#include "snark/multipole.hpp"

namespace snark {

struct AnalyzeOptions {
    bool chromatic = false;
    bool r3 = false;
    bool rho = false;
    bool oddness = false;
    bool tau = false;
    bool cdc = false;
    bool circumference = false;
    bool cyclic_connectivity = false;
    double budget_s = 0; // per-stage time budget; 0 = unlimited
    int threads = 1;
    const PerfectMatchingSet* matching_cache = nullptr;

    static AnalyzeOptions all() {
        AnalyzeOptions o;
        o.chromatic = o.r3 = o.rho = o.oddness = o.tau = o.cdc = true;
        o.circumference = o.cyclic_connectivity = true;
        return o;
    }
};

// Report JSON (stable field order):
//   version, subject, graph, validate{...}, girth, measures{...},
//   perfect_matching_count, certificates[...], timings_ms{...}
std::string analyze_graph(const Multipole& g, const AnalyzeOptions& opt);

} // namespace snark
