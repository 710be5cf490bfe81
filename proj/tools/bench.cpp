// Benchmark comparing the serial reference paths against the OpenMP kernels
// on the heavier engines. Prints one line per (kernel, graph) pair.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "snark/cdc.hpp"
#include "snark/coloring.hpp"
#include "snark/constructions.hpp"
#include "snark/matching.hpp"

using namespace snark;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

int hw_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename F>
void row(const std::string& name, const std::string& graph, F&& run) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = run(1);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel = run(hw_threads());
    double tp = seconds(t0);
    bool agree = serial == parallel;
    std::printf("%-28s %-22s serial %8.3fs  parallel(%d) %8.3fs  speedup %5.2fx  %s\n",
                name.c_str(), graph.c_str(), ts, hw_threads(), tp,
                tp > 0 ? ts / tp : 0.0, agree ? "results agree" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", hw_threads());

    {
        auto g = build_named("family18-k3");
        auto pms = enumerate_perfect_matchings(g);
        row("oddness", "family18-k3", [&](int t) {
            SearchLimits lim;
            lim.threads = t;
            return oddness(g, pms, lim).value;
        });
    }
    {
        auto g = build_named("semiblowup-oddness4-46");
        row("resistance_r3", "semiblowup-oddness4-46", [&](int t) {
            SearchLimits lim;
            lim.threads = t;
            return resistance_r3(g, lim).value;
        });
    }
    {
        auto g = build_named("blowup-k4-c3");
        row("vertex_resistance_rho", "blowup-k4-c3", [&](int t) {
            SearchLimits lim;
            lim.threads = t;
            return vertex_resistance_rho(g, lim).value;
        });
    }
    {
        auto g = build_named("blowup-prism-c4");
        row("cyclic_edge_connectivity", "blowup-prism-c4", [&](int t) {
            SearchLimits lim;
            lim.threads = t;
            return cyclic_edge_connectivity(g, lim).value;
        });
    }
    return 0;
}
