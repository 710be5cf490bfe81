#include "snark/report.hpp"

#include <chrono>

#include <json.hpp>

#include "snark/cdc.hpp"
#include "snark/certificate.hpp"
#include "snark/coloring.hpp"

namespace snark {

using json = nlohmann::ordered_json;

namespace {

struct StageClock {
    json& timings;
    std::string name;
    std::chrono::steady_clock::time_point t0;
    StageClock(json& t, std::string n)
        : timings(t), name(std::move(n)), t0(std::chrono::steady_clock::now()) {}
    ~StageClock() {
        auto dt = std::chrono::steady_clock::now() - t0;
        timings[name] =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }
};

json verdict_or(const Verdict v, json yes_value) {
    if (v == Verdict::Timeout) return "timeout";
    return yes_value;
}

} // namespace

std::string analyze_graph(const Multipole& g, const AnalyzeOptions& opt) {
    json report;
    json timings = json::object();
    report["version"] = 1;
    report["subject"] = subject_hash(g);
    if (g.semiedges().empty())
        report["graph"] = emit_graph6(g);
    else
        report["graph"] = json::parse(to_multipole_json(g));

    SearchLimits limits;
    limits.time_limit_s = opt.budget_s;
    limits.threads = opt.threads;

    {
        StageClock clock(timings, "validate");
        auto v = validate(g);
        report["validate"] = {{"is_cubic", v.is_cubic},
                              {"is_connected", v.is_connected},
                              {"is_bridgeless", v.is_bridgeless}};
        int gir = girth(g);
        report["girth"] = gir < 0 ? json(nullptr) : json(gir);
    }

    json measures = json::object();
    json certificates = json::array();
    bool cubic_graph = g.is_cubic_graph();

    if (opt.chromatic) {
        StageClock clock(timings, "chromatic");
        auto r = find_3_edge_coloring(g, {}, limits);
        if (r.verdict == Verdict::Yes) {
            measures["chromatic_index"] = "colorable";
            certificates.push_back(json::parse(coloring_certificate(g, r.coloring)));
        } else if (r.verdict == Verdict::No) {
            measures["chromatic_index"] = "uncolorable";
        } else {
            measures["chromatic_index"] = "timeout";
        }
    }

    if (opt.r3) {
        StageClock clock(timings, "r3");
        auto r = resistance_r3(g, limits);
        measures["r3"] = verdict_or(r.verdict, r.value);
        if (r.verdict == Verdict::Yes)
            certificates.push_back(json::parse(
                removal_coloring_certificate(g, r.witness, r.coloring)));
    }

    if (opt.rho) {
        StageClock clock(timings, "rho");
        auto r = vertex_resistance_rho(g, limits);
        measures["rho"] = verdict_or(r.verdict, r.value);
        if (r.verdict == Verdict::Yes)
            certificates.push_back(json::parse(
                vertex_removal_coloring_certificate(g, r.witness, r.coloring)));
    }

    PerfectMatchingSet pms;
    bool have_pms = false;
    auto ensure_matchings = [&]() {
        if (have_pms || !cubic_graph) return;
        StageClock clock(timings, "perfect_matchings");
        if (opt.matching_cache && opt.matching_cache->complete &&
            opt.matching_cache->subject == subject_hash(g))
            pms = *opt.matching_cache;
        else
            pms = enumerate_perfect_matchings(g);
        have_pms = true;
    };

    if (opt.oddness && cubic_graph) {
        ensure_matchings();
        StageClock clock(timings, "oddness");
        auto r = oddness(g, pms, limits);
        if (r.verdict == Verdict::Yes) {
            measures["oddness"] = r.value;
            certificates.push_back(
                json::parse(two_factor_certificate(g, r.witness)));
        } else {
            measures["oddness"] = "no-2-factor";
        }
    }

    if (opt.tau && cubic_graph) {
        ensure_matchings();
        StageClock clock(timings, "tau");
        auto v = validate(g);
        if (!v.is_bridgeless) {
            measures["tau"] = "undefined-bridge";
        } else {
            auto r = perfect_matching_index(g, pms, limits);
            measures["tau"] = verdict_or(r.verdict, r.tau);
            json log = json::array();
            for (const auto& step : r.log)
                log.push_back({{"k", step.k},
                               {"result", step.verdict == Verdict::Yes
                                              ? "cover"
                                              : step.verdict == Verdict::No
                                                    ? "none-exhaustive"
                                                    : "timeout"},
                               {"nodes", step.nodes}});
            measures["tau_search"] = log;
            if (r.verdict == Verdict::Yes)
                certificates.push_back(json::parse(
                    matching_cover_certificate(g, pms, r.cover, false)));
        }
    }

    if (opt.circumference) {
        StageClock clock(timings, "circumference");
        auto r = circumference(g, limits);
        if (r.verdict == Verdict::Yes) {
            measures["circumference"] = r.length;
            certificates.push_back(json::parse(cycle_certificate(g, r.cycle)));
        } else {
            measures["circumference"] =
                r.verdict == Verdict::Timeout ? "timeout" : "acyclic";
        }
    }

    if (opt.cyclic_connectivity && cubic_graph) {
        StageClock clock(timings, "cyclic_edge_connectivity");
        auto r = cyclic_edge_connectivity(g, limits);
        if (r.verdict == Verdict::Timeout) {
            measures["cyclic_edge_connectivity"] = "timeout";
        } else if (r.infinite) {
            measures["cyclic_edge_connectivity"] = "infinite";
        } else {
            measures["cyclic_edge_connectivity"] = r.value;
            certificates.push_back(
                json::parse(cyclic_cut_certificate(g, r.witness)));
        }
    }

    if (opt.cdc && cubic_graph) {
        StageClock clock(timings, "cdc");
        auto r = find_cdc(g, {}, limits);
        if (r.verdict == Verdict::Yes) {
            measures["cdc"] = {{"exists", true}};
            certificates.push_back(json::parse(cdc_certificate(g, r.cdc)));
        } else if (r.verdict == Verdict::No) {
            measures["cdc"] = {{"exists", false}};
        } else {
            measures["cdc"] = "timeout";
        }
    }

    report["measures"] = measures;
    if (have_pms) report["perfect_matching_count"] = pms.matchings.size();
    report["certificates"] = certificates;
    report["timings_ms"] = timings;
    return report.dump(2);
}

} // namespace snark
