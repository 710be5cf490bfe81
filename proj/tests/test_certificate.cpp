#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "snark/cdc.hpp"
#include "snark/certificate.hpp"
#include "snark/constructions.hpp"
#include "snark/report.hpp"

using namespace snark;

TEST_CASE("coloring certificates") {
    auto k4 = complete_k4();
    auto col = find_3_edge_coloring(k4);
    auto cert = coloring_certificate(k4, col.coloring);
    CHECK(verify_certificate(cert, k4).pass);

    SUBCASE("mutating one color fails verification") {
        auto j = nlohmann::json::parse(cert);
        int old = j["payload"]["colors"][0];
        j["payload"]["colors"][0] = old == 1 ? 2 : 1;
        auto out = verify_certificate(j.dump(), k4);
        CHECK_FALSE(out.pass);
    }

    SUBCASE("wrong subject graph fails with a reason") {
        auto out = verify_certificate(cert, petersen());
        CHECK_FALSE(out.pass);
        CHECK(out.reason.find("subject") != std::string::npos);
    }
}

TEST_CASE("removal coloring certificates carry the witness") {
    auto p = petersen();
    auto r3 = resistance_r3(p, {});
    REQUIRE(r3.value == 2);
    auto cert = removal_coloring_certificate(p, r3.witness, r3.coloring);
    CHECK(verify_certificate(cert, p).pass);

    auto rho = vertex_resistance_rho(p, {});
    auto vcert = vertex_removal_coloring_certificate(p, rho.witness, rho.coloring);
    CHECK(verify_certificate(vcert, p).pass);

    // a coloring that ignores the removals must fail
    auto j = nlohmann::json::parse(cert);
    j["payload"]["removed_edges"] = std::vector<int>{};
    CHECK_FALSE(verify_certificate(j.dump(), p).pass);
}

TEST_CASE("matching cover and cdc certificates") {
    auto p = petersen();
    auto pms = enumerate_perfect_matchings(p);
    auto tau = perfect_matching_index(p, pms, {});
    auto cert = matching_cover_certificate(p, pms, tau.cover, false);
    CHECK(verify_certificate(cert, p).pass);

    auto fk = fulkerson_double_cover(p, pms, {});
    auto dcert = matching_cover_certificate(p, pms, fk.cover, true);
    CHECK(verify_certificate(dcert, p).pass);

    auto cdc = find_cdc(p);
    auto ccert = cdc_certificate(p, cdc.cdc);
    CHECK(verify_certificate(ccert, p).pass);

    SUBCASE("dropping a circuit breaks the cdc certificate") {
        auto j = nlohmann::json::parse(ccert);
        j["payload"]["circuits"].erase(0);
        CHECK_FALSE(verify_certificate(j.dump(), p).pass);
    }
}

TEST_CASE("cycle and cyclic cut certificates") {
    auto p = petersen();
    auto circ = circumference(p, {});
    auto cert = cycle_certificate(p, circ.cycle);
    CHECK(verify_certificate(cert, p).pass);

    auto pms = enumerate_perfect_matchings(p);
    auto tf = two_factor_from_matching(p, pms.matchings[0]);
    auto tfc = two_factor_certificate(p, tf);
    CHECK(verify_certificate(tfc, p).pass);

    auto cyc = cyclic_edge_connectivity(p, {});
    auto ccert = cyclic_cut_certificate(p, cyc.witness);
    CHECK(verify_certificate(ccert, p).pass);

    SUBCASE("understating the cut fails") {
        auto j = nlohmann::json::parse(ccert);
        j["payload"]["cut_edges"].erase(0);
        CHECK_FALSE(verify_certificate(j.dump(), p).pass);
    }
    SUBCASE("breaking the witness cycle fails") {
        auto j = nlohmann::json::parse(cert);
        j["payload"]["cycles"][0][0] = 9;
        j["payload"]["cycles"][0][1] = 9;
        CHECK_FALSE(verify_certificate(j.dump(), p).pass);
    }
}

TEST_CASE("analysis reports") {
    auto p = petersen();
    auto opt = AnalyzeOptions::all();
    opt.threads = 2;
    auto text = analyze_graph(p, opt);
    auto j = nlohmann::json::parse(text);

    CHECK(j["measures"]["chromatic_index"] == "uncolorable");
    CHECK(j["measures"]["r3"] == 2);
    CHECK(j["measures"]["rho"] == 2);
    CHECK(j["measures"]["oddness"] == 2);
    CHECK(j["measures"]["tau"] == 5);
    CHECK(j["measures"]["circumference"] == 9);
    CHECK(j["measures"]["cyclic_edge_connectivity"] == 5);
    CHECK(j["measures"]["cdc"]["exists"] == true);
    CHECK(j["perfect_matching_count"] == 6);

    SUBCASE("every embedded certificate verifies") {
        for (const auto& cert : j["certificates"])
            CHECK(verify_certificate(cert.dump(), p).pass);
    }

    SUBCASE("reports are deterministic up to wall times") {
        auto second = nlohmann::json::parse(analyze_graph(p, opt));
        auto a = j, b = second;
        a.erase("timings_ms");
        b.erase("timings_ms");
        CHECK(a == b);
    }
}

TEST_CASE("analysis handles non-cubic input gracefully") {
    auto path = Multipole::make(3, {{0, 1}, {1, 2}});
    auto opt = AnalyzeOptions::all();
    auto j = nlohmann::json::parse(analyze_graph(path, opt));
    CHECK(j["validate"]["is_cubic"] == false);
    CHECK(j["measures"]["chromatic_index"] == "colorable");
    CHECK(j["girth"].is_null());
    CHECK_FALSE(j["measures"].contains("tau"));
}
