#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snark/coloring.hpp"
#include "snark/constructions.hpp"
#include "snark/matching.hpp"
#include "test_util.hpp"

using namespace snark;

TEST_CASE("perfect matching enumeration") {
    SUBCASE("K4 has the three pairings") {
        auto pms = enumerate_perfect_matchings(complete_k4());
        CHECK(pms.complete);
        CHECK(pms.matchings.size() == 3);
        for (const auto& m : pms.matchings)
            CHECK(is_perfect_matching(complete_k4(), m));
    }

    SUBCASE("petersen has exactly six, same as brute force") {
        auto p = petersen();
        auto pms = enumerate_perfect_matchings(p);
        auto brute = testutil::perfect_matchings_oracle(p);
        REQUIRE(pms.matchings.size() == 6);
        REQUIRE(brute.size() == 6);
        auto a = pms.matchings, b = brute;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        // each petersen edge lies in exactly two of the six
        std::vector<int> cnt(15, 0);
        for (const auto& m : a)
            for (int e : m) cnt[e]++;
        for (int e = 0; e < 15; ++e) CHECK(cnt[e] == 2);
    }

    SUBCASE("no perfect matching leaves an empty complete set") {
        // hub joined to three odd fragments
        std::vector<Edge> e;
        for (int k = 0; k < 3; ++k) {
            int a = 5 * k + 1, b = 5 * k + 2, d = 5 * k + 3, x = 5 * k + 4,
                f = 5 * k + 5;
            for (Edge ed : {Edge{a, d}, {a, x}, {b, d}, {b, x}, {d, x}, {f, a},
                            {f, b}, {0, f}})
                e.push_back(ed);
        }
        auto g = Multipole::make(16, e);
        auto pms = enumerate_perfect_matchings(g);
        CHECK(pms.complete);
        CHECK(pms.matchings.empty());
    }
}

TEST_CASE("matching set cache round trip") {
    auto p = petersen();
    auto pms = enumerate_perfect_matchings(p);
    auto text = matching_set_to_json(pms);
    auto back = matching_set_from_json(text);
    CHECK(back.subject == pms.subject);
    CHECK(back.complete == pms.complete);
    CHECK(back.matchings == pms.matchings);
    CHECK(back.subject == subject_hash(p));
}

TEST_CASE("covers_with_k") {
    auto p = petersen();
    auto pms = enumerate_perfect_matchings(p);

    SUBCASE("petersen has no 4-cover but any five of the six suffice") {
        CHECK(covers_with_k(p, pms, 4).verdict == Verdict::No);
        auto r5 = covers_with_k(p, pms, 5);
        REQUIRE(r5.verdict == Verdict::Yes);
        CHECK(verify_matching_cover(p, pms, r5.cover));
        CHECK(r5.cover.matching_indices.size() == 5);
    }

    SUBCASE("monotonicity: success at k implies success at k+1") {
        auto r5 = covers_with_k(p, pms, 5);
        auto r6 = covers_with_k(p, pms, 6);
        CHECK(r5.verdict == Verdict::Yes);
        CHECK(r6.verdict == Verdict::Yes);
        CHECK(verify_matching_cover(p, pms, r6.cover));
    }

    SUBCASE("k4 covers with three") {
        auto k4 = complete_k4();
        auto k4pms = enumerate_perfect_matchings(k4);
        auto r = covers_with_k(k4, k4pms, 3);
        REQUIRE(r.verdict == Verdict::Yes);
        CHECK(verify_matching_cover(k4, k4pms, r.cover));
        CHECK(covers_with_k(k4, k4pms, 2).verdict == Verdict::No);
    }
}

TEST_CASE("perfect matching index") {
    SUBCASE("colorable graphs have tau 3") {
        for (const char* name : {"k4", "prism", "k33", "cube"}) {
            auto g = build_named(name);
            auto pms = enumerate_perfect_matchings(g);
            auto r = perfect_matching_index(g, pms, {});
            CHECK(r.tau == 3);
            CHECK(verify_matching_cover(g, pms, r.cover));
        }
    }

    SUBCASE("tau(petersen) = 5") {
        auto p = petersen();
        auto pms = enumerate_perfect_matchings(p);
        auto r = perfect_matching_index(p, pms, {});
        CHECK(r.tau == 5);
        CHECK(verify_matching_cover(p, pms, r.cover));
    }

    SUBCASE("small snark regressions") {
        for (auto [name, expected] :
             {std::pair{"tietze", 4}, {"flower-j5", 4}, {"semiblowup-k4-c3", 4}}) {
            auto g = build_named(name);
            auto pms = enumerate_perfect_matchings(g);
            CHECK(perfect_matching_index(g, pms, {}).tau == expected);
        }
    }

    SUBCASE("bridges make the index undefined") {
        // two K4-minus-edge blocks joined by a bridge
        std::vector<Edge> e = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                               {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7},
                               {0, 4}};
        auto g = Multipole::make(8, e);
        auto pms = enumerate_perfect_matchings(g);
        CHECK_THROWS(perfect_matching_index(g, pms, {}));
    }

    SUBCASE("tau = 3 iff 3-edge-colorable on the quick corpus") {
        for (const char* name :
             {"k4", "k33", "prism", "cube", "petersen", "tietze", "flower-j5"}) {
            auto g = build_named(name);
            auto pms = enumerate_perfect_matchings(g);
            bool colorable = find_3_edge_coloring(g).verdict == Verdict::Yes;
            bool tau3 = perfect_matching_index(g, pms, {}).tau == 3;
            CHECK(colorable == tau3);
        }
    }

    SUBCASE("tau = 3 implies oddness 0 (one direction only)") {
        for (const char* name : {"k4", "k33", "prism", "cube", "moebius-8"}) {
            auto g = build_named(name);
            auto pms = enumerate_perfect_matchings(g);
            if (perfect_matching_index(g, pms, {}).tau == 3)
                CHECK(oddness(g, pms, {}).value == 0);
        }
    }

    SUBCASE("the search log records the exhausted k values") {
        auto p = petersen();
        auto pms = enumerate_perfect_matchings(p);
        auto r = perfect_matching_index(p, pms, {});
        REQUIRE(r.log.size() == 3); // k = 3, 4, 5
        CHECK(r.log[0].k == 3);
        CHECK(r.log[0].verdict == Verdict::No);
        CHECK(r.log[1].k == 4);
        CHECK(r.log[1].verdict == Verdict::No);
        CHECK(r.log[2].verdict == Verdict::Yes);
    }
}

TEST_CASE("fulkerson double covers") {
    SUBCASE("K4 doubles its three matchings") {
        auto k4 = complete_k4();
        auto pms = enumerate_perfect_matchings(k4);
        auto r = fulkerson_double_cover(k4, pms, {});
        REQUIRE(r.verdict == Verdict::Yes);
        CHECK(r.cover.matching_indices ==
              std::vector<int>{0, 0, 1, 1, 2, 2});
        CHECK(verify_matching_cover(k4, pms, r.cover, true));
    }

    SUBCASE("petersen uses its six matchings once each") {
        auto p = petersen();
        auto pms = enumerate_perfect_matchings(p);
        auto r = fulkerson_double_cover(p, pms, {});
        REQUIRE(r.verdict == Verdict::Yes);
        CHECK(r.cover.matching_indices == std::vector<int>{0, 1, 2, 3, 4, 5});
        CHECK(verify_matching_cover(p, pms, r.cover, true));
    }
}
