#include "snark/certificate.hpp"

#include <algorithm>

#include <json.hpp>

namespace snark {

using json = nlohmann::ordered_json;

namespace {

json shell(const Multipole& g, const char* kind) {
    json j;
    j["kind"] = kind;
    j["subject"] = subject_hash(g);
    j["payload"] = json::object();
    return j;
}

} // namespace

std::string coloring_certificate(const Multipole& g, const EdgeColoring& c) {
    auto j = shell(g, "coloring");
    j["payload"]["colors"] = c.item_colors;
    return j.dump();
}

std::string removal_coloring_certificate(const Multipole& g,
                                         const std::vector<int>& removed_edges,
                                         const EdgeColoring& c) {
    auto j = shell(g, "coloring");
    j["payload"]["removed_edges"] = removed_edges;
    j["payload"]["colors"] = c.item_colors;
    return j.dump();
}

std::string vertex_removal_coloring_certificate(
    const Multipole& g, const std::vector<int>& removed_vertices,
    const EdgeColoring& c) {
    auto j = shell(g, "coloring");
    j["payload"]["removed_vertices"] = removed_vertices;
    j["payload"]["colors"] = c.item_colors;
    return j.dump();
}

std::string matching_cover_certificate(const Multipole& g,
                                       const PerfectMatchingSet& pms,
                                       const MatchingCover& cover,
                                       bool double_cover) {
    auto j = shell(g, "matching-cover");
    j["payload"]["double"] = double_cover;
    j["payload"]["matchings"] = json::array();
    for (int idx : cover.matching_indices)
        j["payload"]["matchings"].push_back(pms.matchings[idx]);
    return j.dump();
}

std::string cdc_certificate(const Multipole& g, const CycleDoubleCover& cdc) {
    auto j = shell(g, "cdc");
    j["payload"]["circuits"] = cdc.circuits;
    if (!cdc.colors.empty()) j["payload"]["colors"] = cdc.colors;
    return j.dump();
}

std::string cycle_certificate(const Multipole& g, const std::vector<int>& cycle) {
    auto j = shell(g, "cycle");
    j["payload"]["cycles"] = json::array({cycle});
    j["payload"]["spanning"] = false;
    return j.dump();
}

std::string two_factor_certificate(const Multipole& g, const TwoFactor& tf) {
    auto j = shell(g, "cycle");
    j["payload"]["cycles"] = tf.components;
    j["payload"]["spanning"] = true;
    j["payload"]["odd_count"] = tf.odd_count;
    return j.dump();
}

std::string cyclic_cut_certificate(const Multipole& g, const CyclicCutWitness& w) {
    auto j = shell(g, "cyclic-cut");
    j["payload"]["cut_edges"] = w.cut_edges;
    j["payload"]["side_a"] = w.side_a;
    j["payload"]["cycle_a"] = w.cycle_a;
    j["payload"]["cycle_b"] = w.cycle_b;
    return j.dump();
}

namespace {

VerifyOutcome fail(const std::string& why) { return {false, why}; }
VerifyOutcome pass() { return {true, ""}; }

VerifyOutcome check_cycle_list(const Multipole& g, const json& cycles,
                               bool disjoint_required) {
    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& cyc : cycles) {
        if (cyc.size() < 3) return fail("cycle shorter than 3");
        std::vector<char> on_this(g.vertex_count(), 0);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i].get<int>();
            int v = cyc[(i + 1) % cyc.size()].get<int>();
            if (u < 0 || u >= g.vertex_count()) return fail("vertex out of range");
            if (on_this[u]) return fail("cycle repeats a vertex");
            on_this[u] = 1;
            if (disjoint_required && used[u]) return fail("cycles share a vertex");
            used[u] = 1;
            if (!g.has_edge(u, v)) return fail("cycle uses a non-edge");
        }
    }
    return pass();
}

VerifyOutcome verify_coloring_kind(const Multipole& g, const json& payload) {
    auto colors = payload.at("colors").get<std::vector<int>>();
    int m = (int)g.edges().size(), s = (int)g.semiedges().size();
    if ((int)colors.size() != m + s) return fail("color list length mismatch");

    std::vector<char> removed(m, 0);
    if (payload.contains("removed_edges"))
        for (int e : payload.at("removed_edges").get<std::vector<int>>()) {
            if (e < 0 || e >= m) return fail("removed edge id out of range");
            removed[e] = 1;
        }
    if (payload.contains("removed_vertices"))
        for (int v : payload.at("removed_vertices").get<std::vector<int>>()) {
            if (v < 0 || v >= g.vertex_count())
                return fail("removed vertex id out of range");
            for (auto [w, eid] : g.adjacency()[v]) removed[eid] = 1;
        }

    for (int e = 0; e < m; ++e) {
        if (removed[e] && colors[e] != 0)
            return fail("removed edge carries a color");
        if (!removed[e] && (colors[e] < 1 || colors[e] > 3))
            return fail("edge without a valid color");
    }
    for (int i = 0; i < s; ++i)
        if (colors[m + i] < 1 || colors[m + i] > 3)
            return fail("semiedge without a valid color");
    for (int v = 0; v < g.vertex_count(); ++v) {
        int seen = 0;
        for (auto [w, eid] : g.adjacency()[v]) {
            if (removed[eid]) continue;
            int b = 1 << colors[eid];
            if (seen & b) return fail("adjacent items share a color");
            seen |= b;
        }
        for (int sid : g.semiedges_at()[v]) {
            int b = 1 << colors[m + sid];
            if (seen & b) return fail("adjacent items share a color");
            seen |= b;
        }
    }
    return pass();
}

VerifyOutcome verify_matching_cover_kind(const Multipole& g, const json& payload) {
    bool dbl = payload.value("double", false);
    int m = (int)g.edges().size();
    std::vector<int> cnt(m, 0);
    for (const auto& mj : payload.at("matchings")) {
        auto ids = mj.get<std::vector<int>>();
        for (int e : ids)
            if (e < 0 || e >= m) return fail("edge id out of range");
        if (!is_perfect_matching(g, ids))
            return fail("member is not a perfect matching");
        for (int e : ids) cnt[e]++;
    }
    for (int e = 0; e < m; ++e) {
        if (dbl && cnt[e] != 2) return fail("edge not covered exactly twice");
        if (!dbl && cnt[e] < 1) return fail("edge left uncovered");
    }
    return pass();
}

VerifyOutcome verify_cdc_kind(const Multipole& g, const json& payload) {
    CycleDoubleCover cdc;
    for (const auto& c : payload.at("circuits"))
        cdc.circuits.push_back(c.get<std::vector<int>>());
    if (payload.contains("colors"))
        cdc.colors = payload.at("colors").get<std::vector<int>>();
    std::string why;
    if (!verify_cdc(g, cdc, &why)) return fail(why);
    return pass();
}

VerifyOutcome verify_cycle_kind(const Multipole& g, const json& payload) {
    auto res = check_cycle_list(g, payload.at("cycles"), true);
    if (!res.pass) return res;
    if (payload.value("spanning", false)) {
        std::vector<char> covered(g.vertex_count(), 0);
        int total = 0;
        for (const auto& cyc : payload.at("cycles"))
            for (const auto& v : cyc) {
                covered[v.get<int>()] = 1;
                total++;
            }
        if (total != g.vertex_count() ||
            !std::all_of(covered.begin(), covered.end(),
                         [](char c) { return c == 1; }))
            return fail("cycles do not span the graph");
    }
    if (payload.contains("odd_count")) {
        int odd = 0;
        for (const auto& cyc : payload.at("cycles"))
            if (cyc.size() % 2 == 1) odd++;
        if (odd != payload.at("odd_count").get<int>())
            return fail("odd component count mismatch");
    }
    return pass();
}

VerifyOutcome verify_cyclic_cut_kind(const Multipole& g, const json& payload) {
    int n = g.vertex_count();
    std::vector<char> in_a(n, 0);
    for (int v : payload.at("side_a").get<std::vector<int>>()) {
        if (v < 0 || v >= n) return fail("side vertex out of range");
        in_a[v] = 1;
    }
    std::vector<char> is_cut(g.edges().size(), 0);
    for (int e : payload.at("cut_edges").get<std::vector<int>>()) {
        if (e < 0 || e >= (int)g.edges().size())
            return fail("cut edge id out of range");
        is_cut[e] = 1;
    }
    for (int e = 0; e < (int)g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        bool crossing = in_a[u] != in_a[v];
        if (crossing != (bool)is_cut[e])
            return fail("cut edges differ from the crossing edges of side_a");
    }
    auto cyc_inside = [&](const json& cyc, bool inside) -> VerifyOutcome {
        if (cyc.size() < 3) return fail("witness cycle shorter than 3");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i].get<int>(), v = cyc[(i + 1) % cyc.size()].get<int>();
            if (in_a[u] != inside) return fail("witness cycle on the wrong side");
            if (!g.has_edge(u, v)) return fail("witness cycle uses a non-edge");
        }
        return pass();
    };
    if (auto r = cyc_inside(payload.at("cycle_a"), true); !r.pass) return r;
    if (auto r = cyc_inside(payload.at("cycle_b"), false); !r.pass) return r;
    return pass();
}

} // namespace

VerifyOutcome verify_certificate(const std::string& cert_json, const Multipole& g) {
    json j;
    try {
        j = json::parse(cert_json);
    } catch (const std::exception& e) {
        return fail(std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("subject").get<std::string>() != subject_hash(g))
            return fail("subject hash mismatch: certificate is for another graph");
        const auto& kind = j.at("kind").get<std::string>();
        const auto& payload = j.at("payload");
        if (kind == "coloring") return verify_coloring_kind(g, payload);
        if (kind == "matching-cover") return verify_matching_cover_kind(g, payload);
        if (kind == "cdc") return verify_cdc_kind(g, payload);
        if (kind == "cycle") return verify_cycle_kind(g, payload);
        if (kind == "cyclic-cut") return verify_cyclic_cut_kind(g, payload);
        return fail("unknown certificate kind '" + kind + "'");
    } catch (const std::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
}

} // namespace snark
