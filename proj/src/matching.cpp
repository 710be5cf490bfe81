#include "snark/matching.hpp"

#include "snark/coloring.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace snark {

namespace {

// Fixed-width edge bitsets; graphs here stay well under 192 edges.
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(int nbits) : w((nbits + 63) / 64, 0) {}
    void set(int i) { w[i / 64] |= 1ull << (i % 64); }
    bool test(int i) const { return (w[i / 64] >> (i % 64)) & 1; }
    bool covers(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if ((o.w[i] & ~w[i]) != 0) return false;
        return true;
    }
    void or_with(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
};

} // namespace

PerfectMatchingSet enumerate_perfect_matchings(const Multipole& g) {
    if (!g.semiedges().empty())
        throw std::invalid_argument("perfect matchings: plain graphs only");
    int n = g.vertex_count();
    PerfectMatchingSet out;
    out.subject = subject_hash(g);
    out.complete = true;
    if (n % 2 != 0) return out;

    std::vector<char> covered(n, 0);
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int covered_count) -> void {
        if (covered_count == n) {
            out.matchings.push_back(chosen);
            return;
        }
        int v = 0;
        while (covered[v]) v++;
        covered[v] = 1;
        for (auto [w, eid] : g.adjacency()[v]) {
            if (covered[w]) continue;
            covered[w] = 1;
            chosen.push_back(eid);
            self(self, covered_count + 2);
            chosen.pop_back();
            covered[w] = 0;
        }
        covered[v] = 0;
    };
    if (n > 0) rec(rec, 0);
    for (auto& m : out.matchings) std::sort(m.begin(), m.end());
    return out;
}

bool is_perfect_matching(const Multipole& g, const std::vector<int>& edge_ids) {
    std::vector<char> covered(g.vertex_count(), 0);
    for (int eid : edge_ids) {
        if (eid < 0 || eid >= (int)g.edges().size()) return false;
        auto [u, v] = g.edges()[eid];
        if (covered[u] || covered[v]) return false;
        covered[u] = covered[v] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c == 1; });
}

std::string matching_set_to_json(const PerfectMatchingSet& s) {
    nlohmann::ordered_json j;
    j["subject"] = s.subject;
    j["complete"] = s.complete;
    j["matchings"] = s.matchings;
    return j.dump();
}

PerfectMatchingSet matching_set_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    PerfectMatchingSet s;
    s.subject = j.at("subject").get<std::string>();
    s.complete = j.at("complete").get<bool>();
    for (const auto& m : j.at("matchings"))
        s.matchings.push_back(m.get<std::vector<int>>());
    return s;
}

namespace {

struct CoverSearch {
    int m;
    int k;
    int matching_size = 0;
    std::vector<Bits> sets;
    // containing[e] = indices of matchings containing edge e
    std::vector<std::vector<int>> containing;
    Deadline deadline;
    std::uint64_t nodes = 0;
    std::uint64_t node_limit;
    bool timed_out = false;
    // Every chosen subset determines its branch edge, so a subset reached
    // along two different choice orders spans identical subtrees; the memo
    // collapses them. Packed keys need < 1024 matchings and k <= 6; larger
    // instances fall back to exact vector keys. Capped: overflowing only
    // costs repeated work, never wrong answers.
    std::unordered_set<std::uint64_t> seen_packed;
    std::set<std::vector<int>> seen_exact;
    bool use_packed;
    static constexpr std::size_t kSeenCap = 1u << 23;

    CoverSearch(const Multipole& g, const PerfectMatchingSet& pms, int k,
                const SearchLimits& lim)
        : m((int)g.edges().size()), k(k), deadline(lim.time_limit_s),
          node_limit(lim.node_limit) {
        for (const auto& pm : pms.matchings) {
            Bits b(m);
            for (int e : pm) b.set(e);
            sets.push_back(std::move(b));
            matching_size = (int)pm.size();
        }
        containing.assign(m, {});
        for (int i = 0; i < (int)sets.size(); ++i)
            for (int e = 0; e < m; ++e)
                if (sets[i].test(e)) containing[e].push_back(i);
        use_packed = sets.size() < 1023 && k <= 6;
    }

    bool mark_seen(const std::vector<int>& chosen) {
        if (use_packed) {
            if (seen_packed.size() >= kSeenCap) return true;
            std::uint64_t key = 0;
            std::array<int, 6> sorted{1023, 1023, 1023, 1023, 1023, 1023};
            for (std::size_t i = 0; i < chosen.size(); ++i) sorted[i] = chosen[i];
            std::sort(sorted.begin(), sorted.begin() + chosen.size());
            for (int i = 0; i < 6; ++i) key = (key << 10) | (std::uint64_t)sorted[i];
            return seen_packed.insert(key).second;
        }
        if (seen_exact.size() >= kSeenCap) return true;
        std::vector<int> key = chosen;
        std::sort(key.begin(), key.end());
        return seen_exact.insert(key).second;
    }

    // Picks the uncovered edge lying in the fewest matchings (fail first),
    // lowest edge id on ties.
    int branch_edge(const Bits& covered, int& uncovered) const {
        int best = -1, best_cnt = 0;
        uncovered = 0;
        for (int e = 0; e < m; ++e) {
            if (covered.test(e)) continue;
            uncovered++;
            int cnt = (int)containing[e].size();
            if (best < 0 || cnt < best_cnt) {
                best = e;
                best_cnt = cnt;
            }
        }
        return best;
    }

    // Distinct matchings suffice for plain covering; a found cover of fewer
    // than k matchings is padded by repeating its last element.
    bool rec(const Bits& covered, int depth, std::vector<int>& chosen) {
        if ((++nodes & 1023) == 0 && deadline.expired()) {
            timed_out = true;
            return false;
        }
        if (nodes > node_limit) {
            timed_out = true;
            return false;
        }
        int uncovered = 0;
        int e = branch_edge(covered, uncovered);
        if (e < 0) return true;
        if (depth == k) return false;
        if (uncovered > (k - depth) * matching_size) return false;
        for (int i : containing[e]) {
            chosen.push_back(i);
            if (mark_seen(chosen)) {
                Bits next = covered;
                next.or_with(sets[i]);
                if (rec(next, depth + 1, chosen)) return true;
            }
            chosen.pop_back();
            if (timed_out) return false;
        }
        return false;
    }
};

} // namespace

CoverResult covers_with_k(const Multipole& g, const PerfectMatchingSet& pms,
                          int k, const SearchLimits& limits) {
    if (!pms.complete)
        throw std::invalid_argument("covers_with_k needs a complete matching set");
    CoverResult res;
    int m = (int)g.edges().size();
    if (m == 0) {
        res.verdict = Verdict::Yes;
        return res;
    }
    if (pms.matchings.empty() || k <= 0) {
        res.verdict = Verdict::No;
        return res;
    }

    CoverSearch cs(g, pms, k, limits);
    for (int e = 0; e < m; ++e)
        if (cs.containing[e].empty()) {
            res.verdict = Verdict::No; // an edge in no matching can't be covered
            return res;
        }

    std::vector<int> chosen;
    Bits none(m);
    bool found = cs.rec(none, 0, chosen);
    res.nodes = cs.nodes;
    if (cs.timed_out) {
        res.verdict = Verdict::Timeout;
        return res;
    }
    if (!found) {
        res.verdict = Verdict::No;
        return res;
    }
    while ((int)chosen.size() < k) chosen.push_back(chosen.back());
    res.verdict = Verdict::Yes;
    res.cover.matching_indices = std::move(chosen);
    return res;
}

TauResult perfect_matching_index(const Multipole& g,
                                 const PerfectMatchingSet& pms,
                                 const SearchLimits& limits) {
    if (!pms.complete)
        throw std::invalid_argument("perfect_matching_index needs a complete set");
    auto rep = validate(g);
    if (!rep.is_bridgeless)
        throw std::invalid_argument(
            "perfect_matching_index undefined: graph has a bridge");

    TauResult res;

    // tau = 3 iff 3-edge-colorable: a 3-matching cover of a cubic graph is a
    // partition, i.e. a proper coloring. The color classes are the cover.
    auto col = find_3_edge_coloring(g, {}, limits);
    if (col.verdict == Verdict::Timeout) {
        res.verdict = Verdict::Timeout;
        return res;
    }
    res.log.push_back({3, col.verdict, col.nodes});
    if (col.verdict == Verdict::Yes) {
        for (int color = 1; color <= 3; ++color) {
            std::vector<int> cls;
            for (int e = 0; e < (int)g.edges().size(); ++e)
                if (col.coloring.item_colors[e] == color) cls.push_back(e);
            auto it = std::find(pms.matchings.begin(), pms.matchings.end(), cls);
            if (it == pms.matchings.end())
                throw std::logic_error("color class missing from a complete set");
            res.cover.matching_indices.push_back(
                (int)(it - pms.matchings.begin()));
        }
        res.verdict = Verdict::Yes;
        res.tau = 3;
        return res;
    }

    for (int k = 4; k <= (int)pms.matchings.size(); ++k) {
        auto c = covers_with_k(g, pms, k, limits);
        res.log.push_back({k, c.verdict, c.nodes});
        if (c.verdict == Verdict::Timeout) {
            res.verdict = Verdict::Timeout;
            return res;
        }
        if (c.verdict == Verdict::Yes) {
            res.verdict = Verdict::Yes;
            res.tau = k;
            res.cover = c.cover;
            return res;
        }
    }
    res.verdict = Verdict::No; // no cover by any number of matchings
    return res;
}

CoverResult fulkerson_double_cover(const Multipole& g,
                                   const PerfectMatchingSet& pms,
                                   const SearchLimits& limits) {
    if (!pms.complete)
        throw std::invalid_argument("fulkerson_double_cover needs a complete set");
    CoverResult res;
    int m = (int)g.edges().size();
    int count = (int)pms.matchings.size();
    if (count == 0) {
        res.verdict = Verdict::No;
        return res;
    }

    std::vector<Bits> sets;
    for (const auto& pm : pms.matchings) {
        Bits b(m);
        for (int e : pm) b.set(e);
        sets.push_back(std::move(b));
    }

    Deadline deadline(limits.time_limit_s);
    std::uint64_t nodes = 0;
    bool timed_out = false;
    std::vector<int> chosen;

    // once/twice coverage masks; an edge may never be covered three times.
    auto rec = [&](auto&& self, Bits once, Bits twice, int last, int depth) -> bool {
        if ((++nodes & 1023) == 0 && deadline.expired()) {
            timed_out = true;
            return false;
        }
        if (nodes > limits.node_limit) {
            timed_out = true;
            return false;
        }
        if (depth == 6) {
            for (std::size_t i = 0; i < twice.w.size(); ++i) {
                std::uint64_t all = i + 1 < twice.w.size()
                                        ? ~0ull
                                        : (m % 64 ? (1ull << (m % 64)) - 1 : ~0ull);
                if (twice.w[i] != all) return false;
            }
            return true;
        }
        for (int i = last; i < count; ++i) { // nondecreasing: repeats allowed
            if (twice.intersects(sets[i])) continue;
            Bits nonce = once, ntwice = twice;
            for (std::size_t w = 0; w < nonce.w.size(); ++w) {
                ntwice.w[w] |= once.w[w] & sets[i].w[w];
                nonce.w[w] ^= sets[i].w[w];
            }
            chosen.push_back(i);
            if (self(self, std::move(nonce), std::move(ntwice), i, depth + 1))
                return true;
            chosen.pop_back();
            if (timed_out) return false;
        }
        return false;
    };

    bool found = m == 0 ? true : rec(rec, Bits(m), Bits(m), 0, 0);
    res.nodes = nodes;
    if (timed_out) {
        res.verdict = Verdict::Timeout;
        return res;
    }
    if (!found) {
        res.verdict = Verdict::No;
        return res;
    }
    res.verdict = Verdict::Yes;
    res.cover.matching_indices = std::move(chosen);
    return res;
}

bool verify_matching_cover(const Multipole& g, const PerfectMatchingSet& pms,
                           const MatchingCover& cover, bool exactly_twice) {
    int m = (int)g.edges().size();
    std::vector<int> cnt(m, 0);
    for (int idx : cover.matching_indices) {
        if (idx < 0 || idx >= (int)pms.matchings.size()) return false;
        if (!is_perfect_matching(g, pms.matchings[idx])) return false;
        for (int e : pms.matchings[idx]) cnt[e]++;
    }
    for (int e = 0; e < m; ++e) {
        if (exactly_twice && cnt[e] != 2) return false;
        if (!exactly_twice && cnt[e] < 1) return false;
    }
    return true;
}

} // namespace snark
