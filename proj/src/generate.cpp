#include "snark/generate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "snark/coloring.hpp"
#include "snark/isomorphism.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace snark {

namespace {

// Bounded uniform draw without std::uniform_int_distribution, whose output
// is not pinned down by the standard across implementations.
int draw(std::mt19937_64& rng, int bound) {
    std::uint64_t span = (std::uint64_t)bound;
    std::uint64_t limit = ~0ull - (~0ull % span);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return (int)(x % span);
}

} // namespace

Multipole random_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_cubic: need even n >= 4");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(3 * n);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        for (int i = (int)stubs.size() - 1; i > 0; --i)
            std::swap(stubs[i], stubs[draw(rng, i + 1)]);
        std::vector<Edge> edges;
        bool ok = true;
        std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
        for (int i = 0; i < (int)stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen[u][v]) {
                ok = false;
                break;
            }
            seen[u][v] = seen[v][u] = 1;
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
        if (ok) return Multipole::make(n, std::move(edges));
    }
    throw std::runtime_error("random_cubic: pairing kept failing");
}

Multipole random_cubic_bridgeless(int n, std::uint64_t seed,
                                  bool require_colorable) {
    for (std::uint64_t s = seed;; ++s) {
        auto g = random_cubic(n, s);
        auto rep = validate(g);
        if (!rep.is_connected || !rep.is_bridgeless) continue;
        if (require_colorable &&
            find_3_edge_coloring(g).verdict != Verdict::Yes)
            continue;
        return g;
    }
}

namespace {

// Descending partitions of n into parts >= 3.
void partitions_rec(int remaining, int max_part,
                    std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 3; --p) {
        if (remaining - p != 0 && remaining - p < 3) continue;
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}

struct LayoutEnumerator {
    int n;
    std::vector<Edge> cycle_edges;
    std::vector<std::vector<char>> forbidden; // cycle adjacency

    explicit LayoutEnumerator(const std::vector<int>& parts) {
        n = 0;
        for (int p : parts) n += p;
        forbidden.assign(n, std::vector<char>(n, 0));
        int base = 0;
        for (int p : parts) {
            for (int i = 0; i < p; ++i) {
                int u = base + i, v = base + (i + 1) % p;
                cycle_edges.push_back({std::min(u, v), std::max(u, v)});
                forbidden[u][v] = forbidden[v][u] = 1;
            }
            base += p;
        }
    }

    // Enumerates perfect matchings on the spare slots; first_partner pins
    // vertex 0's partner so the top level can run in parallel.
    template <typename F>
    void matchings(int first_partner, F&& emit) const {
        std::vector<int> partner(n, -1);
        std::vector<Edge> matching;
        if (forbidden[0][first_partner]) return;
        partner[0] = first_partner;
        partner[first_partner] = 0;
        matching.push_back({0, first_partner});
        rec(partner, matching, emit);
    }

    template <typename F>
    void rec(std::vector<int>& partner, std::vector<Edge>& matching,
             F&& emit) const {
        int u = 0;
        while (u < n && partner[u] >= 0) u++;
        if (u == n) {
            emit(matching);
            return;
        }
        partner[u] = u; // mark in progress
        for (int v = u + 1; v < n; ++v) {
            if (partner[v] >= 0 || forbidden[u][v]) continue;
            partner[u] = v;
            partner[v] = u;
            matching.push_back({u, v});
            rec(partner, matching, emit);
            matching.pop_back();
            partner[v] = -1;
        }
        partner[u] = -1;
    }
};

} // namespace

std::vector<Multipole> all_bridgeless_cubic(int n, int threads) {
    std::vector<Multipole> out;
    if (n < 4 || n % 2 != 0) return out;

    std::vector<std::vector<int>> parts_list;
    std::vector<int> cur;
    partitions_rec(n, n, cur, parts_list);

    // canonical form -> lexicographically least edge list seen
    std::map<std::vector<std::uint64_t>, std::vector<Edge>> reps;

    for (const auto& parts : parts_list) {
        LayoutEnumerator layout(parts);
        std::vector<std::map<std::vector<std::uint64_t>, std::vector<Edge>>>
            local(std::max(1, threads));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, threads))
#endif
        for (int fp = 1; fp < n; ++fp) {
#ifdef _OPENMP
            auto& mine = local[omp_get_thread_num() % local.size()];
#else
            auto& mine = local[0];
#endif
            layout.matchings(fp, [&](const std::vector<Edge>& matching) {
                std::vector<Edge> edges = layout.cycle_edges;
                edges.insert(edges.end(), matching.begin(), matching.end());
                auto g = Multipole::make(n, edges);
                auto rep = validate(g);
                if (!rep.is_connected || !rep.is_bridgeless) return;
                auto canon = canonical_form(g);
                auto it = mine.find(canon);
                if (it == mine.end() || g.edges() < it->second)
                    mine[canon] = g.edges();
            });
        }
        for (auto& m : local)
            for (auto& [canon, edges] : m) {
                auto it = reps.find(canon);
                if (it == reps.end() || edges < it->second)
                    reps[canon] = std::move(edges);
            }
    }

    for (auto& [canon, edges] : reps)
        out.push_back(Multipole::make(n, edges));
    return out;
}

} // namespace snark
