#include "snark/coloring.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace snark {

namespace {

inline bool bit(const std::vector<std::uint64_t>& mask, int i) {
    return !mask.empty() && ((mask[i / 64] >> (i % 64)) & 1);
}

} // namespace

// ---------------------------------------------------------------------------
// Solver internals. Items are ordered vertex block by vertex block (greedy
// frontier-minimizing vertex order); after each completed block the parity
// lemma is applied to the uncolored remainder, treating missing edge slots
// as free stubs.
// ---------------------------------------------------------------------------

struct ColoringSolver::Impl {
    const Multipole& g;
    int n, m, s, items;
    std::vector<std::array<int, 2>> ends; // second = -1 for semiedges
    std::vector<int> order;               // order[pos] = item id
    std::vector<int> vertex_rank;         // processing rank of each vertex

    struct Checkpoint {
        std::vector<int> crossing_edges; // edge ids leaving the prefix
        std::vector<int> outside_semis;  // item ids of semiedges owned outside
        int static_deficiency = 0;       // sum over outside of (3 - degree)
    };
    // checkpoint_at[p] >= 0: evaluate before expanding position p
    std::vector<int> checkpoint_at;
    std::vector<Checkpoint> checkpoints;

    explicit Impl(const Multipole& graph) : g(graph) {
        n = g.vertex_count();
        m = (int)g.edges().size();
        s = (int)g.semiedges().size();
        items = m + s;
        ends.resize(items);
        for (int e = 0; e < m; ++e)
            ends[e] = {g.edges()[e].first, g.edges()[e].second};
        for (int i = 0; i < s; ++i)
            ends[m + i] = {g.semiedges()[i].owner, -1};

        // Greedy vertex order: always take the unprocessed vertex with the
        // most processed neighbors (smallest id on ties).
        vertex_rank.assign(n, -1);
        std::vector<int> vo;
        std::vector<int> links(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (vertex_rank[v] >= 0) continue;
                if (best < 0 || links[v] > links[best]) best = v;
            }
            vertex_rank[best] = step;
            vo.push_back(best);
            for (auto [w, eid] : g.adjacency()[best])
                if (vertex_rank[w] < 0) links[w]++;
        }

        // Items appear at the step of their first processed endpoint.
        order.reserve(items);
        checkpoint_at.assign(items + 1, -1);
        std::vector<char> appended(items, 0);
        for (int step = 0; step < n; ++step) {
            int v = vo[step];
            for (auto [w, eid] : g.adjacency()[v])
                if (!appended[eid]) {
                    appended[eid] = 1;
                    order.push_back(eid);
                }
            for (int sid : g.semiedges_at()[v]) {
                appended[m + sid] = 1;
                order.push_back(m + sid);
            }
            // Checkpoint after this block: prefix = vo[0..step].
            Checkpoint cp;
            for (int e = 0; e < m; ++e) {
                bool iu = vertex_rank[ends[e][0]] <= step;
                bool iv = vertex_rank[ends[e][1]] <= step;
                if (iu != iv) cp.crossing_edges.push_back(e);
            }
            for (int i = 0; i < s; ++i)
                if (vertex_rank[g.semiedges()[i].owner] > step)
                    cp.outside_semis.push_back(m + i);
            for (int w = 0; w < n; ++w)
                if (vertex_rank[w] > step)
                    cp.static_deficiency += 3 - g.degree(w);
            checkpoint_at[(int)order.size()] = (int)checkpoints.size();
            checkpoints.push_back(std::move(cp));
        }
    }

    struct Run {
        const Impl* self;
        const std::vector<std::uint64_t>* removed;
        std::vector<int> color;          // per item, 0 = free
        std::vector<std::uint8_t> avail; // per vertex, bits 1..3
        std::vector<int> removal_deficiency; // per checkpoint
        const std::function<bool(const EdgeColoring&)>* cb = nullptr;
        bool symmetry = false;
        Deadline deadline{0};
        std::uint64_t node_limit = 0;
        std::uint64_t nodes = 0;
        int status = 0; // 0 searching, 1 stop (found / cb break), 2 timeout
        EdgeColoring found;

        bool parity_ok(int cpi) const {
            const auto& cp = self->checkpoints[cpi];
            int counts[4] = {0, 0, 0, 0};
            int boundary = 0, uncolored = 0;
            for (int e : cp.crossing_edges) {
                if (bit(*removed, e)) continue;
                boundary++;
                counts[color[e]]++;
            }
            for (int it : cp.outside_semis) {
                boundary++;
                if (color[it] > 0)
                    counts[color[it]]++;
                else
                    uncolored++;
            }
            int slack = cp.static_deficiency + removal_deficiency[cpi];
            boundary += slack;
            uncolored += slack;
            int need = 0;
            for (int c = 1; c <= 3; ++c) need += (boundary - counts[c]) & 1;
            return need <= uncolored;
        }

        void dfs(int pos, int max_used) {
            if (status) return;
            if ((++nodes & 2047) == 0 && deadline.expired()) {
                status = 2;
                return;
            }
            if (nodes > node_limit) {
                status = 2;
                return;
            }
            if (int cpi = self->checkpoint_at[pos]; cpi >= 0 && !parity_ok(cpi))
                return;
            if (pos == self->items) {
                if (cb) {
                    EdgeColoring c{color};
                    if (!(*cb)(c)) status = 1;
                } else {
                    found = EdgeColoring{color};
                    status = 1;
                }
                return;
            }
            int item = self->order[pos];
            if (item < self->m && bit(*removed, item)) {
                dfs(pos + 1, max_used);
                return;
            }
            if (color[item] != 0) { // pre-fixed semiedge
                dfs(pos + 1, max_used);
                return;
            }
            auto [u, v] = self->ends[item];
            std::uint8_t free = avail[u];
            if (v >= 0) free &= avail[v];
            int cap = symmetry ? std::min(3, max_used + 1) : 3;
            for (int c = 1; c <= cap; ++c) {
                if (!((free >> c) & 1)) continue;
                color[item] = c;
                avail[u] &= ~(1 << c);
                if (v >= 0) avail[v] &= ~(1 << c);
                dfs(pos + 1, std::max(max_used, c));
                avail[u] |= 1 << c;
                if (v >= 0) avail[v] |= 1 << c;
                color[item] = 0;
                if (status) return;
            }
        }
    };

    // status codes map onto verdicts in the public wrappers
    Run start(const FixedColors& fixed, const std::vector<std::uint64_t>& removed,
              const SearchLimits& limits, bool symmetry) const {
        Run r;
        r.self = this;
        r.removed = &removed;
        r.color.assign(items, 0);
        r.avail.assign(n, 0b1110);
        r.deadline = Deadline(limits.time_limit_s);
        r.node_limit = limits.node_limit;
        r.symmetry = symmetry && fixed.empty();
        for (auto [sid, c] : fixed) {
            if (sid < 0 || sid >= s)
                throw std::invalid_argument("fixed color: bad semiedge index");
            if (c < 1 || c > 3)
                throw std::invalid_argument("fixed color: color out of range");
            int item = m + sid;
            int owner = g.semiedges()[sid].owner;
            if (!((r.avail[owner] >> c) & 1))
                throw std::invalid_argument("fixed colors are not proper");
            r.color[item] = c;
            r.avail[owner] &= ~(1 << c);
        }
        // per-checkpoint slack from removed edges with endpoints outside
        r.removal_deficiency.assign(checkpoints.size(), 0);
        if (!removed.empty())
            for (int e = 0; e < m; ++e)
                if (bit(removed, e))
                    for (int end = 0; end < 2; ++end) {
                        int rank = vertex_rank[ends[e][end]];
                        for (int cp = 0; cp < rank; ++cp)
                            r.removal_deficiency[cp]++;
                    }
        return r;
    }
};

ColoringSolver::ColoringSolver(const Multipole& g) : impl_(new Impl(g)) {}
ColoringSolver::~ColoringSolver() { delete impl_; }

ColoringResult ColoringSolver::solve(const FixedColors& fixed,
                                     const std::vector<std::uint64_t>& removed,
                                     const SearchLimits& limits,
                                     bool break_symmetry) const {
    auto run = impl_->start(fixed, removed, limits, break_symmetry);
    run.dfs(0, 0);
    ColoringResult res;
    res.nodes = run.nodes;
    if (run.status == 1) {
        res.verdict = Verdict::Yes;
        res.coloring = std::move(run.found);
    } else if (run.status == 2) {
        res.verdict = Verdict::Timeout;
    } else {
        res.verdict = Verdict::No;
    }
    return res;
}

Verdict ColoringSolver::enumerate(const FixedColors& fixed,
                                  const std::vector<std::uint64_t>& removed,
                                  const std::function<bool(const EdgeColoring&)>& cb,
                                  const SearchLimits& limits) const {
    auto run = impl_->start(fixed, removed, limits, false);
    run.cb = &cb;
    run.dfs(0, 0);
    if (run.status == 2) return Verdict::Timeout;
    return run.status == 1 ? Verdict::Yes : Verdict::No;
}

ColoringResult find_3_edge_coloring(const Multipole& m, const FixedColors& fixed,
                                    const SearchLimits& limits) {
    ColoringSolver solver(m);
    return solver.solve(fixed, {}, limits, true);
}

Verdict for_each_coloring(const Multipole& m, const FixedColors& fixed,
                          const std::function<bool(const EdgeColoring&)>& cb,
                          const SearchLimits& limits) {
    ColoringSolver solver(m);
    return solver.enumerate(fixed, {}, cb, limits);
}

ColoringResult find_3_edge_coloring_reference(const Multipole& g,
                                              const FixedColors& fixed,
                                              const SearchLimits& limits) {
    int m = (int)g.edges().size(), s = (int)g.semiedges().size();
    int items = m + s;
    ColoringResult res;
    std::vector<int> color(items, 0);
    std::vector<std::uint8_t> avail(g.vertex_count(), 0b1110);
    for (auto [sid, c] : fixed) {
        color[m + sid] = c;
        avail[g.semiedges()[sid].owner] &= ~(1 << c);
    }
    Deadline deadline(limits.time_limit_s);
    std::uint64_t nodes = 0;
    int status = 0;
    auto rec = [&](auto&& self, int item) -> void {
        if (status) return;
        if ((++nodes & 2047) == 0 && deadline.expired()) {
            status = 2;
            return;
        }
        if (item == items) {
            status = 1;
            return;
        }
        if (color[item] != 0) {
            self(self, item + 1);
            return;
        }
        int u, v = -1;
        if (item < m) {
            u = g.edges()[item].first;
            v = g.edges()[item].second;
        } else {
            u = g.semiedges()[item - m].owner;
        }
        for (int c = 1; c <= 3; ++c) {
            if (!((avail[u] >> c) & 1)) continue;
            if (v >= 0 && !((avail[v] >> c) & 1)) continue;
            color[item] = c;
            avail[u] &= ~(1 << c);
            if (v >= 0) avail[v] &= ~(1 << c);
            self(self, item + 1);
            avail[u] |= 1 << c;
            if (v >= 0) avail[v] |= 1 << c;
            if (status) return;
            color[item] = 0;
        }
    };
    rec(rec, 0);
    res.nodes = nodes;
    if (status == 1) {
        res.verdict = Verdict::Yes;
        res.coloring = EdgeColoring{color};
    } else {
        res.verdict = status == 2 ? Verdict::Timeout : Verdict::No;
    }
    return res;
}

bool is_proper_coloring(const Multipole& g, const EdgeColoring& c) {
    int m = (int)g.edges().size(), s = (int)g.semiedges().size();
    if ((int)c.item_colors.size() != m + s) return false;
    for (int col : c.item_colors)
        if (col < 1 || col > 3) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int seen = 0;
        for (auto [w, eid] : g.adjacency()[v]) {
            int b = 1 << c.item_colors[eid];
            if (seen & b) return false;
            seen |= b;
        }
        for (int sid : g.semiedges_at()[v]) {
            int b = 1 << c.item_colors[m + sid];
            if (seen & b) return false;
            seen |= b;
        }
    }
    return true;
}

bool verify_parity(const Multipole& g, const EdgeColoring& c, const EdgeCut& cut) {
    int n = g.vertex_count();
    std::vector<char> in_a(n, 0);
    for (int v : cut.side_a) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("verify_parity: vertex out of range");
        if (in_a[v])
            throw std::invalid_argument("verify_parity: duplicate vertex in cut side");
        in_a[v] = 1;
    }
    int a = (int)cut.side_a.size();
    if (a == 0 || a == n)
        throw std::invalid_argument("verify_parity: cut side must be a proper subset");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 3)
            throw std::invalid_argument("verify_parity: all degrees must be 3");

    int counts[4] = {0, 0, 0, 0};
    int size = 0;
    for (int e = 0; e < (int)g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        if (in_a[u] != in_a[v]) {
            size++;
            counts[c.item_colors[e]]++;
        }
    }
    int m = (int)g.edges().size();
    for (int i = 0; i < (int)g.semiedges().size(); ++i)
        if (in_a[g.semiedges()[i].owner]) {
            size++;
            counts[c.item_colors[m + i]]++;
        }
    for (int col = 1; col <= 3; ++col)
        if (((counts[col] - size) % 2 + 2) % 2 != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Resistance: iterative deepening over removal sets in lexicographic order.
// The scan runs in fixed-size chunks so the parallel path returns the same
// (lexicographically least) witness as the serial one.
// ---------------------------------------------------------------------------

namespace {

struct RemovalScan {
    const Multipole& g;
    const ColoringSolver& solver;
    int universe;                                  // edges or vertices
    std::function<void(int, std::vector<std::uint64_t>&)> add_to_mask;
    std::uint64_t nodes = 0;

    // Returns index of first successful combination, or -1; -2 on timeout.
    long long scan_size(int size, const Deadline& deadline, int threads,
                        std::vector<int>& witness_out) {
        if (size > universe) return -1;
        if (size == 0) {
            auto r = solver.solve({}, {}, SearchLimits{}, true);
            nodes += r.nodes;
            if (r.verdict == Verdict::Yes) {
                witness_out.clear();
                return 0;
            }
            return -1;
        }

        auto next_combo = [&](std::vector<int>& c) -> bool {
            int i = size - 1;
            while (i >= 0 && c[i] == universe - size + i) --i;
            if (i < 0) return false;
            c[i]++;
            for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
            return true;
        };

        std::vector<int> combo(size);
        for (int i = 0; i < size; ++i) combo[i] = i;
        const int chunk = 2048;
        std::vector<std::vector<int>> batch;
        bool exhausted = false;
        long long base = 0;
        while (!exhausted) {
            batch.clear();
            while ((int)batch.size() < chunk && !exhausted) {
                batch.push_back(combo);
                exhausted = !next_combo(combo);
            }
            if (batch.empty()) break;
            if (deadline.expired()) return -2;
            std::vector<char> ok(batch.size(), 0);
            std::vector<std::uint64_t> node_counts(batch.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(1, threads))
#endif
            for (int i = 0; i < (int)batch.size(); ++i) {
                std::vector<std::uint64_t> mask((g.edges().size() + 63) / 64, 0);
                for (int x : batch[i]) add_to_mask(x, mask);
                SearchLimits lim;
                auto r = solver.solve({}, mask, lim, true);
                node_counts[i] = r.nodes;
                ok[i] = r.verdict == Verdict::Yes ? 1 : 0;
            }
            for (auto c : node_counts) nodes += c;
            for (int i = 0; i < (int)batch.size(); ++i)
                if (ok[i]) {
                    witness_out = batch[i];
                    return base + i;
                }
            base += (long long)batch.size();
        }
        return -1;
    }
};

ResistanceResult removal_resistance(const Multipole& g, const SearchLimits& limits,
                                    int max_size, bool vertices) {
    ResistanceResult res;
    ColoringSolver solver(g);
    Deadline deadline(limits.time_limit_s);

    RemovalScan scan{g, solver,
                     vertices ? g.vertex_count() : (int)g.edges().size(),
                     nullptr};
    if (vertices)
        scan.add_to_mask = [&](int v, std::vector<std::uint64_t>& mask) {
            for (auto [w, eid] : g.adjacency()[v]) mask[eid / 64] |= 1ull << (eid % 64);
        };
    else
        scan.add_to_mask = [&](int e, std::vector<std::uint64_t>& mask) {
            mask[e / 64] |= 1ull << (e % 64);
        };

    int cap = max_size < 0 ? scan.universe : std::min(max_size, scan.universe);
    for (int size = 0; size <= cap; ++size) {
        std::vector<int> witness;
        long long hit = scan.scan_size(size, deadline, limits.threads, witness);
        if (hit == -2) {
            res.verdict = Verdict::Timeout;
            res.nodes = scan.nodes;
            return res;
        }
        if (hit >= 0) {
            res.verdict = Verdict::Yes;
            res.value = size;
            res.witness = witness;
            std::vector<std::uint64_t> mask((g.edges().size() + 63) / 64, 0);
            for (int x : witness) scan.add_to_mask(x, mask);
            auto r = solver.solve({}, mask, SearchLimits{}, true);
            res.coloring = r.coloring;
            res.nodes = scan.nodes;
            return res;
        }
    }
    res.verdict = Verdict::No; // nothing up to the cap
    res.nodes = scan.nodes;
    return res;
}

} // namespace

ResistanceResult resistance_r3(const Multipole& g, const SearchLimits& limits,
                               int max_size) {
    return removal_resistance(g, limits, max_size, false);
}

ResistanceResult vertex_resistance_rho(const Multipole& g,
                                       const SearchLimits& limits, int max_size) {
    return removal_resistance(g, limits, max_size, true);
}

// ---------------------------------------------------------------------------
// Oddness over the enumerated 2-factors.
// ---------------------------------------------------------------------------

TwoFactor two_factor_from_matching(const Multipole& g,
                                   const std::vector<int>& matching_edges) {
    TwoFactor tf;
    std::vector<char> in_matching(g.edges().size(), 0);
    for (int e : matching_edges) in_matching[e] = 1;
    for (int e = 0; e < (int)g.edges().size(); ++e)
        if (!in_matching[e]) tf.edges.push_back(e);

    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e : tf.edges) {
        auto [u, v] = g.edges()[e];
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    for (int v = 0; v < n; ++v)
        if (adj[v].size() != 2)
            throw std::invalid_argument("two_factor_from_matching: not 2-regular");

    std::vector<char> visited(n, 0);
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle;
        int prev = -1, cur = start;
        do {
            visited[cur] = 1;
            cycle.push_back(cur);
            int next = adj[cur][0].first == prev ? adj[cur][1].first
                                                 : adj[cur][0].first;
            prev = cur;
            cur = next;
        } while (cur != start);
        if (cycle.size() % 2 == 1) tf.odd_count++;
        tf.components.push_back(std::move(cycle));
    }
    return tf;
}

OddnessResult oddness(const Multipole& g, const PerfectMatchingSet& pms,
                      const SearchLimits& limits) {
    if (!pms.complete)
        throw std::invalid_argument("oddness needs the complete matching set");
    if (!g.is_cubic_graph())
        throw std::invalid_argument("oddness: cubic graphs only");
    OddnessResult res;
    if (pms.matchings.empty()) return res; // no 2-factor

    int count = (int)pms.matchings.size();
    std::vector<int> odd(count, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(std::max(1, limits.threads))
#endif
    for (int i = 0; i < count; ++i)
        odd[i] = two_factor_from_matching(g, pms.matchings[i]).odd_count;

    int best = 0;
    for (int i = 1; i < count; ++i)
        if (odd[i] < odd[best]) best = i;
    res.verdict = Verdict::Yes;
    res.value = odd[best];
    res.witness = two_factor_from_matching(g, pms.matchings[best]);
    return res;
}

} // namespace snark
