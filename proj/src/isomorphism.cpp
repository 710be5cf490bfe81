#include "snark/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace snark {

namespace {

struct VertexKey {
    int degree;
    int semi;
    bool operator==(const VertexKey& o) const {
        return degree == o.degree && semi == o.semi;
    }
};

VertexKey key_of(const Multipole& g, int v) {
    return {(int)g.adjacency()[v].size(), (int)g.semiedges_at()[v].size()};
}

bool extend(const Multipole& a, const Multipole& b, std::vector<int>& map,
            std::vector<char>& used, int v) {
    int n = a.vertex_count();
    if (v == n) return true;
    VertexKey ka = key_of(a, v);
    for (int w = 0; w < n; ++w) {
        if (used[w] || !(key_of(b, w) == ka)) continue;
        bool ok = true;
        for (int x = 0; x < v && ok; ++x)
            if (a.has_edge(x, v) != b.has_edge(map[x], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend(a, b, map, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool isomorphic(const Multipole& a, const Multipole& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edges().size() != b.edges().size()) return false;
    if (a.semiedges().size() != b.semiedges().size()) return false;
    std::vector<int> map(a.vertex_count(), -1);
    std::vector<char> used(a.vertex_count(), 0);
    return extend(a, b, map, used, 0);
}

namespace {

struct Canonizer {
    int n;
    std::vector<std::uint64_t> adj;
    std::vector<std::uint64_t> best;
    bool have_best = false;

    // Stable refinement: split cells by sorted multisets of neighbor colors.
    void refine(std::vector<int>& color) const {
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> s;
                s.push_back(color[v]);
                for (int w = 0; w < n; ++w)
                    if ((adj[v] >> w) & 1) s.push_back(color[w]);
                std::sort(s.begin() + 1, s.end());
                sig[v] = {std::move(s), v};
            }
            std::vector<int> order(n);
            for (int v = 0; v < n; ++v) order[v] = v;
            std::sort(order.begin(), order.end(), [&](int x, int y) {
                return sig[x].first < sig[y].first;
            });
            std::vector<int> next(n);
            int c = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) c++;
                next[order[i]] = c;
            }
            if (next == color) return;
            color = std::move(next);
        }
    }

    void emit(const std::vector<int>& color) {
        std::vector<int> pos(n);
        for (int v = 0; v < n; ++v) pos[color[v]] = v; // color is discrete
        std::vector<std::uint64_t> enc(n, 0);
        for (int i = 0; i < n; ++i) {
            int v = pos[i];
            for (int j = 0; j < n; ++j)
                if ((adj[v] >> pos[j]) & 1) enc[i] |= 1ull << j;
        }
        if (!have_best || enc < best) {
            best = std::move(enc);
            have_best = true;
        }
    }

    void rec(std::vector<int> color) {
        refine(color);
        int cell = -1, cell_color = -1;
        for (int c = 0; c < n && cell < 0; ++c) {
            int cnt = 0;
            for (int v = 0; v < n; ++v)
                if (color[v] == c) cnt++;
            if (cnt > 1) {
                cell = c;
                cell_color = c;
            }
        }
        if (cell < 0) {
            emit(color);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != cell_color) continue;
            auto next = color;
            for (int w = 0; w < n; ++w)
                if (next[w] >= cell_color && w != v) next[w]++;
            rec(std::move(next));
        }
    }
};

} // namespace

std::vector<std::uint64_t> canonical_form(const Multipole& g) {
    if (!g.semiedges().empty())
        throw std::invalid_argument("canonical_form: plain graphs only");
    if (g.vertex_count() > 64)
        throw std::invalid_argument("canonical_form: at most 64 vertices");
    Canonizer c;
    c.n = g.vertex_count();
    c.adj.assign(c.n, 0);
    for (auto [u, v] : g.edges()) {
        c.adj[u] |= 1ull << v;
        c.adj[v] |= 1ull << u;
    }
    c.rec(std::vector<int>(c.n, 0));
    auto out = c.best;
    out.insert(out.begin(), (std::uint64_t)c.n);
    return out;
}

} // namespace snark
