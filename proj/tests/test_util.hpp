// Small independent oracles used by the test suites. These deliberately
// avoid the library's own code paths wherever they act as cross-checks.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "snark/multipole.hpp"

namespace testutil {

// Independent graph6 encoder, written directly from the published byte
// layout (column-major upper triangle, 6 bits per byte, bias 63).
inline std::string encode_graph6_oracle(int n,
                                        const std::vector<snark::Edge>& edges) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
    std::string out;
    out.push_back((char)(63 + n)); // n < 63 is enough for these tests
    std::vector<int> bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) bits.push_back(adj[row][col]);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int val = 0;
        for (int j = 0; j < 6; ++j) val = val * 2 + bits[i + j];
        out.push_back((char)(63 + val));
    }
    return out;
}

// Brute-force shortest cycle by DFS over all simple cycles (small graphs).
inline int shortest_cycle_oracle(const snark::Multipole& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<char> visited(n, 0);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int start, int u) -> void {
        for (auto [w, eid] : g.adjacency()[u]) {
            if (w == start && path.size() >= 3) {
                if (best < 0 || (int)path.size() < best) best = (int)path.size();
            }
            if (w <= start || visited[w]) continue;
            visited[w] = 1;
            path.push_back(w);
            self(self, start, w);
            path.pop_back();
            visited[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        std::fill(visited.begin(), visited.end(), 0);
        visited[s] = 1;
        path = {s};
        dfs(dfs, s, s);
    }
    return best;
}

// Brute-force longest simple cycle (small graphs only).
inline int longest_cycle_oracle(const snark::Multipole& g) {
    int n = g.vertex_count();
    int best = 0;
    std::vector<char> visited(n, 0);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int start, int u) -> void {
        for (auto [w, eid] : g.adjacency()[u]) {
            if (w == start && path.size() >= 3)
                best = std::max(best, (int)path.size());
            if (w <= start || visited[w]) continue;
            visited[w] = 1;
            path.push_back(w);
            self(self, start, w);
            path.pop_back();
            visited[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        std::fill(visited.begin(), visited.end(), 0);
        visited[s] = 1;
        path = {s};
        dfs(dfs, s, s);
    }
    return best;
}

// All perfect matchings by brute force over edge subsets of size n/2.
inline std::vector<std::vector<int>> perfect_matchings_oracle(
    const snark::Multipole& g) {
    int n = g.vertex_count(), m = (int)g.edges().size();
    std::vector<std::vector<int>> out;
    if (n % 2 != 0) return out;
    int k = n / 2;
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    if (k > m) return out;
    while (true) {
        std::vector<char> covered(n, 0);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            auto [u, v] = g.edges()[combo[i]];
            if (covered[u] || covered[v]) ok = false;
            covered[u] = covered[v] = 1;
        }
        if (ok) out.push_back(combo);
        int i = k - 1;
        while (i >= 0 && combo[i] == m - k + i) --i;
        if (i < 0) break;
        combo[i]++;
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    return out;
}

} // namespace testutil
