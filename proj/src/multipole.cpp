#include "snark/multipole.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace snark {

Multipole Multipole::make(int vertex_count, std::vector<Edge> edges,
                          std::vector<Semiedge> semiedges) {
    if (vertex_count < 0)
        throw std::invalid_argument("multipole: negative vertex count");
    Multipole m;
    m.n_ = vertex_count;
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= vertex_count)
            throw std::invalid_argument("multipole: edge endpoint out of range");
        if (e.first == e.second)
            throw std::invalid_argument("multipole: loops are not allowed");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("multipole: parallel edges are not allowed");
    m.edges_ = std::move(edges);

    for (const auto& s : semiedges) {
        if (s.owner < 0 || s.owner >= vertex_count)
            throw std::invalid_argument("multipole: semiedge owner out of range");
        for (const auto& t : semiedges)
            if (&s != &t && s.label == t.label)
                throw std::invalid_argument("multipole: duplicate semiedge label '" +
                                            s.label + "'");
    }
    m.semiedges_ = std::move(semiedges);

    m.degree_.assign(vertex_count, 0);
    m.adj_.assign(vertex_count, {});
    m.semi_at_.assign(vertex_count, {});
    for (int i = 0; i < (int)m.edges_.size(); ++i) {
        auto [u, v] = m.edges_[i];
        m.degree_[u]++;
        m.degree_[v]++;
        m.adj_[u].push_back({v, i});
        m.adj_[v].push_back({u, i});
    }
    for (int i = 0; i < (int)m.semiedges_.size(); ++i) {
        m.degree_[m.semiedges_[i].owner]++;
        m.semi_at_[m.semiedges_[i].owner].push_back(i);
    }
    for (int v = 0; v < vertex_count; ++v) {
        // k-poles are cubic-graph fragments; plain graphs (the graph6
        // carrier) may have any degrees and are vetted by validate().
        if (!m.semiedges_.empty() && m.degree_[v] > 3)
            throw std::invalid_argument("multipole: degree above 3 at vertex " +
                                        std::to_string(v));
        std::sort(m.adj_[v].begin(), m.adj_[v].end());
    }
    return m;
}

int Multipole::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it != edges_.end() && *it == Edge{u, v})
        return (int)(it - edges_.begin());
    return -1;
}

bool Multipole::is_cubic_graph() const {
    if (!semiedges_.empty()) return false;
    for (int v = 0; v < n_; ++v)
        if (degree_[v] != 3) return false;
    return true;
}

ValidationReport validate(const Multipole& g) {
    ValidationReport r;
    r.is_cubic = g.is_cubic_graph();

    int n = g.vertex_count();
    if (n == 0) {
        r.is_connected = true;
        r.is_bridgeless = true;
        return r;
    }

    // Bridge detection via DFS lowpoints; semiedges play no part.
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    int roots = 0;
    bool bridge = false;
    std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
        disc[v] = low[v] = timer++;
        for (auto [w, eid] : g.adjacency()[v]) {
            if (eid == parent_edge) continue;
            if (disc[w] < 0) {
                dfs(w, eid);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) bridge = true;
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) {
            roots++;
            dfs(v, -1);
        }
    r.is_connected = (roots == 1);
    r.is_bridgeless = !bridge;
    return r;
}

// ---- graph6 ----

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::invalid_argument(what + " (byte " + std::to_string(offset) + ")"),
      byte_offset(offset) {}

Multipole parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();

    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) pos = header.size();
    if (pos >= s.size()) throw Graph6Error("graph6: empty input", pos);

    auto byte = [&](std::size_t i) -> int {
        unsigned char c = (unsigned char)s[i];
        if (c < 63 || c > 126)
            throw Graph6Error("graph6: non-printable byte", i);
        return c - 63;
    };

    long long n;
    if ((unsigned char)s[pos] == 126) {
        // 126 introduces the long forms; 126 126 is the 36-bit one.
        bool big = pos + 1 < s.size() && (unsigned char)s[pos + 1] == 126;
        std::size_t start = pos + (big ? 2 : 1);
        int groups = big ? 6 : 3;
        if (start + groups > s.size())
            throw Graph6Error("graph6: truncated length header", s.size());
        n = 0;
        for (int i = 0; i < groups; ++i) n = (n << 6) | byte(start + i);
        pos = start + groups;
    } else {
        n = byte(pos);
        pos++;
    }
    if (n > 100000)
        throw Graph6Error("graph6: vertex count implausibly large", 0);

    long long bits = n * (n - 1) / 2;
    std::size_t need = (std::size_t)((bits + 5) / 6);
    if (s.size() - pos < need)
        throw Graph6Error("graph6: adjacency data truncated", s.size());
    if (s.size() - pos > need)
        throw Graph6Error("graph6: trailing garbage after adjacency data",
                          pos + need);

    std::vector<Edge> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int b = byte(pos + (std::size_t)(bit / 6));
            if ((b >> (5 - bit % 6)) & 1) edges.push_back({u, v});
        }
    // padding bits must be zero
    for (long long p = bits; p < (long long)need * 6; ++p) {
        int b = byte(pos + (std::size_t)(p / 6));
        if ((b >> (5 - p % 6)) & 1)
            throw Graph6Error("graph6: nonzero padding bit", pos + (std::size_t)(p / 6));
    }
    return Multipole::make((int)n, std::move(edges));
}

std::string emit_graph6(const Multipole& g) {
    if (!g.semiedges().empty())
        throw std::invalid_argument(
            "graph6 cannot encode semiedges; use the multipole JSON format");
    long long n = g.vertex_count();
    std::string out;
    if (n < 63) {
        out.push_back((char)(n + 63));
    } else if (n < (1 << 18)) {
        out.push_back((char)126);
        for (int i = 2; i >= 0; --i)
            out.push_back((char)(((n >> (6 * i)) & 63) + 63));
    } else {
        out.push_back((char)126);
        out.push_back((char)126);
        for (int i = 5; i >= 0; --i)
            out.push_back((char)(((n >> (6 * i)) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back((char)(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back((char)((acc << (6 - nbits)) + 63));
    return out;
}

// ---- JSON sidecar ----

std::string to_multipole_json(const Multipole& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    j["semiedges"] = nlohmann::ordered_json::array();
    for (const auto& s : g.semiedges()) {
        nlohmann::ordered_json entry = nlohmann::ordered_json::array();
        entry.push_back(s.owner);
        entry.push_back(s.label);
        j["semiedges"].push_back(entry);
    }
    return j.dump();
}

Multipole parse_multipole_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int n = j.at("vertices").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    std::vector<Semiedge> semis;
    if (j.contains("semiedges"))
        for (const auto& s : j.at("semiedges"))
            semis.push_back({s.at(0).get<int>(), s.at(1).get<std::string>()});
    return Multipole::make(n, std::move(edges), std::move(semis));
}

Multipole parse_graph_auto(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{')
        return parse_multipole_json(text);
    return parse_graph6(text);
}

std::string subject_hash(const Multipole& g) {
    // FNV-1a over the canonical serialization of the labeled structure.
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix((uint64_t)g.vertex_count());
    for (auto [u, v] : g.edges()) mix(((uint64_t)u << 32) | (uint64_t)v);
    for (const auto& s : g.semiedges()) {
        mix((uint64_t)s.owner);
        for (char c : s.label) mix((uint64_t)(unsigned char)c);
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string(buf);
}

// ---- editing ----

Multipole join_semiedges(const Multipole& m, const std::string& s1,
                         const std::string& s2) {
    if (s1 == s2)
        throw std::invalid_argument("join_semiedges: labels must differ");
    int i1 = -1, i2 = -1;
    for (int i = 0; i < (int)m.semiedges().size(); ++i) {
        if (m.semiedges()[i].label == s1) i1 = i;
        if (m.semiedges()[i].label == s2) i2 = i;
    }
    if (i1 < 0) throw std::invalid_argument("join_semiedges: unknown label '" + s1 + "'");
    if (i2 < 0) throw std::invalid_argument("join_semiedges: unknown label '" + s2 + "'");
    int u = m.semiedges()[i1].owner, v = m.semiedges()[i2].owner;
    if (u == v)
        throw std::invalid_argument("join_semiedges: would create a loop at vertex " +
                                    std::to_string(u));
    if (m.has_edge(u, v))
        throw std::invalid_argument("join_semiedges: would create a parallel edge");
    auto edges = m.edges();
    edges.push_back({std::min(u, v), std::max(u, v)});
    std::vector<Semiedge> semis;
    for (int i = 0; i < (int)m.semiedges().size(); ++i)
        if (i != i1 && i != i2) semis.push_back(m.semiedges()[i]);
    return Multipole::make(m.vertex_count(), std::move(edges), std::move(semis));
}

Multipole disjoint_union(const Multipole& a, const Multipole& b,
                         const std::string& suffix_a,
                         const std::string& suffix_b) {
    int na = a.vertex_count();
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.push_back({u + na, v + na});
    std::vector<Semiedge> semis;
    for (const auto& s : a.semiedges()) semis.push_back({s.owner, s.label + suffix_a});
    for (const auto& s : b.semiedges())
        semis.push_back({s.owner + na, s.label + suffix_b});
    return Multipole::make(na + b.vertex_count(), std::move(edges), std::move(semis));
}

} // namespace snark
