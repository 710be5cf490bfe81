#include "snark/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace snark {

void validate_selection(const Multipole& host, const CycleSelection& d) {
    std::set<int> used;
    for (const auto& c : d.cycles) {
        if (c.size() < 3)
            throw std::invalid_argument("cycle selection: cycle shorter than 3");
        for (std::size_t i = 0; i < c.size(); ++i) {
            int v = c[i], w = c[(i + 1) % c.size()];
            if (v < 0 || v >= host.vertex_count())
                throw std::invalid_argument("cycle selection: vertex out of range");
            if (!host.has_edge(v, w))
                throw std::invalid_argument(
                    "cycle selection: consecutive vertices not adjacent in host");
            if (!used.insert(v).second)
                throw std::invalid_argument(
                    "cycle selection: vertex used twice (cycles must be disjoint)");
        }
    }
}

Multipole petersen() {
    // Outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
    std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}};
    return Multipole::make(10, std::move(e));
}

Multipole complete_k4() {
    return Multipole::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Multipole complete_bipartite_k33() {
    std::vector<Edge> e;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) e.push_back({u, v});
    return Multipole::make(6, std::move(e));
}

Multipole prism() {
    return Multipole::make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                               {0, 3}, {1, 4}, {2, 5}});
}

Multipole cube_q3() {
    std::vector<Edge> e;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (int v = u ^ (1 << b); v > u) e.push_back({u, v});
    return Multipole::make(8, std::move(e));
}

Multipole moebius_ladder(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("moebius ladder needs an even order >= 4");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    for (int i = 0; i < n / 2; ++i) e.push_back({i, i + n / 2});
    return Multipole::make(n, std::move(e));
}

Multipole flower_snark(int k) {
    if (k < 5 || k % 2 == 0)
        throw std::invalid_argument("flower snark needs an odd k >= 5");
    // o_i = i, c_i = k+i, u_i = 2k+i, w_i = 3k+i
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        e.push_back({std::min(i, j), std::max(i, j)}); // outer cycle
        e.push_back({k + i, i});                       // center to outer
        e.push_back({k + i, 2 * k + i});               // center to petals
        e.push_back({k + i, 3 * k + i});
        if (i + 1 < k) {
            e.push_back({2 * k + i, 2 * k + i + 1});
            e.push_back({3 * k + i, 3 * k + i + 1});
        }
    }
    // twist closing the two petal paths into one long cycle
    e.push_back({2 * k, 3 * k + k - 1});
    e.push_back({3 * k, 2 * k + k - 1});
    for (auto& p : e)
        if (p.first > p.second) std::swap(p.first, p.second);
    return Multipole::make(4 * k, std::move(e));
}

Multipole tietze() {
    // Petersen with one vertex expanded into a triangle.
    auto p = petersen();
    std::vector<Edge> e;
    for (auto [u, v] : p.edges())
        if (u != 0 && v != 0) e.push_back({u - 1, v - 1});
    // old neighbors of vertex 0 were 1, 4, 5 -> new ids 0, 3, 4
    e.push_back({0, 9});
    e.push_back({3, 10});
    e.push_back({4, 11});
    e.push_back({9, 10});
    e.push_back({10, 11});
    e.push_back({9, 11});
    return Multipole::make(12, std::move(e));
}

Multipole build_b() {
    // Remove the adjacent vertices 0 (outer) and 5 (inner) from Petersen.
    auto p = petersen();
    const int x = 0, y = 5;
    std::vector<int> keep;
    for (int v = 0; v < p.vertex_count(); ++v)
        if (v != x && v != y) keep.push_back(v);
    std::vector<int> relabel(p.vertex_count(), -1);
    for (int i = 0; i < (int)keep.size(); ++i) relabel[keep[i]] = i;

    std::vector<Edge> e;
    for (auto [u, v] : p.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0)
            e.push_back({relabel[u], relabel[v]});
    std::vector<Semiedge> s;
    int ai = 1, bi = 1;
    for (auto [w, eid] : p.adjacency()[x])
        if (w != y) s.push_back({relabel[w], "a" + std::to_string(ai++)});
    for (auto [w, eid] : p.adjacency()[y])
        if (w != x) s.push_back({relabel[w], "b" + std::to_string(bi++)});
    return Multipole::make(8, std::move(e), std::move(s));
}

Multipole build_h1() {
    auto two_b = disjoint_union(build_b(), build_b(), "", "'");
    auto with_hub = disjoint_union(
        two_b, Multipole::make(1, {}, {{0, "c1"}, {0, "c2"}, {0, "c3"}}));
    auto m = join_semiedges(with_hub, "b1", "b1'"); // e1
    m = join_semiedges(m, "c1", "b2");              // e2
    m = join_semiedges(m, "c2", "b2'");             // e2'
    return m;
}

Multipole build_h2() {
    auto two_b = disjoint_union(build_b(), build_b(), "", "'");
    // hub: v1 = +0, v2 = +1, u = +2
    auto hub = Multipole::make(
        3, {{0, 2}, {1, 2}},
        {{0, "x1"}, {0, "x2"}, {1, "y1"}, {1, "y2"}, {2, "c"}});
    auto m = disjoint_union(two_b, hub);
    m = join_semiedges(m, "x1", "a1");  // e1
    m = join_semiedges(m, "x2", "a1'"); // e1'
    m = join_semiedges(m, "y1", "a2");  // e2
    m = join_semiedges(m, "y2", "a2'"); // e2'
    return m;
}

namespace {

// Internal edges of one B block shifted to the given base id.
void append_block_edges(std::vector<Edge>& e, int base) {
    static const std::vector<Edge> block = [] {
        return build_b().edges();
    }();
    for (auto [u, v] : block) e.push_back({base + u, base + v});
}

std::vector<Edge> host_edges_without_selection(const Multipole& g,
                                               const CycleSelection& d) {
    std::set<Edge> removed;
    for (const auto& c : d.cycles)
        for (std::size_t i = 0; i < c.size(); ++i) {
            int u = c[i], v = c[(i + 1) % c.size()];
            removed.insert({std::min(u, v), std::max(u, v)});
        }
    std::vector<Edge> e;
    for (auto ed : g.edges())
        if (!removed.count(ed)) e.push_back(ed);
    return e;
}

int selection_prefix_length(const CycleSelection& d, int cycle_index) {
    int total = 0;
    for (int c = 0; c < cycle_index; ++c) total += (int)d.cycles[c].size();
    return total;
}

} // namespace

int semiblowup_block_base(const Multipole& host, const CycleSelection& d,
                          int cycle_index, int position) {
    return host.vertex_count() +
           kBlockSize * (selection_prefix_length(d, cycle_index) + position);
}

int blowup_block_base(const Multipole& host, const CycleSelection& d,
                      int cycle_index, int position) {
    return host.vertex_count() +
           (kBlockSize + 2) * (selection_prefix_length(d, cycle_index) + position);
}

Multipole semiblowup(const Multipole& g, const CycleSelection& d) {
    validate_selection(g, d);
    auto e = host_edges_without_selection(g, d);
    int total_len = selection_prefix_length(d, (int)d.cycles.size());
    for (int ci = 0; ci < (int)d.cycles.size(); ++ci) {
        const auto& cyc = d.cycles[ci];
        int k = (int)cyc.size();
        for (int i = 0; i < k; ++i) {
            int base = semiblowup_block_base(g, d, ci, i);
            int next = semiblowup_block_base(g, d, ci, (i + 1) % k);
            append_block_edges(e, base);
            e.push_back({cyc[i], base + kBlockB1});          // v_i -- b1^i
            e.push_back({base + kBlockA2, next + kBlockB2}); // a2^i -- b2^{i+1}
            e.push_back({base + kBlockA1, cyc[(i + 1) % k]}); // a1^i -- v_{i+1}
        }
    }
    for (auto& p : e)
        if (p.first > p.second) std::swap(p.first, p.second);
    return Multipole::make(g.vertex_count() + kBlockSize * total_len, std::move(e));
}

Multipole blowup(const Multipole& g, const CycleSelection& d) {
    validate_selection(g, d);
    auto e = host_edges_without_selection(g, d);
    int total_len = selection_prefix_length(d, (int)d.cycles.size());
    for (int ci = 0; ci < (int)d.cycles.size(); ++ci) {
        const auto& cyc = d.cycles[ci];
        int k = (int)cyc.size();
        for (int i = 0; i < k; ++i) {
            int base = blowup_block_base(g, d, ci, i);
            int next = blowup_block_base(g, d, ci, (i + 1) % k);
            int u = base + kBlockSize, w = base + kBlockSize + 1;
            append_block_edges(e, base);
            e.push_back({cyc[i], u});
            e.push_back({cyc[i], w});
            e.push_back({u, base + kBlockB1});                  // u_i -- b1^i
            e.push_back({w, base + kBlockB2});                  // w_i -- b2^i
            e.push_back({base + kBlockA1, next + kBlockSize});  // a1^i -- u_{i+1}
            e.push_back({base + kBlockA2, next + kBlockSize + 1}); // a2^i -- w_{i+1}
        }
    }
    for (auto& p : e)
        if (p.first > p.second) std::swap(p.first, p.second);
    return Multipole::make(g.vertex_count() + (kBlockSize + 2) * total_len,
                           std::move(e));
}

Multipole family_18k_host(int k) {
    if (k < 3) throw std::invalid_argument("family_18k needs k >= 3");
    return moebius_ladder(2 * k);
}

CycleSelection family_18k_selection(int k) {
    std::vector<int> ham(2 * k);
    for (int i = 0; i < 2 * k; ++i) ham[i] = i;
    return CycleSelection{{ham}};
}

Multipole family_18k(int k) {
    return semiblowup(family_18k_host(k), family_18k_selection(k));
}

Multipole family_c5_host(int k) {
    if (k < 1) throw std::invalid_argument("family_c5_blocks needs k >= 1");
    int blocks = 2 * k;
    std::vector<Edge> e;
    for (int b = 0; b < blocks; ++b)
        for (int i = 0; i < 5; ++i) {
            int u = 5 * b + i, v = 5 * b + (i + 1) % 5;
            e.push_back({std::min(u, v), std::max(u, v)});
        }
    // Ring of pentagon blocks. Boundary j sits between blocks j and j+1 and
    // carries 2 edges for even j, 3 for odd j, so each block spends exactly
    // its 5 spare slots: local vertices 0..b_{j-1}-1 face left, the rest right.
    auto boundary_size = [](int j) { return j % 2 == 0 ? 2 : 3; };
    for (int j = 0; j < blocks; ++j) {
        int right = boundary_size(j);
        int left_of_j = boundary_size((j - 1 + blocks) % blocks);
        for (int t = 0; t < right; ++t) {
            int u = 5 * j + left_of_j + t;
            int v = 5 * ((j + 1) % blocks) + t;
            e.push_back({std::min(u, v), std::max(u, v)});
        }
    }
    return Multipole::make(10 * k, std::move(e));
}

CycleSelection family_c5_selection(int k) {
    CycleSelection d;
    for (int b = 0; b < 2 * k; ++b)
        d.cycles.push_back({5 * b, 5 * b + 1, 5 * b + 2, 5 * b + 3, 5 * b + 4});
    return d;
}

Multipole family_c5_blocks(int k) {
    return semiblowup(family_c5_host(k), family_c5_selection(k));
}

Multipole oddness4_host() {
    // 5-cycle 0..4, chord 1-4, claw center 5 on the remaining three.
    return Multipole::make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                               {1, 4}, {0, 5}, {2, 5}, {3, 5}});
}

Multipole oddness4_46() {
    return semiblowup(oddness4_host(), CycleSelection{{{0, 1, 2, 3, 4}}});
}

std::vector<std::string> registry_names() {
    return {"petersen",        "k4",
            "k33",             "prism",
            "cube",            "tietze",
            "flower-j5",       "flower-j7",
            "B",               "H1",
            "H2",              "blowup-k4-c3",
            "blowup-prism-c4", "semiblowup-k4-c3",
            "semiblowup-oddness4-46", "family18-k3",
            "family90-k1"};
}

Multipole build_named(const std::string& name) {
    if (name == "petersen") return petersen();
    if (name == "k4") return complete_k4();
    if (name == "k33") return complete_bipartite_k33();
    if (name == "prism") return prism();
    if (name == "cube") return cube_q3();
    if (name == "tietze") return tietze();
    if (name == "B") return build_b();
    if (name == "H1") return build_h1();
    if (name == "H2") return build_h2();
    if (name == "blowup-k4-c3")
        return blowup(complete_k4(), CycleSelection{{{0, 1, 2}}});
    if (name == "semiblowup-k4-c3")
        return semiblowup(complete_k4(), CycleSelection{{{0, 1, 2}}});
    if (name == "blowup-prism-c4")
        return blowup(prism(), CycleSelection{{{0, 1, 4, 3}}});
    if (name == "semiblowup-oddness4-46") return oddness4_46();
    auto suffix_int = [&](const std::string& prefix) -> int {
        if (name.rfind(prefix, 0) != 0) return -1;
        try {
            return std::stoi(name.substr(prefix.size()));
        } catch (...) {
            return -1;
        }
    };
    if (int k = suffix_int("family18-k"); k > 0) return family_18k(k);
    if (int k = suffix_int("family90-k"); k > 0) return family_c5_blocks(k);
    if (int k = suffix_int("flower-j"); k > 0) return flower_snark(k);
    if (int n = suffix_int("moebius-"); n > 0) return moebius_ladder(n);
    throw std::invalid_argument("unknown graph name '" + name + "'");
}

Multipole induced_multipole(const Multipole& g, const std::vector<int>& vertices) {
    std::vector<int> relabel(g.vertex_count(), -1);
    for (int i = 0; i < (int)vertices.size(); ++i) relabel[vertices[i]] = i;
    std::vector<Edge> e;
    std::vector<Semiedge> s;
    int cut = 0;
    for (auto [u, v] : g.edges()) {
        bool iu = relabel[u] >= 0, iv = relabel[v] >= 0;
        if (iu && iv)
            e.push_back({relabel[u], relabel[v]});
        else if (iu)
            s.push_back({relabel[u], "x" + std::to_string(cut++)});
        else if (iv)
            s.push_back({relabel[v], "x" + std::to_string(cut++)});
    }
    for (const auto& se : g.semiedges())
        if (relabel[se.owner] >= 0) s.push_back({relabel[se.owner], se.label});
    return Multipole::make((int)vertices.size(), std::move(e), std::move(s));
}

} // namespace snark
