// Multipole data model: vertices, internal edges and dangling semiedges.
// A cubic graph is a multipole with zero semiedges and all degrees equal to 3.
// Includes graph6 I/O for plain graphs and a JSON sidecar format for
// multipoles (graph6 cannot carry semiedges).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snark {

using Edge = std::pair<int, int>; // normalized: first < second

struct Semiedge {
    int owner;
    std::string label;
};

// Immutable once built. Edges are stored sorted lexicographically, so the
// index of an edge in edges() is its stable id; semiedge ids continue after
// edge ids in the order given at construction.
class Multipole {
  public:
    // Throws std::invalid_argument on loops, parallel edges, out-of-range
    // endpoints, duplicate semiedge labels or any degree above 3.
    static Multipole make(int vertex_count, std::vector<Edge> edges,
                          std::vector<Semiedge> semiedges = {});

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Semiedge>& semiedges() const { return semiedges_; }

    int degree(int v) const { return degree_[v]; }
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    int edge_index(int u, int v) const; // -1 when absent

    // True iff there are no semiedges and every vertex has degree 3.
    bool is_cubic_graph() const;

    // adjacency()[v] lists (neighbor, edge id) pairs sorted by neighbor.
    const std::vector<std::vector<std::pair<int, int>>>& adjacency() const {
        return adj_;
    }
    // Semiedge ids owned by v (indices into semiedges()).
    const std::vector<std::vector<int>>& semiedges_at() const { return semi_at_; }

  private:
    Multipole() = default;
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Semiedge> semiedges_;
    std::vector<int> degree_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::vector<int>> semi_at_;
};

struct ValidationReport {
    bool is_cubic = false;
    bool is_connected = false;
    bool is_bridgeless = false;
};

// Semiedges do not count as edges for connectivity or bridge detection.
ValidationReport validate(const Multipole& g);

// ---- graph6 ----
// Byte-exact per the de facto format: 6 adjacency bits per byte, upper
// triangle in column-major order, every byte biased by 63. The optional
// ">>graph6<<" header and a single trailing newline are accepted on input.
struct Graph6Error : std::invalid_argument {
    Graph6Error(const std::string& what, std::size_t offset);
    std::size_t byte_offset;
};

Multipole parse_graph6(const std::string& text);
std::string emit_graph6(const Multipole& g); // throws if semiedges present

// ---- multipole JSON sidecar ----
// {"vertices": n, "edges": [[u,v],...], "semiedges": [[v,"label"],...]}
std::string to_multipole_json(const Multipole& g);
Multipole parse_multipole_json(const std::string& text);

// Reads either format: leading '{' selects JSON, anything else graph6.
Multipole parse_graph_auto(const std::string& text);

// Stable 64-bit digest of the labeled structure; certificate subjects.
std::string subject_hash(const Multipole& g);

// ---- structural editing (always returns a fresh multipole) ----

// Joins two semiedges into one internal edge between their owners.
// Throws on unknown labels, equal owners (loop) or existing edge (parallel).
Multipole join_semiedges(const Multipole& m, const std::string& s1,
                         const std::string& s2);

// Disjoint union; vertices of b are shifted, semiedge labels of both sides
// get the given suffixes so they stay unique.
Multipole disjoint_union(const Multipole& a, const Multipole& b,
                         const std::string& suffix_a = "",
                         const std::string& suffix_b = "");

} // namespace snark
