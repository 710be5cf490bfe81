// Named graphs and the two snark constructions.
//
// The 4-pole B is the Petersen graph minus two adjacent vertices; its a-pair
// of semiedges hangs off the neighbors of one removed vertex, the b-pair off
// the other. H1 and H2 are the two uncolorable 5-poles built from two copies
// of B. semiblowup/blowup replace the edges of selected cycles by chains of
// B blocks (Constructions 1 and 2).
//
// Vertex id layout (kept stable so certificates can be cross-referenced):
//   hosts keep ids 0..n-1; B blocks are appended cycle by cycle, position by
//   position, 8 ids per block (semiblowup) or 8+2 for the block plus the two
//   extra vertices u_i, w_i (blowup). Inside a block: a1 owner = +0,
//   a2 owner = +3, b1 owner = +5, b2 owner = +6.

#pragma once

#include <string>
#include <vector>

#include "snark/multipole.hpp"

namespace snark {

// Offsets of the semiedge owners inside one B block.
inline constexpr int kBlockA1 = 0;
inline constexpr int kBlockA2 = 3;
inline constexpr int kBlockB1 = 5;
inline constexpr int kBlockB2 = 6;
inline constexpr int kBlockSize = 8;

// A 2-regular subgraph of a host, given as vertex-disjoint cycles.
struct CycleSelection {
    std::vector<std::vector<int>> cycles;
};

// Throws std::invalid_argument when a listed sequence is not a cycle of the
// host, repeats a vertex, or overlaps another cycle.
void validate_selection(const Multipole& host, const CycleSelection& d);

Multipole petersen();
Multipole complete_k4();
Multipole complete_bipartite_k33();
Multipole prism();
Multipole cube_q3();
Multipole moebius_ladder(int n); // n even, >= 4
Multipole flower_snark(int k);   // odd k >= 5
Multipole tietze();

// Petersen minus two adjacent vertices; semiedges a1,a2,b1,b2.
Multipole build_b();
Multipole build_h1(); // 17 vertices, 5 semiedges
Multipole build_h2(); // 19 vertices, 5 semiedges

Multipole semiblowup(const Multipole& g, const CycleSelection& d);
Multipole blowup(const Multipole& g, const CycleSelection& d);

// Base vertex id of block (cycle_index, position) in a construction output.
int semiblowup_block_base(const Multipole& host, const CycleSelection& d,
                          int cycle_index, int position);
int blowup_block_base(const Multipole& host, const CycleSelection& d,
                      int cycle_index, int position);

// Deterministic hosts for the two infinite families.
// 18k-vertex family: semiblowup of the full outer cycle of a Moebius ladder
// on 2k vertices (hamiltonian cubic host).
Multipole family_18k(int k); // k >= 3
CycleSelection family_18k_selection(int k);
Multipole family_18k_host(int k);

// 90k-vertex family: 2k pentagon blocks closed into a ring by alternating
// 2-edge and 3-edge boundary matchings, then the semiblowup of all pentagons.
Multipole family_c5_blocks(int k); // k >= 1
Multipole family_c5_host(int k);
CycleSelection family_c5_selection(int k);

// The 46-vertex oddness-4 example: semiblowup of the 5-cycle in the
// 6-vertex host made of a 5-cycle, one chord and a claw center.
Multipole oddness4_host();
Multipole oddness4_46();

// Named-instance registry for the CLI. Fixed keys plus the parameterized
// forms "family18-k<k>", "family90-k<k>", "flower-j<k>", "moebius-<n>".
std::vector<std::string> registry_names();
Multipole build_named(const std::string& name);

// Induced sub-multipole on a vertex subset: edges leaving the subset become
// semiedges (labels x0, x1, ... in edge order); semiedges owned inside stay.
Multipole induced_multipole(const Multipole& g, const std::vector<int>& vertices);

} // namespace snark
