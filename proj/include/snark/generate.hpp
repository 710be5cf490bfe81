// Graph generators used by the property and equivalence test suites:
// deterministic random cubic graphs, and the exhaustive isomorph-free list
// of connected bridgeless cubic graphs of a given order.

#pragma once

#include <cstdint>
#include <vector>

#include "snark/multipole.hpp"

namespace snark {

// Pairing-model random cubic graph; loops/parallels rejected by retrying
// with evolved state. Deterministic across platforms for a fixed seed.
Multipole random_cubic(int n, std::uint64_t seed);

// First seed variant that is connected and bridgeless (optionally also
// 3-edge-colorable).
Multipole random_cubic_bridgeless(int n, std::uint64_t seed,
                                  bool require_colorable = false);

// Every connected bridgeless cubic graph on n vertices, one representative
// per isomorphism class, deterministically ordered. Exhaustive: each such
// graph has a 2-factor, so laying out each cycle type and adding every
// non-parallel perfect matching on the spare slots reaches them all.
std::vector<Multipole> all_bridgeless_cubic(int n, int threads = 1);

} // namespace snark
