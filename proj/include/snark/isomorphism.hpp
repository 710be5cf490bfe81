// Backtracking isomorphism for small multipoles and a canonical form for
// plain graphs, used by the isomorph-free generator. Semiedge labels are
// ignored by isomorphism; only their count per vertex matters.

#pragma once

#include <cstdint>
#include <vector>

#include "snark/multipole.hpp"

namespace snark {

bool isomorphic(const Multipole& a, const Multipole& b);

// Canonical encoding of a plain graph on at most 64 vertices: equal results
// iff the graphs are isomorphic. Refinement plus individualization.
std::vector<std::uint64_t> canonical_form(const Multipole& g);

} // namespace snark
