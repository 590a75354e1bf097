#pragma once

#include <cstdint>

#include "ttile/grid.hpp"

// Test-only reference enumerator, structurally independent of the dancing-
// links engine: plain cell-driven backtracking over an occupancy array with
// no placement matrix, no column objects and no pruning beyond disjointness.

namespace ttile::testing {

// Number of distinct ways to cover the region exactly with T-tetrominoes
// plus at most `monomino_budget` monominoes.
std::uint64_t naive_count_covers(const Region& region, int monomino_budget);

// True iff at least one cover exists.
bool naive_can_cover(const Region& region, int monomino_budget);

}  // namespace ttile::testing
