#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ttile/grid.hpp"

// Independent validation of a Tiling against its Region. The checks are
// set-theoretic over materialized cells and do not depend on how the tiling
// was built, so this module serves as an oracle for the constructions and
// the solver.

namespace ttile {

struct VerificationReport {
    bool valid = false;
    std::size_t cells_total = 0;
    std::size_t cells_covered = 0;
    std::vector<Cell> overlaps;  // cells claimed by more than one piece
    std::vector<Cell> gaps;      // region cells claimed by no piece
    // (piece index, reason); tetrominoes are indexed first, then monominoes.
    std::vector<std::pair<std::size_t, std::string>> bad_pieces;
    std::size_t t_count = 0;
    std::size_t mono_count = 0;
};

// True iff the cells form a T: three collinear edge-adjacent cells plus one
// cell edge-adjacent to the middle of the bar. Anything else (wrong count,
// duplicates, I/O/S/Z/L shapes) is false.
bool is_t_shape(std::span<const Cell> cells);

// Pure function; all failures are report entries, never exceptions.
VerificationReport verify(const Tiling& t);

}  // namespace ttile
