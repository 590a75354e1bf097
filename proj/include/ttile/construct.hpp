#pragma once

#include <vector>

#include "ttile/grid.hpp"

// Constructive tilings: the pinwheel for n = 4m, the L-strip with frieze
// arms for n = 4m + 2, and the two-branch induction on the cropped square
// A_n for odd n, assembled by tile_any into a tiling of any square with the
// minimal monomino count.

namespace ttile {

enum class StepKind {
    Base4x4,       // pinwheel block; params: row offset, col offset
    BaseA3,        // A_3 base tiling
    BaseA5,        // A_5 base tiling
    ExtendL,       // L-strip corner monominoes for n = 4m + 2; params: m
    FriezeRepeat,  // j-th arm pair on both L-strip arms; params: m, j
    ExtendOnes,    // A_{4k+1} -> A_{4k+3}, normalized; params: k
    ExtendThrees,  // A_{4k+3} -> A_{4k+5}, normalized; params: k
};

const char* to_string(StepKind k);

struct TraceStep {
    StepKind kind;
    std::vector<int> params;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// Audit trail of a construction; replaying the steps reproduces the emitted
// tiling exactly (byte-for-byte after canonical sorting).
struct ConstructionTrace {
    RegionKind target_kind = RegionKind::Square;
    int n = 0;
    std::vector<TraceStep> steps;

    friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

// --- square constructions ---

// Square(4m) tiled by 4m^2 T-tetrominoes (an m x m array of pinwheel
// blocks); no monominoes.
Tiling tile_square_4m(int m);

// Periodic width-2 strip segment of interlocking T's with jagged ends; two
// T's per 4 cells of length. length must be a nonnegative multiple of 4.
// The pattern starts at (0, 0): bar on row 1 at cols 4j..4j+2 with stem
// below, then bar on row 0 at cols 4j+2..4j+4 with stem above.
std::vector<TPlacement> frieze_strip(int length);

// Square(4m+2) with exactly 4m^2 + 4m T's and 4 monominoes; for m >= 1 the
// inner 4m-square sits at rows 2..4m+1, cols 0..4m-1 and the surrounding
// L-strip is tiled with frieze arms, 3 monominoes in the lower-left corner
// and 1 in the upper-right.
Tiling tile_square_4m2(int m);

// --- odd construction (cropped square induction) ---

// AN(n) tiled with m^2 + m - 1 T's and exactly 1 monomino (n = 2m + 1),
// returned in canonical orientation (removed cells at (0,0), (0,1), (1,0),
// (0,n-1)).
Tiling tile_A(int n);

// Extends a valid tiling of AN(4k+1) to a tiling of the mirror image of
// AN(4k+3): the input is embedded at offset (+2, +2) and the L-shaped
// difference is filled with 4k+2 T's. The result's region is the main-
// diagonal reflection of AN(4k+3). No monomino is added.
Tiling extend_A_ones(const Tiling& t);

// Extends a valid tiling of AN(4k+3) to a tiling of the mirror image of
// AN(4k+5): embedding offset (+2, 0), 4k+4 T's added, region reflected
// about the anti-diagonal. No monomino is added.
Tiling extend_A_threes(const Tiling& t);

// Square(n) for odd n >= 3: tile_A(n) plus monominoes on the four removed
// cells; (n^2-5)/4 T's and exactly 5 monominoes.
Tiling tile_square_odd(int n);

// Any n >= 1, dispatching on n mod 4; monomino count equals
// min_monomino_count(n) and tetromino count equals max_t_count(n).
Tiling tile_any(int n);

// --- traces ---

ConstructionTrace trace_for(int n);
Tiling replay(const ConstructionTrace& trace);

// Fixed placement tables transcribed from the reference layouts; exposed so
// tests can check them in isolation.
namespace gadgets {

// The four T's of one pinwheel block anchored at (r, c).
std::vector<TPlacement> pinwheel(int r, int c);

Tiling a3_base();
Tiling a5_base();

// The L-strip tiling (pieces only) for outer side 4m+2, m >= 1.
Tiling l_strip_tiling(int m);

// T's filling Square(4k+3) minus the embedded AN(4k+1) (at +2,+2) minus the
// removed cells of the main-diagonal-reflected AN(4k+3).
std::vector<TPlacement> ones_extension(int k);

// T's filling Square(4k+5) minus the embedded AN(4k+3) (at +2,0) minus the
// removed cells of the anti-diagonal-reflected AN(4k+5).
std::vector<TPlacement> threes_extension(int k);

}  // namespace gadgets

}  // namespace ttile
