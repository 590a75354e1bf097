#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

// Core value types for T-tetromino tilings.
//
// Coordinate convention: cells are addressed (row, col) with row 0 at the
// bottom edge of the board and col 0 at the left. All regions produced by
// the factories below are anchored at (0, 0).

namespace ttile {

struct Cell {
    int row = 0;
    int col = 0;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Which way the stem of the T points relative to its 3-cell bar.
enum class Orientation { StemUp, StemDown, StemLeft, StemRight };

inline constexpr std::array<Orientation, 4> kAllOrientations = {
    Orientation::StemUp,
    Orientation::StemDown,
    Orientation::StemLeft,
    Orientation::StemRight,
};

const char* to_string(Orientation o);

// One T-tetromino, stored as its four cells sorted ascending. The
// (bar_start, orientation) form is a derived view; see t_cells/recognize_t.
struct TPlacement {
    std::array<Cell, 4> cells{};

    // Accepts the cells in any order.
    static TPlacement from_cells(std::array<Cell, 4> cs);

    friend constexpr auto operator<=>(const TPlacement&, const TPlacement&) = default;
};

// The four cells of the T whose bar starts at bar_start:
//   StemUp/StemDown:    bar runs along the row toward +col, stem sits one row
//                       above/below the middle bar cell.
//   StemLeft/StemRight: bar runs along the column toward +row, stem sits one
//                       col left/right of the middle bar cell.
// Coordinates are not range-checked here; regions validate later.
TPlacement t_cells(Cell bar_start, Orientation o);

// Inverse of t_cells. Empty when the four cells do not form a T.
std::optional<std::pair<Cell, Orientation>> recognize_t(const TPlacement& p);

enum class RegionKind { Square, AN, LStrip, Explicit };

// A finite set of cells to be covered. Regions are materialized as explicit
// sorted cell vectors regardless of kind, so there is a single verification
// path. Two regions compare equal iff their cell sets are equal; kind is a
// descriptor kept for serialization.
struct Region {
    RegionKind kind = RegionKind::Explicit;
    int n = 0;      // Square(n), AN(n)
    int outer = 0;  // LStrip
    int inner = 0;  // LStrip
    std::vector<Cell> cells;  // sorted, unique

    static Region square(int n);

    // The n x n square (n odd, n >= 3) minus the four cells
    // (0,0), (0,1), (1,0), (0,n-1).
    static Region an(int n);

    // Square(outer) minus Square(inner) anchored at (2, 0); requires
    // outer == inner + 2. The inner block occupies rows 2..inner+1,
    // cols 0..inner-1.
    static Region l_strip(int outer, int inner);

    static Region explicit_cells(std::vector<Cell> cs);

    bool contains(Cell c) const;
    Cell min_corner() const;
    Cell max_corner() const;

    friend bool operator==(const Region& a, const Region& b) { return a.cells == b.cells; }
};

// The removed corner cells of AN(n), in sorted order.
std::array<Cell, 4> an_removed_cells(int n);

struct Tiling {
    Region region;
    std::vector<TPlacement> tetrominoes;
    std::vector<Cell> monominoes;

    // Sorts tetrominoes and monominoes into canonical order.
    void canonicalize();

    friend bool operator==(const Tiling& a, const Tiling& b) {
        return a.region == b.region && a.tetrominoes == b.tetrominoes &&
               a.monominoes == b.monominoes;
    }
};

enum class Axis { Horizontal, Vertical, MainDiagonal };

// Mirror image within the region's bounding box. Horizontal flips rows,
// Vertical flips columns, MainDiagonal transposes. T-shapes map to T-shapes
// and piece counts are preserved. The region's cells are reflected too; the
// kind is kept when the reflected cell set is unchanged and degrades to
// Explicit otherwise.
Tiling reflect_tiling(const Tiling& t, Axis axis);

// Shifts every cell by (dr, dc). Throws std::invalid_argument if any cell
// would land at a negative coordinate.
Tiling translate_tiling(const Tiling& t, int dr, int dc);

}  // namespace ttile
