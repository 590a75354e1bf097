#include "ttile/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ttile {

const char* to_string(Orientation o) {
    switch (o) {
        case Orientation::StemUp: return "stem-up";
        case Orientation::StemDown: return "stem-down";
        case Orientation::StemLeft: return "stem-left";
        case Orientation::StemRight: return "stem-right";
    }
    return "?";
}

TPlacement TPlacement::from_cells(std::array<Cell, 4> cs) {
    std::sort(cs.begin(), cs.end());
    return TPlacement{cs};
}

TPlacement t_cells(Cell bar_start, Orientation o) {
    const int r = bar_start.row;
    const int c = bar_start.col;
    switch (o) {
        case Orientation::StemUp:
            return TPlacement::from_cells({Cell{r, c}, Cell{r, c + 1}, Cell{r, c + 2}, Cell{r + 1, c + 1}});
        case Orientation::StemDown:
            return TPlacement::from_cells({Cell{r, c}, Cell{r, c + 1}, Cell{r, c + 2}, Cell{r - 1, c + 1}});
        case Orientation::StemLeft:
            return TPlacement::from_cells({Cell{r, c}, Cell{r + 1, c}, Cell{r + 2, c}, Cell{r + 1, c - 1}});
        case Orientation::StemRight:
            return TPlacement::from_cells({Cell{r, c}, Cell{r + 1, c}, Cell{r + 2, c}, Cell{r + 1, c + 1}});
    }
    throw std::invalid_argument("t_cells: bad orientation");
}

std::optional<std::pair<Cell, Orientation>> recognize_t(const TPlacement& p) {
    const auto& cs = p.cells;  // sorted
    for (int skip = 0; skip < 4; ++skip) {
        std::array<Cell, 3> bar{};
        int bi = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) bar[bi++] = cs[i];
        const Cell stem = cs[skip];
        // Horizontal bar: same row, consecutive cols.
        if (bar[0].row == bar[1].row && bar[1].row == bar[2].row &&
            bar[1].col == bar[0].col + 1 && bar[2].col == bar[1].col + 1) {
            const Cell mid = bar[1];
            if (stem.col == mid.col && stem.row == mid.row + 1)
                return std::pair{bar[0], Orientation::StemUp};
            if (stem.col == mid.col && stem.row == mid.row - 1)
                return std::pair{bar[0], Orientation::StemDown};
        }
        // Vertical bar: same col, consecutive rows.
        if (bar[0].col == bar[1].col && bar[1].col == bar[2].col &&
            bar[1].row == bar[0].row + 1 && bar[2].row == bar[1].row + 1) {
            const Cell mid = bar[1];
            if (stem.row == mid.row && stem.col == mid.col - 1)
                return std::pair{bar[0], Orientation::StemLeft};
            if (stem.row == mid.row && stem.col == mid.col + 1)
                return std::pair{bar[0], Orientation::StemRight};
        }
    }
    return std::nullopt;
}

namespace {

std::vector<Cell> square_cells(int n) {
    std::vector<Cell> cs;
    cs.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) cs.push_back(Cell{r, c});
    return cs;
}

}  // namespace

std::array<Cell, 4> an_removed_cells(int n) {
    return {Cell{0, 0}, Cell{0, 1}, Cell{0, n - 1}, Cell{1, 0}};
}

Region Region::square(int n) {
    if (n < 1) throw std::invalid_argument("Region::square: n must be >= 1");
    Region r;
    r.kind = RegionKind::Square;
    r.n = n;
    r.cells = square_cells(n);
    return r;
}

Region Region::an(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("Region::an: n must be odd and >= 3");
    Region r;
    r.kind = RegionKind::AN;
    r.n = n;
    const auto removed = an_removed_cells(n);
    for (const Cell& c : square_cells(n)) {
        if (std::find(removed.begin(), removed.end(), c) == removed.end())
            r.cells.push_back(c);
    }
    return r;
}

Region Region::l_strip(int outer, int inner) {
    if (inner < 1 || outer != inner + 2)
        throw std::invalid_argument("Region::l_strip: requires outer == inner + 2, inner >= 1");
    Region r;
    r.kind = RegionKind::LStrip;
    r.outer = outer;
    r.inner = inner;
    for (const Cell& c : square_cells(outer)) {
        const bool in_block =
            c.row >= 2 && c.row < 2 + inner && c.col >= 0 && c.col < inner;
        if (!in_block) r.cells.push_back(c);
    }
    return r;
}

Region Region::explicit_cells(std::vector<Cell> cs) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    for (const Cell& c : cs)
        if (c.row < 0 || c.col < 0)
            throw std::invalid_argument("Region: cells must have nonnegative coordinates");
    Region r;
    r.kind = RegionKind::Explicit;
    r.cells = std::move(cs);
    return r;
}

bool Region::contains(Cell c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

Cell Region::min_corner() const {
    if (cells.empty()) return Cell{0, 0};
    int mr = cells.front().row;  // cells sorted by (row, col)
    int mc = cells.front().col;
    for (const Cell& c : cells) mc = std::min(mc, c.col);
    return Cell{mr, mc};
}

Cell Region::max_corner() const {
    if (cells.empty()) return Cell{0, 0};
    int mr = cells.back().row;
    int mc = cells.back().col;
    for (const Cell& c : cells) mc = std::max(mc, c.col);
    return Cell{mr, mc};
}

void Tiling::canonicalize() {
    std::sort(tetrominoes.begin(), tetrominoes.end());
    std::sort(monominoes.begin(), monominoes.end());
}

namespace {

template <typename F>
Tiling transform_tiling(const Tiling& t, F&& map_cell) {
    Tiling out;
    std::vector<Cell> cells;
    cells.reserve(t.region.cells.size());
    for (const Cell& c : t.region.cells) cells.push_back(map_cell(c));
    std::sort(cells.begin(), cells.end());
    if (cells == t.region.cells) {
        out.region = t.region;  // cell set fixed by the transform; keep kind
    } else {
        out.region = Region::explicit_cells(std::move(cells));
    }
    out.tetrominoes.reserve(t.tetrominoes.size());
    for (const TPlacement& p : t.tetrominoes) {
        std::array<Cell, 4> cs = p.cells;
        for (Cell& c : cs) c = map_cell(c);
        out.tetrominoes.push_back(TPlacement::from_cells(cs));
    }
    out.monominoes.reserve(t.monominoes.size());
    for (const Cell& c : t.monominoes) out.monominoes.push_back(map_cell(c));
    out.canonicalize();
    return out;
}

}  // namespace

Tiling reflect_tiling(const Tiling& t, Axis axis) {
    const Cell lo = t.region.min_corner();
    const Cell hi = t.region.max_corner();
    switch (axis) {
        case Axis::Horizontal:
            return transform_tiling(t, [&](Cell c) { return Cell{lo.row + hi.row - c.row, c.col}; });
        case Axis::Vertical:
            return transform_tiling(t, [&](Cell c) { return Cell{c.row, lo.col + hi.col - c.col}; });
        case Axis::MainDiagonal:
            return transform_tiling(t, [&](Cell c) {
                return Cell{lo.row + (c.col - lo.col), lo.col + (c.row - lo.row)};
            });
    }
    throw std::invalid_argument("reflect_tiling: bad axis");
}

Tiling translate_tiling(const Tiling& t, int dr, int dc) {
    const Cell lo = t.region.min_corner();
    if (lo.row + dr < 0 || lo.col + dc < 0)
        throw std::invalid_argument("translate_tiling: translation moves cells to negative coordinates");
    return transform_tiling(t, [&](Cell c) { return Cell{c.row + dr, c.col + dc}; });
}

}  // namespace ttile
