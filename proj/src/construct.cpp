#include "ttile/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ttile/formulas.hpp"
#include "ttile/verify.hpp"

namespace ttile {

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::Base4x4: return "base-4x4";
        case StepKind::BaseA3: return "base-a3";
        case StepKind::BaseA5: return "base-a5";
        case StepKind::ExtendL: return "extend-l";
        case StepKind::FriezeRepeat: return "frieze-repeat";
        case StepKind::ExtendOnes: return "extend-ones";
        case StepKind::ExtendThrees: return "extend-threes";
    }
    return "?";
}

namespace {

TPlacement shift(const TPlacement& p, int dr, int dc) {
    std::array<Cell, 4> cs = p.cells;
    for (Cell& c : cs) {
        c.row += dr;
        c.col += dc;
    }
    return TPlacement{cs};  // order preserved by uniform shift
}

TPlacement transpose(const TPlacement& p) {
    std::array<Cell, 4> cs = p.cells;
    for (Cell& c : cs) std::swap(c.row, c.col);
    return TPlacement::from_cells(cs);
}

// Transpose about the main diagonal of an n x n board.
Tiling transpose_square(const Tiling& t) {
    return reflect_tiling(t, Axis::MainDiagonal);
}

// Reflection about the anti-diagonal: (r, c) -> (n-1-c, n-1-r).
Tiling anti_transpose_square(const Tiling& t) {
    return reflect_tiling(reflect_tiling(reflect_tiling(t, Axis::Horizontal), Axis::Vertical),
                          Axis::MainDiagonal);
}

// Rebuilds the tiling on the canonical AN(n) region; the transformed cell
// set must match it exactly.
Tiling onto_an_region(Tiling t, int n) {
    Region an = Region::an(n);
    if (!(t.region == an))
        throw std::logic_error("construction does not land on the canonical A_n region");
    t.region = std::move(an);
    return t;
}

void require_valid_an_input(const Tiling& t, int residue, const char* who) {
    const Cell hi = t.region.max_corner();
    const int n = hi.row + 1;
    if (n < 3 || n % 4 != residue || !(t.region == Region::an(n)))
        throw std::invalid_argument(std::string(who) + ": input region is not an A_n of the required size");
    if (!verify(t).valid)
        throw std::invalid_argument(std::string(who) + ": input tiling fails verification");
}

}  // namespace

namespace gadgets {

std::vector<TPlacement> pinwheel(int r, int c) {
    return {
        t_cells(Cell{r, c}, Orientation::StemUp),
        t_cells(Cell{r, c + 3}, Orientation::StemLeft),
        t_cells(Cell{r + 3, c + 1}, Orientation::StemDown),
        t_cells(Cell{r + 1, c}, Orientation::StemRight),
    };
}

Tiling a3_base() {
    Tiling t;
    t.region = Region::an(3);
    t.tetrominoes = {t_cells(Cell{2, 0}, Orientation::StemDown)};
    t.monominoes = {Cell{1, 2}};
    t.canonicalize();
    return t;
}

// The A_5 base: five T's around a single interior monomino at (2, 1).
Tiling a5_base() {
    Tiling t;
    t.region = Region::an(5);
    t.tetrominoes = {
        t_cells(Cell{2, 0}, Orientation::StemRight),  // bar col 0 rows 2-4
        t_cells(Cell{4, 1}, Orientation::StemDown),   // bar row 4 cols 1-3
        t_cells(Cell{0, 2}, Orientation::StemLeft),   // bar col 2 rows 0-2
        t_cells(Cell{0, 3}, Orientation::StemRight),  // bar col 3 rows 0-2
        t_cells(Cell{2, 4}, Orientation::StemLeft),   // bar col 4 rows 2-4
    };
    t.monominoes = {Cell{2, 1}};
    t.canonicalize();
    return t;
}

Tiling l_strip_tiling(int m) {
    if (m < 1) throw std::invalid_argument("l_strip_tiling: m must be >= 1");
    const int n = 4 * m + 2;
    Tiling t;
    t.region = Region::l_strip(n, n - 2);
    // Bottom arm: the frieze shifted one column right of the corner
    // monominoes. Right arm: the transposed frieze raised one row.
    for (const TPlacement& p : frieze_strip(4 * m)) t.tetrominoes.push_back(shift(p, 0, 1));
    for (const TPlacement& p : frieze_strip(4 * m)) t.tetrominoes.push_back(shift(transpose(p), 1, n - 2));
    t.monominoes = {Cell{0, 0}, Cell{0, 1}, Cell{1, 0}, Cell{n - 1, n - 1}};
    t.canonicalize();
    return t;
}

std::vector<TPlacement> ones_extension(int k) {
    if (k < 1) throw std::invalid_argument("ones_extension: k must be >= 1");
    const int n = 4 * k + 3;
    std::vector<TPlacement> ts;
    // Bottom-left corner pair reaching into the embedded copy's notch.
    ts.push_back(t_cells(Cell{1, 1}, Orientation::StemDown));
    ts.push_back(t_cells(Cell{2, 1}, Orientation::StemUp));
    // Left arm: alternating bars on cols 0 and 1, period 4.
    for (int j = 0; j < k; ++j) {
        ts.push_back(t_cells(Cell{4 * j + 2, 0}, Orientation::StemRight));
        ts.push_back(t_cells(Cell{4 * j + 4, 1}, Orientation::StemLeft));
    }
    // Bottom arm: interlocking pairs, then the corner piece on col n-1.
    for (int j = 0; j < k; ++j) ts.push_back(t_cells(Cell{0, 4 * j + 3}, Orientation::StemUp));
    for (int j = 0; j + 1 < k; ++j) ts.push_back(t_cells(Cell{1, 4 * j + 5}, Orientation::StemDown));
    ts.push_back(t_cells(Cell{0, n - 1}, Orientation::StemLeft));
    return ts;
}

std::vector<TPlacement> threes_extension(int k) {
    if (k < 0) throw std::invalid_argument("threes_extension: k must be >= 0");
    const int n = 4 * k + 5;
    std::vector<TPlacement> ts;
    // Bottom-left corner pair.
    ts.push_back(t_cells(Cell{0, 0}, Orientation::StemUp));
    ts.push_back(t_cells(Cell{1, 0}, Orientation::StemRight));
    // Bottom arm pairs.
    for (int j = 0; j < k; ++j) {
        ts.push_back(t_cells(Cell{1, 4 * j + 2}, Orientation::StemDown));
        ts.push_back(t_cells(Cell{0, 4 * j + 4}, Orientation::StemUp));
    }
    // Bottom-right corner pair.
    ts.push_back(t_cells(Cell{1, n - 3}, Orientation::StemDown));
    ts.push_back(t_cells(Cell{2, n - 3}, Orientation::StemUp));
    // Right arm pairs.
    for (int j = 0; j < k; ++j) {
        ts.push_back(t_cells(Cell{4 * j + 3, n - 1}, Orientation::StemLeft));
        ts.push_back(t_cells(Cell{4 * j + 5, n - 2}, Orientation::StemRight));
    }
    return ts;
}

}  // namespace gadgets

Tiling tile_square_4m(int m) {
    if (m < 1) throw std::invalid_argument("tile_square_4m: m must be >= 1");
    Tiling t;
    t.region = Region::square(4 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (const TPlacement& p : gadgets::pinwheel(4 * i, 4 * j)) t.tetrominoes.push_back(p);
    t.canonicalize();
    return t;
}

std::vector<TPlacement> frieze_strip(int length) {
    if (length < 0 || length % 4 != 0)
        throw std::invalid_argument("frieze_strip: length must be a nonnegative multiple of 4");
    std::vector<TPlacement> ts;
    ts.reserve(static_cast<std::size_t>(length) / 2);
    for (int j = 0; 4 * j < length; ++j) {
        ts.push_back(t_cells(Cell{1, 4 * j}, Orientation::StemDown));
        ts.push_back(t_cells(Cell{0, 4 * j + 2}, Orientation::StemUp));
    }
    return ts;
}

Tiling tile_square_4m2(int m) {
    if (m < 0) throw std::invalid_argument("tile_square_4m2: m must be >= 0");
    const int n = 4 * m + 2;
    Tiling t;
    t.region = Region::square(n);
    if (m == 0) {
        t.monominoes = {Cell{0, 0}, Cell{0, 1}, Cell{1, 0}, Cell{1, 1}};
        return t;
    }
    const Tiling inner = tile_square_4m(m);
    for (const TPlacement& p : inner.tetrominoes) t.tetrominoes.push_back(shift(p, 2, 0));
    const Tiling strip = gadgets::l_strip_tiling(m);
    t.tetrominoes.insert(t.tetrominoes.end(), strip.tetrominoes.begin(), strip.tetrominoes.end());
    t.monominoes = strip.monominoes;
    t.canonicalize();
    return t;
}

Tiling extend_A_ones(const Tiling& t) {
    require_valid_an_input(t, 1, "extend_A_ones");
    const int n_in = t.region.max_corner().row + 1;
    const int k = (n_in - 1) / 4;
    if (k < 1) throw std::invalid_argument("extend_A_ones: input must be at least A_5");
    const int n = n_in + 2;

    Tiling out = translate_tiling(t, 2, 2);
    for (const TPlacement& p : gadgets::ones_extension(k)) out.tetrominoes.push_back(p);

    // Result region: main-diagonal reflection of AN(n).
    std::vector<Cell> cells;
    const std::array<Cell, 4> removed = {Cell{0, 0}, Cell{0, 1}, Cell{1, 0}, Cell{n - 1, 0}};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Cell cell{r, c};
            if (std::find(removed.begin(), removed.end(), cell) == removed.end())
                cells.push_back(cell);
        }
    out.region = Region::explicit_cells(std::move(cells));
    out.canonicalize();
    return out;
}

Tiling extend_A_threes(const Tiling& t) {
    require_valid_an_input(t, 3, "extend_A_threes");
    const int n_in = t.region.max_corner().row + 1;
    const int k = (n_in - 3) / 4;
    const int n = n_in + 2;

    Tiling out = translate_tiling(t, 2, 0);
    for (const TPlacement& p : gadgets::threes_extension(k)) out.tetrominoes.push_back(p);

    // Result region: anti-diagonal reflection of AN(n).
    std::vector<Cell> cells;
    const std::array<Cell, 4> removed = {
        Cell{0, n - 1}, Cell{n - 2, n - 1}, Cell{n - 1, n - 2}, Cell{n - 1, n - 1}};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Cell cell{r, c};
            if (std::find(removed.begin(), removed.end(), cell) == removed.end())
                cells.push_back(cell);
        }
    out.region = Region::explicit_cells(std::move(cells));
    out.canonicalize();
    return out;
}

Tiling tile_A(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("tile_A: n must be odd and >= 3");
    if (n == 3) return gadgets::a3_base();
    Tiling cur = gadgets::a5_base();
    for (int s = 7; s <= n; s += 2) {
        if (s % 4 == 3) {
            cur = onto_an_region(transpose_square(extend_A_ones(cur)), s);
        } else {
            cur = onto_an_region(anti_transpose_square(extend_A_threes(cur)), s);
        }
    }
    return cur;
}

Tiling tile_square_odd(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("tile_square_odd: n must be odd and >= 3");
    Tiling t = tile_A(n);
    t.region = Region::square(n);
    for (const Cell& c : an_removed_cells(n)) t.monominoes.push_back(c);
    t.canonicalize();
    return t;
}

Tiling tile_any(int n) { return replay(trace_for(n)); }

ConstructionTrace trace_for(int n) {
    if (n < 1) throw std::invalid_argument("tile_any: n must be >= 1");
    ConstructionTrace tr;
    tr.target_kind = RegionKind::Square;
    tr.n = n;
    if (n == 1) return tr;
    if (n % 4 == 0) {
        const int m = n / 4;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                tr.steps.push_back({StepKind::Base4x4, {4 * i, 4 * j}});
        return tr;
    }
    if (n % 4 == 2) {
        const int m = (n - 2) / 4;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                tr.steps.push_back({StepKind::Base4x4, {4 * i + 2, 4 * j}});
        tr.steps.push_back({StepKind::ExtendL, {m}});
        for (int j = 0; j < m; ++j) tr.steps.push_back({StepKind::FriezeRepeat, {m, j}});
        return tr;
    }
    // odd n
    if (n == 3) {
        tr.steps.push_back({StepKind::BaseA3, {}});
        return tr;
    }
    tr.steps.push_back({StepKind::BaseA5, {}});
    for (int s = 7; s <= n; s += 2) {
        if (s % 4 == 3)
            tr.steps.push_back({StepKind::ExtendOnes, {(s - 3) / 4}});
        else
            tr.steps.push_back({StepKind::ExtendThrees, {(s - 5) / 4}});
    }
    return tr;
}

Tiling replay(const ConstructionTrace& trace) {
    if (trace.target_kind != RegionKind::Square)
        throw std::invalid_argument("replay: only square targets are supported");
    const int n = trace.n;
    if (n < 1) throw std::invalid_argument("replay: n must be >= 1");

    Tiling t;
    if (n == 1) {
        t.region = Region::square(1);
        t.monominoes = {Cell{0, 0}};
        return t;
    }

    if (n % 2 == 1) {
        // Odd targets replay the A_n induction, then fill the removed cells.
        Tiling a;
        for (const TraceStep& step : trace.steps) {
            switch (step.kind) {
                case StepKind::BaseA3: a = gadgets::a3_base(); break;
                case StepKind::BaseA5: a = gadgets::a5_base(); break;
                case StepKind::ExtendOnes:
                    a = onto_an_region(transpose_square(extend_A_ones(a)), 4 * step.params.at(0) + 3);
                    break;
                case StepKind::ExtendThrees:
                    a = onto_an_region(anti_transpose_square(extend_A_threes(a)),
                                       4 * step.params.at(0) + 5);
                    break;
                default:
                    throw std::invalid_argument("replay: step not valid for an odd target");
            }
        }
        if (a.region.max_corner().row + 1 != n)
            throw std::invalid_argument("replay: steps do not reach the target size");
        t = std::move(a);
        t.region = Region::square(n);
        for (const Cell& c : an_removed_cells(n)) t.monominoes.push_back(c);
        t.canonicalize();
        return t;
    }

    t.region = Region::square(n);
    if (n % 4 == 2 && trace.steps.empty())
        throw std::invalid_argument("replay: missing steps for n = 4m + 2 target");
    for (const TraceStep& step : trace.steps) {
        switch (step.kind) {
            case StepKind::Base4x4:
                for (const TPlacement& p : gadgets::pinwheel(step.params.at(0), step.params.at(1)))
                    t.tetrominoes.push_back(p);
                break;
            case StepKind::ExtendL: {
                const int m = step.params.at(0);
                const int side = 4 * m + 2;
                if (m == 0) {
                    t.monominoes = {Cell{0, 0}, Cell{0, 1}, Cell{1, 0}, Cell{1, 1}};
                } else {
                    t.monominoes = {Cell{0, 0}, Cell{0, 1}, Cell{1, 0}, Cell{side - 1, side - 1}};
                }
                break;
            }
            case StepKind::FriezeRepeat: {
                const int m = step.params.at(0);
                const int j = step.params.at(1);
                const int side = 4 * m + 2;
                const auto pair = frieze_strip(4);  // one period
                for (const TPlacement& p : pair) {
                    t.tetrominoes.push_back(shift(p, 0, 4 * j + 1));
                    t.tetrominoes.push_back(shift(transpose(p), 4 * j + 1, side - 2));
                }
                break;
            }
            default:
                throw std::invalid_argument("replay: step not valid for an even target");
        }
    }
    t.canonicalize();
    return t;
}

}  // namespace ttile
