#include "doctest.h"

#include <algorithm>
#include <vector>

#include "ttile/construct.hpp"
#include "ttile/verify.hpp"

// Literal transcriptions of the reference layouts (bottom-left origin,
// (row, col)). The generator tables in the construct module must reproduce
// them exactly.

using namespace ttile;

namespace {

TPlacement piece(Cell a, Cell b, Cell c, Cell d) { return TPlacement::from_cells({a, b, c, d}); }

std::vector<TPlacement> sorted(std::vector<TPlacement> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("reference layout: the 6x6 L-strip") {
    const std::vector<TPlacement> ts = {
        piece({1, 1}, {1, 2}, {1, 3}, {0, 2}),
        piece({0, 3}, {0, 4}, {0, 5}, {1, 4}),
        piece({1, 5}, {2, 5}, {3, 5}, {2, 4}),
        piece({3, 4}, {4, 4}, {5, 4}, {4, 5}),
    };
    const std::vector<Cell> monos = {{0, 0}, {0, 1}, {1, 0}, {5, 5}};

    const Tiling strip = gadgets::l_strip_tiling(1);
    CHECK(strip.tetrominoes == sorted(ts));
    CHECK(strip.monominoes == monos);

    Tiling literal;
    literal.region = Region::l_strip(6, 4);
    literal.tetrominoes = ts;
    literal.monominoes = monos;
    literal.canonicalize();
    const auto rep = verify(literal);
    CHECK(rep.valid);
    CHECK(rep.t_count == 4);
    CHECK(rep.mono_count == 4);
}

TEST_CASE("reference layout: A_5 with one interior monomino") {
    const std::vector<TPlacement> ts = {
        piece({2, 0}, {3, 0}, {4, 0}, {3, 1}),
        piece({4, 1}, {4, 2}, {4, 3}, {3, 2}),
        piece({0, 2}, {1, 2}, {2, 2}, {1, 1}),
        piece({0, 3}, {1, 3}, {2, 3}, {1, 4}),
        piece({2, 4}, {3, 4}, {4, 4}, {3, 3}),
    };
    const Tiling base = gadgets::a5_base();
    CHECK(base.tetrominoes == sorted(ts));
    CHECK(base.monominoes == std::vector<Cell>{{2, 1}});
    CHECK(verify(base).valid);
}

TEST_CASE("reference layout: extension of A_9 to the mirrored A_11") {
    // Solid corner pieces plus one repeat of each dashed arm unit, as drawn
    // on the 11 x 11 board.
    const std::vector<TPlacement> ts = {
        piece({8, 1}, {9, 1}, {10, 1}, {9, 0}),   // top of the left arm
        piece({2, 0}, {3, 0}, {4, 0}, {3, 1}),    // left arm, first unit
        piece({2, 1}, {2, 2}, {2, 3}, {3, 2}),    // reaches the embedded notch
        piece({1, 1}, {1, 2}, {1, 3}, {0, 2}),    // bottom-left corner
        piece({0, 7}, {0, 8}, {0, 9}, {1, 8}),    // bottom arm, last unit
        piece({0, 10}, {1, 10}, {2, 10}, {1, 9}), // bottom-right corner
        piece({6, 0}, {7, 0}, {8, 0}, {7, 1}),    // dashed: left arm repeat
        piece({4, 1}, {5, 1}, {6, 1}, {5, 0}),    // dashed: left arm repeat
        piece({0, 3}, {0, 4}, {0, 5}, {1, 4}),    // dashed: bottom arm repeat
        piece({1, 5}, {1, 6}, {1, 7}, {0, 6}),    // dashed: bottom arm repeat
    };
    CHECK(sorted(gadgets::ones_extension(2)) == sorted(ts));

    // End to end: the drawn instance extends a valid A_9 tiling to the
    // mirror image of A_11.
    const Tiling r11 = extend_A_ones(tile_A(9));
    CHECK(verify(r11).valid);
    for (const TPlacement& p : ts) {
        CHECK(std::find(r11.tetrominoes.begin(), r11.tetrominoes.end(), p) !=
              r11.tetrominoes.end());
    }
    for (const Cell& gone : {Cell{0, 0}, Cell{0, 1}, Cell{1, 0}, Cell{10, 0}})
        CHECK(!r11.region.contains(gone));
}

TEST_CASE("reference layout: extension of A_7 to the mirrored A_9") {
    const std::vector<TPlacement> ts = {
        piece({1, 0}, {2, 0}, {3, 0}, {2, 1}),    // left corner, vertical
        piece({0, 0}, {0, 1}, {0, 2}, {1, 1}),    // left corner, horizontal
        piece({1, 6}, {1, 7}, {1, 8}, {0, 7}),    // right corner, lower
        piece({2, 6}, {2, 7}, {2, 8}, {3, 7}),    // right corner, upper
        piece({1, 2}, {1, 3}, {1, 4}, {0, 3}),    // dashed: bottom arm repeat
        piece({0, 4}, {0, 5}, {0, 6}, {1, 5}),    // dashed: bottom arm repeat
        piece({3, 8}, {4, 8}, {5, 8}, {4, 7}),    // dashed: right arm repeat
        piece({5, 7}, {6, 7}, {7, 7}, {6, 8}),    // dashed: right arm repeat
    };
    CHECK(sorted(gadgets::threes_extension(1)) == sorted(ts));

    const Tiling r9 = extend_A_threes(tile_A(7));
    CHECK(verify(r9).valid);
    for (const TPlacement& p : ts) {
        CHECK(std::find(r9.tetrominoes.begin(), r9.tetrominoes.end(), p) !=
              r9.tetrominoes.end());
    }
    for (const Cell& gone : {Cell{0, 8}, Cell{7, 8}, Cell{8, 7}, Cell{8, 8}})
        CHECK(!r9.region.contains(gone));
}

TEST_CASE("reference layout: the pinwheel block") {
    const std::vector<TPlacement> ts = {
        piece({0, 0}, {0, 1}, {0, 2}, {1, 1}),
        piece({0, 3}, {1, 3}, {2, 3}, {1, 2}),
        piece({3, 1}, {3, 2}, {3, 3}, {2, 2}),
        piece({1, 0}, {2, 0}, {3, 0}, {2, 1}),
    };
    CHECK(sorted(gadgets::pinwheel(0, 0)) == sorted(ts));
}
