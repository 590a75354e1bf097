#pragma once

#include <cstdint>

// Closed-form piece counts for n x n squares tiled by T-tetrominoes plus
// monominoes, and the area identity for the cropped square A_n.

namespace ttile {

struct SquareSummary {
    int n = 0;
    std::int64_t max_t = 0;
    std::int64_t min_mono = 0;
    int residue = 0;  // n mod 4
};

// Maximal number of T-tetrominoes usable in an n x n square:
//   n % 4 == 0 -> n^2/4
//   n % 4 == 2 -> n^2/4 - 1
//   n odd      -> (n^2-1)/4 - 1, except n == 1 -> 0
std::int64_t max_t_count(int n);

// Minimal number of monominoes needed alongside them:
//   n == 1 -> 1, n % 4 == 0 -> 0, n % 4 == 2 -> 4, odd n >= 3 -> 5.
// Always equals n^2 - 4 * max_t_count(n).
std::int64_t min_monomino_count(int n);

// Area of A_{2m+1}: (2m+1)^2 - 4, which equals 4(m^2 + m - 1) + 1.
std::int64_t a_n_area(int m);

SquareSummary square_summary(int n);

}  // namespace ttile
