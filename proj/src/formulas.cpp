#include "ttile/formulas.hpp"

#include <stdexcept>
#include <string>

namespace ttile {

namespace {

void require_positive(int v, const char* what) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace

std::int64_t max_t_count(int n) {
    require_positive(n, "max_t_count: n");
    if (n == 1) return 0;  // the closed form breaks at n = 1
    const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    switch (n % 4) {
        case 0: return n2 / 4;
        case 2: return n2 / 4 - 1;
        default: return (n2 - 1) / 4 - 1;  // odd residues
    }
}

std::int64_t min_monomino_count(int n) {
    require_positive(n, "min_monomino_count: n");
    if (n == 1) return 1;
    if (n % 4 == 0) return 0;
    if (n % 2 == 0) return 4;
    return 5;
}

std::int64_t a_n_area(int m) {
    require_positive(m, "a_n_area: m");
    const std::int64_t n = 2 * static_cast<std::int64_t>(m) + 1;
    const std::int64_t area = n * n - 4;
    if (area != 4 * (static_cast<std::int64_t>(m) * m + m - 1) + 1)
        throw std::logic_error("a_n_area: identity violated");
    return area;
}

SquareSummary square_summary(int n) {
    return SquareSummary{n, max_t_count(n), min_monomino_count(n), n % 4};
}

}  // namespace ttile
