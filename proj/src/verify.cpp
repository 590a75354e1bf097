#include "ttile/verify.hpp"

#include <algorithm>
#include <map>

namespace ttile {

bool is_t_shape(std::span<const Cell> cells) {
    if (cells.size() != 4) return false;
    std::array<Cell, 4> cs;
    std::copy(cells.begin(), cells.end(), cs.begin());
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
    return recognize_t(TPlacement{cs}).has_value();
}

VerificationReport verify(const Tiling& t) {
    VerificationReport rep;
    rep.cells_total = t.region.cells.size();
    rep.t_count = t.tetrominoes.size();
    rep.mono_count = t.monominoes.size();

    std::map<Cell, int> coverage;  // region cells only

    auto claim = [&](Cell c) {
        if (t.region.contains(c)) coverage[c] += 1;
    };

    std::size_t piece_index = 0;
    for (const TPlacement& p : t.tetrominoes) {
        bool distinct = true;
        for (int i = 0; i + 1 < 4; ++i)
            if (p.cells[i] == p.cells[i + 1]) distinct = false;
        if (!distinct) {
            rep.bad_pieces.emplace_back(piece_index, "duplicate cell within piece");
        } else if (!is_t_shape(p.cells)) {
            rep.bad_pieces.emplace_back(piece_index, "cells do not form a T-tetromino");
        } else if (!std::all_of(p.cells.begin(), p.cells.end(),
                                [&](Cell c) { return t.region.contains(c); })) {
            rep.bad_pieces.emplace_back(piece_index, "piece extends outside the region");
        }
        for (const Cell& c : p.cells) claim(c);
        ++piece_index;
    }
    for (const Cell& c : t.monominoes) {
        if (!t.region.contains(c))
            rep.bad_pieces.emplace_back(piece_index, "monomino outside the region");
        claim(c);
        ++piece_index;
    }

    for (const Cell& c : t.region.cells) {
        auto it = coverage.find(c);
        const int hits = it == coverage.end() ? 0 : it->second;
        if (hits == 0) rep.gaps.push_back(c);
        if (hits >= 2) rep.overlaps.push_back(c);
        if (hits >= 1) ++rep.cells_covered;
    }

    rep.valid = rep.overlaps.empty() && rep.gaps.empty() && rep.bad_pieces.empty() &&
                4 * rep.t_count + rep.mono_count == rep.cells_total;
    return rep;
}

}  // namespace ttile
