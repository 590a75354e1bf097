#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "ttile/grid.hpp"

// Exhaustive exact-cover search over T-placements with a monomino budget:
// finds a tiling using at most k monominoes or proves none exists. Region
// cells are the cover columns; monominoes are modeled as a budget counter
// (a cell may be assigned to a single-cell piece during search), not as
// extra columns, which avoids symmetric blowup over monomino identity.

namespace ttile {

// Every legal T-placement fully inside the region, deduplicated, in
// lexicographic order of its sorted cells.
std::vector<TPlacement> enumerate_placements(const Region& region);

struct CoverProblem {
    Region region;
    std::vector<TPlacement> candidate_placements;
    int monomino_budget = 0;

    static CoverProblem make(Region region, int monomino_budget);
};

struct SearchLimits {
    std::uint64_t max_nodes = 1'000'000'000;
    double max_seconds = 300.0;
};

enum class SearchStatus { Found, Infeasible, Aborted };

const char* to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::Aborted;
    std::optional<Tiling> tiling;  // set iff status == Found
    std::uint64_t nodes_expanded = 0;
    std::chrono::duration<double> elapsed{0};
};

// First solution in a fixed column/row selection order (most-constrained
// cell first, ties by lowest cell index; T candidates in lexicographic
// order, then the monomino move). Deterministic when single-threaded:
// identical problems and limits give identical status and nodes_expanded.
SearchResult solve(const CoverProblem& problem, const SearchLimits& limits = {});

// Splits the top-level branches across worker threads. Same Found /
// Infeasible answer as solve(); nodes_expanded and the particular tiling
// found are not deterministic. threads == 0 picks hardware concurrency.
SearchResult solve_parallel(const CoverProblem& problem, const SearchLimits& limits = {},
                            unsigned threads = 0);

struct MinSearchResult {
    SearchStatus status = SearchStatus::Aborted;  // Found when determined
    int min_monominoes = -1;
    std::uint64_t nodes_expanded = 0;
    std::chrono::duration<double> elapsed{0};
};

// Smallest k such that Square(n) admits a tiling with at most k monominoes,
// by increasing k from 0. Limits apply to each inner solve call.
MinSearchResult min_monominoes_search(int n, const SearchLimits& limits = {});

struct CountResult {
    SearchStatus status = SearchStatus::Aborted;  // Found when the count is exact
    std::uint64_t raw = 0;     // distinct exact covers
    std::uint64_t orbits = 0;  // up to the region's symmetries
    std::uint64_t nodes_expanded = 0;
    std::chrono::duration<double> elapsed{0};
};

// Number of distinct exact covers (sets of placements plus monomino cells)
// with at most the budgeted monominoes, and the number of equivalence
// classes under the region's bounding-box symmetries.
CountResult count_solutions(const CoverProblem& problem, const SearchLimits& limits = {});

}  // namespace ttile
