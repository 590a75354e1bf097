#include "ttile/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

#include "ttile/verify.hpp"

namespace ttile {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Infeasible: return "infeasible";
        case SearchStatus::Aborted: return "aborted";
    }
    return "?";
}

std::vector<TPlacement> enumerate_placements(const Region& region) {
    std::vector<TPlacement> out;
    for (const Cell& anchor : region.cells) {
        for (Orientation o : kAllOrientations) {
            TPlacement p = t_cells(anchor, o);
            bool inside = true;
            for (const Cell& c : p.cells)
                if (!region.contains(c)) {
                    inside = false;
                    break;
                }
            if (inside) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CoverProblem CoverProblem::make(Region region, int monomino_budget) {
    if (monomino_budget < 0)
        throw std::invalid_argument("CoverProblem: monomino budget must be >= 0");
    CoverProblem p;
    p.candidate_placements = enumerate_placements(region);
    p.region = std::move(region);
    p.monomino_budget = monomino_budget;
    return p;
}

namespace {

using Clock = std::chrono::steady_clock;

// Dancing-links matrix over region cells. Columns are cell indices in the
// region's sorted order; rows are candidate placements. Headers live at
// node ids 0..C-1 with the root at C; row nodes follow.
struct Dlx {
    struct Node {
        int l, r, u, d;
        int col;  // -1 for the root, column index for headers and row nodes
        int row;  // placement index, -1 for headers/root
    };

    std::vector<Node> node;
    std::vector<int> col_size;
    int root = 0;
    int active_cells = 0;
    int active_black = 0;           // checkerboard count among active columns
    std::vector<int> col_color;     // (row + col) & 1 per column

    Dlx(const Region& region, const std::vector<TPlacement>& placements) {
        const int n_cols = static_cast<int>(region.cells.size());
        root = n_cols;
        node.resize(static_cast<std::size_t>(n_cols) + 1);
        col_size.assign(n_cols, 0);
        col_color.resize(n_cols);
        for (int c = 0; c < n_cols; ++c) {
            node[c] = Node{c == 0 ? root : c - 1, c == n_cols - 1 ? root : c + 1, c, c, c, -1};
            col_color[c] = (region.cells[c].row + region.cells[c].col) & 1;
        }
        node[root] = Node{n_cols == 0 ? root : n_cols - 1, n_cols == 0 ? root : 0, root, root, -1, -1};
        active_cells = n_cols;
        for (int c = 0; c < n_cols; ++c) active_black += col_color[c] == 0;

        auto col_of = [&](Cell cell) {
            const auto it = std::lower_bound(region.cells.begin(), region.cells.end(), cell);
            if (it == region.cells.end() || !(*it == cell))
                throw std::invalid_argument("CoverProblem: placement cell outside the region");
            return static_cast<int>(it - region.cells.begin());
        };

        for (std::size_t r = 0; r < placements.size(); ++r) {
            int first = -1;
            for (const Cell& cell : placements[r].cells) {
                const int c = col_of(cell);
                const int id = static_cast<int>(node.size());
                // vertical insertion at the bottom of column c
                node.push_back(Node{id, id, node[c].u, c, c, static_cast<int>(r)});
                node[node[c].u].d = id;
                node[c].u = id;
                ++col_size[c];
                if (first == -1) {
                    first = id;
                } else {
                    node[id].l = node[first].l;
                    node[id].r = first;
                    node[node[first].l].r = id;
                    node[first].l = id;
                }
            }
        }
    }

    void cover(int c) {
        node[node[c].r].l = node[c].l;
        node[node[c].l].r = node[c].r;
        --active_cells;
        active_black -= col_color[c] == 0;
        for (int i = node[c].d; i != c; i = node[i].d)
            for (int j = node[i].r; j != i; j = node[j].r) {
                node[node[j].d].u = node[j].u;
                node[node[j].u].d = node[j].d;
                --col_size[node[j].col];
            }
    }

    void uncover(int c) {
        for (int i = node[c].u; i != c; i = node[i].u)
            for (int j = node[i].l; j != i; j = node[j].l) {
                ++col_size[node[j].col];
                node[node[j].d].u = j;
                node[node[j].u].d = j;
            }
        node[node[c].r].l = c;
        node[node[c].l].r = c;
        ++active_cells;
        active_black += col_color[c] == 0;
    }

    // Most-constrained active column; ties go to the lowest cell index
    // (the header ring stays sorted by construction).
    int pick_column() const {
        int best = -1, best_size = -1;
        for (int c = node[root].r; c != root; c = node[c].r)
            if (best == -1 || col_size[c] < best_size) {
                best = c;
                best_size = col_size[c];
            }
        return best;
    }
};

// Necessary condition on covering the remaining cells with T's and at most
// `budget` monominoes. Every T covers 3 cells of one checkerboard color and
// 1 of the other, so with b black and w white cells left there must exist
// monomino counts m_b, m_w and T counts x (3-black) and y (3-white) with
//   3x + y = b - m_b,  x + 3y = w - m_w,  m_b + m_w <= budget.
// x integral and x, y >= 0 pins everything else down.
bool color_feasible(int b, int w, int budget) {
    const int total = b + w;
    for (int m = total % 4; m <= budget; m += 4) {
        for (int mb = 0; mb <= m && mb <= b; ++mb) {
            const int mw = m - mb;
            if (mw > w) continue;
            const int bb = b - mb, ww = w - mw;
            const int x8 = 3 * bb - ww;
            if (x8 < 0 || x8 % 8 != 0) continue;
            if (3 * ww - bb < 0) continue;
            return true;
        }
    }
    return false;
}

struct SearchHooks {
    // Return false to stop the whole search (e.g. first solution found).
    std::function<bool()> on_solution;
    const std::atomic<bool>* stop_flag = nullptr;           // optional external stop
    std::atomic<std::uint64_t>* shared_nodes = nullptr;     // optional global node budget
};

class Searcher {
  public:
    Searcher(const CoverProblem& problem, const SearchLimits& limits, SearchHooks hooks)
        : problem_(problem),
          dlx_(problem.region, problem.candidate_placements),
          limits_(limits),
          hooks_(std::move(hooks)),
          deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(limits.max_seconds))) {}

    Dlx& matrix() { return dlx_; }

    // Pre-applied top-level moves (used by the parallel driver) so that
    // reconstructed solutions include them.
    void seed_row(int row) { chosen_rows_.push_back(row); }
    void seed_mono(int col) { mono_cols_.push_back(col); }

    // Runs the search from the current matrix state. Returns true when the
    // subtree was exhausted (or a prune applied), false when stopped early.
    bool run(int budget) {
        if (Clock::now() > deadline_) {
            aborted_ = true;
            return false;
        }
        return dfs(budget);
    }

    bool aborted() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }

    Tiling current_solution() const {
        Tiling t;
        t.region = problem_.region;
        for (int r : chosen_rows_) t.tetrominoes.push_back(problem_.candidate_placements[r]);
        for (int c : mono_cols_) t.monominoes.push_back(problem_.region.cells[c]);
        t.canonicalize();
        return t;
    }

  private:
    bool bump() {
        ++nodes_;
        if (hooks_.shared_nodes != nullptr) {
            if ((nodes_ & 0xffu) == 0) {
                const auto total = hooks_.shared_nodes->fetch_add(256, std::memory_order_relaxed);
                if (total >= limits_.max_nodes) {
                    aborted_ = true;
                    return false;
                }
            }
        } else if (nodes_ > limits_.max_nodes) {
            aborted_ = true;
            return false;
        }
        if ((nodes_ & 0xfffu) == 0) {
            if (Clock::now() > deadline_) {
                aborted_ = true;
                return false;
            }
            if (hooks_.stop_flag != nullptr && hooks_.stop_flag->load(std::memory_order_relaxed))
                return false;
        }
        return true;
    }

    bool dfs(int budget) {
        if (dlx_.active_cells == 0) return hooks_.on_solution();
        const int b = dlx_.active_black;
        const int w = dlx_.active_cells - b;
        if (!color_feasible(b, w, budget)) return true;  // dead subtree

        const int c = dlx_.pick_column();
        bool keep_going = true;
        dlx_.cover(c);
        for (int i = dlx_.node[c].d; keep_going && i != c; i = dlx_.node[i].d) {
            if (!bump()) {
                keep_going = false;
                break;
            }
            for (int j = dlx_.node[i].r; j != i; j = dlx_.node[j].r) dlx_.cover(dlx_.node[j].col);
            chosen_rows_.push_back(dlx_.node[i].row);
            keep_going = dfs(budget);
            chosen_rows_.pop_back();
            for (int j = dlx_.node[i].l; j != i; j = dlx_.node[j].l) dlx_.uncover(dlx_.node[j].col);
        }
        if (keep_going && budget > 0) {
            if (bump()) {
                mono_cols_.push_back(c);
                keep_going = dfs(budget - 1);
                mono_cols_.pop_back();
            } else {
                keep_going = false;
            }
        }
        dlx_.uncover(c);
        return keep_going;
    }

    const CoverProblem& problem_;
    Dlx dlx_;
    SearchLimits limits_;
    SearchHooks hooks_;
    Clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<int> chosen_rows_;
    std::vector<int> mono_cols_;
};

// Bounding-box symmetries (subgroup of the dihedral group of the square)
// that map the region's cell set onto itself.
std::vector<std::function<Cell(Cell)>> region_symmetries(const Region& region) {
    const Cell lo = region.min_corner();
    const Cell hi = region.max_corner();
    const int R = lo.row + hi.row;
    const int C = lo.col + hi.col;
    const bool square_box = (hi.row - lo.row) == (hi.col - lo.col);

    std::vector<std::function<Cell(Cell)>> candidates;
    candidates.push_back([](Cell c) { return c; });
    candidates.push_back([R](Cell c) { return Cell{R - c.row, c.col}; });
    candidates.push_back([C](Cell c) { return Cell{c.row, C - c.col}; });
    candidates.push_back([R, C](Cell c) { return Cell{R - c.row, C - c.col}; });
    if (square_box) {
        const int dr = lo.row - lo.col;  // transpose shifted back onto the box
        candidates.push_back([dr](Cell c) { return Cell{c.col + dr, c.row - dr}; });
        candidates.push_back([dr, R](Cell c) { return Cell{R - (c.col + dr), c.row - dr}; });
        candidates.push_back([dr, C](Cell c) { return Cell{c.col + dr, C - (c.row - dr)}; });
        candidates.push_back([dr, R, C](Cell c) { return Cell{R - (c.col + dr), C - (c.row - dr)}; });
    }

    std::vector<std::function<Cell(Cell)>> out;
    for (auto& f : candidates) {
        std::vector<Cell> mapped;
        mapped.reserve(region.cells.size());
        for (const Cell& c : region.cells) mapped.push_back(f(c));
        std::sort(mapped.begin(), mapped.end());
        if (mapped == region.cells) out.push_back(std::move(f));
    }
    return out;
}

std::vector<int> solution_key(const std::vector<TPlacement>& ts, const std::vector<Cell>& ms) {
    std::vector<TPlacement> t = ts;
    std::vector<Cell> m = ms;
    std::sort(t.begin(), t.end());
    std::sort(m.begin(), m.end());
    std::vector<int> key;
    key.reserve(t.size() * 8 + m.size() * 2 + 1);
    for (const TPlacement& p : t)
        for (const Cell& c : p.cells) {
            key.push_back(c.row);
            key.push_back(c.col);
        }
    key.push_back(-1);
    for (const Cell& c : m) {
        key.push_back(c.row);
        key.push_back(c.col);
    }
    return key;
}

}  // namespace

SearchResult solve(const CoverProblem& problem, const SearchLimits& limits) {
    const auto t0 = Clock::now();
    SearchResult result;

    std::optional<Tiling> found;
    SearchHooks hooks;
    Searcher* searcher_ptr = nullptr;
    hooks.on_solution = [&]() {
        found = searcher_ptr->current_solution();
        return false;  // stop at the first solution
    };
    Searcher searcher(problem, limits, std::move(hooks));
    searcher_ptr = &searcher;

    const bool exhausted = searcher.run(problem.monomino_budget);
    result.nodes_expanded = searcher.nodes();
    result.elapsed = Clock::now() - t0;
    if (found.has_value()) {
        result.status = SearchStatus::Found;
        result.tiling = std::move(found);
        assert(verify(*result.tiling).valid);
    } else if (searcher.aborted()) {
        result.status = SearchStatus::Aborted;
    } else {
        assert(exhausted);
        (void)exhausted;
        result.status = SearchStatus::Infeasible;
    }
    return result;
}

SearchResult solve_parallel(const CoverProblem& problem, const SearchLimits& limits,
                            unsigned threads) {
    const auto t0 = Clock::now();

    // Top-level branches: candidates of the root's most-constrained column,
    // plus the monomino move when budget allows.
    Dlx probe(problem.region, problem.candidate_placements);
    if (probe.active_cells == 0) {
        SearchResult r;
        r.status = SearchStatus::Found;
        r.tiling = Tiling{problem.region, {}, {}};
        r.elapsed = Clock::now() - t0;
        return r;
    }
    const int root_col = probe.pick_column();
    std::vector<int> branch_rows;  // placement indices covering root_col
    for (int i = probe.node[root_col].d; i != root_col; i = probe.node[i].d)
        branch_rows.push_back(probe.node[i].row);
    const bool mono_branch = problem.monomino_budget > 0;
    const std::size_t n_branches = branch_rows.size() + (mono_branch ? 1 : 0);
    if (n_branches == 0) {
        SearchResult r;
        r.status = SearchStatus::Infeasible;
        r.elapsed = Clock::now() - t0;
        return r;
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_branches));

    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> shared_nodes{0};
    std::atomic<std::size_t> next_branch{0};
    std::vector<std::optional<Tiling>> branch_solution(n_branches);
    std::atomic<bool> any_aborted{false};

    auto worker = [&]() {
        for (;;) {
            const std::size_t b = next_branch.fetch_add(1);
            if (b >= n_branches) return;
            if (stop.load(std::memory_order_relaxed)) return;

            std::optional<Tiling> found;
            SearchHooks hooks;
            Searcher* sp = nullptr;
            hooks.on_solution = [&]() {
                found = sp->current_solution();
                return false;
            };
            hooks.stop_flag = &stop;
            hooks.shared_nodes = &shared_nodes;
            Searcher searcher(problem, limits, std::move(hooks));
            sp = &searcher;

            Dlx& m = searcher.matrix();
            const int c = m.pick_column();
            m.cover(c);
            int budget = problem.monomino_budget;
            bool is_mono = b == branch_rows.size();
            bool applied = true;
            if (is_mono) {
                --budget;
                searcher.seed_mono(c);
            } else {
                // walk to the b-th candidate of column c and cover its row
                int i = m.node[c].d;
                for (std::size_t step = 0; step < b; ++step) i = m.node[i].d;
                if (m.node[i].row != branch_rows[b]) applied = false;
                if (applied) {
                    for (int j = m.node[i].r; j != i; j = m.node[j].r) m.cover(m.node[j].col);
                    searcher.seed_row(m.node[i].row);
                }
            }
            if (applied) {
                searcher.run(budget);
            } else {
                any_aborted.store(true);  // branch walk mismatch; never expected
            }
            if (searcher.aborted()) any_aborted.store(true);
            if (found.has_value()) {
                branch_solution[b] = std::move(found);
                stop.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    SearchResult result;
    result.nodes_expanded = shared_nodes.load();
    result.elapsed = Clock::now() - t0;
    for (std::size_t b = 0; b < n_branches; ++b) {
        if (branch_solution[b].has_value()) {
            result.status = SearchStatus::Found;
            result.tiling = std::move(branch_solution[b]);
            return result;
        }
    }
    // A worker stopped early by the stop flag without a solution only
    // happens when some other branch found one, which is handled above.
    result.status = any_aborted.load() ? SearchStatus::Aborted : SearchStatus::Infeasible;
    return result;
}

MinSearchResult min_monominoes_search(int n, const SearchLimits& limits) {
    if (n < 1) throw std::invalid_argument("min_monominoes_search: n must be >= 1");
    const auto t0 = Clock::now();
    MinSearchResult out;
    const Region region = Region::square(n);
    const auto placements = enumerate_placements(region);
    for (int k = 0; k <= n * n; ++k) {
        CoverProblem p;
        p.region = region;
        p.candidate_placements = placements;
        p.monomino_budget = k;
        const SearchResult r = solve(p, limits);
        out.nodes_expanded += r.nodes_expanded;
        if (r.status == SearchStatus::Aborted) {
            out.status = SearchStatus::Aborted;
            out.elapsed = Clock::now() - t0;
            return out;
        }
        if (r.status == SearchStatus::Found) {
            out.status = SearchStatus::Found;
            out.min_monominoes = k;
            out.elapsed = Clock::now() - t0;
            return out;
        }
    }
    out.status = SearchStatus::Infeasible;  // unreachable: k = n^2 always succeeds
    out.elapsed = Clock::now() - t0;
    return out;
}

CountResult count_solutions(const CoverProblem& problem, const SearchLimits& limits) {
    const auto t0 = Clock::now();
    CountResult out;
    const auto symmetries = region_symmetries(problem.region);

    SearchHooks hooks;
    Searcher* sp = nullptr;
    hooks.on_solution = [&]() {
        ++out.raw;
        const Tiling sol = sp->current_solution();
        const std::vector<int> own = solution_key(sol.tetrominoes, sol.monominoes);
        bool minimal = true;
        for (std::size_t g = 1; g < symmetries.size() && minimal; ++g) {
            std::vector<TPlacement> ts;
            ts.reserve(sol.tetrominoes.size());
            for (const TPlacement& p : sol.tetrominoes) {
                std::array<Cell, 4> cs = p.cells;
                for (Cell& c : cs) c = symmetries[g](c);
                ts.push_back(TPlacement::from_cells(cs));
            }
            std::vector<Cell> ms;
            ms.reserve(sol.monominoes.size());
            for (const Cell& c : sol.monominoes) ms.push_back(symmetries[g](c));
            if (solution_key(ts, ms) < own) minimal = false;
        }
        if (minimal) ++out.orbits;
        return true;  // enumerate everything
    };
    Searcher searcher(problem, limits, std::move(hooks));
    sp = &searcher;

    searcher.run(problem.monomino_budget);
    out.nodes_expanded = searcher.nodes();
    out.elapsed = Clock::now() - t0;
    out.status = searcher.aborted() ? SearchStatus::Aborted : SearchStatus::Found;
    return out;
}

}  // namespace ttile
