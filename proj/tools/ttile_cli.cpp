// ttile: construct, verify, search, and render T-tetromino tilings of
// squares with minimal monomino counts.
//
// Structured JSON goes to stdout; human diagnostics go to stderr. Exit
// codes: 0 success, 1 invalid tiling or infeasible, 2 usage error,
// 3 search aborted on limits.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ttile/construct.hpp"
#include "ttile/formulas.hpp"
#include "ttile/render.hpp"
#include "ttile/solver.hpp"
#include "ttile/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAborted = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << data;
}

json cells_json(const std::vector<ttile::Cell>& cells) {
    json out = json::array();
    for (const auto& c : cells) out.push_back(json::array({c.row, c.col}));
    return out;
}

json report_json(const ttile::VerificationReport& rep) {
    json bad = json::array();
    for (const auto& [idx, why] : rep.bad_pieces) bad.push_back(json{{"piece", idx}, {"reason", why}});
    return json{
        {"valid", rep.valid},
        {"cells_total", rep.cells_total},
        {"cells_covered", rep.cells_covered},
        {"overlaps", cells_json(rep.overlaps)},
        {"gaps", cells_json(rep.gaps)},
        {"bad_pieces", bad},
        {"tetrominoes", rep.t_count},
        {"monominoes", rep.mono_count},
    };
}

struct SolveOptions {
    int n = 0;
    std::string region = "square";
    int budget = 0;
    std::uint64_t max_nodes = 1'000'000'000;
    double max_seconds = 300.0;
    bool parallel = false;
    unsigned threads = 0;
};

ttile::Region make_region(const SolveOptions& opt) {
    if (opt.region == "square") return ttile::Region::square(opt.n);
    if (opt.region == "an") return ttile::Region::an(opt.n);
    throw CLI::ValidationError("--region", "must be 'square' or 'an'");
}

int run_solve(const SolveOptions& opt, const std::string& out_path) {
    const auto problem = ttile::CoverProblem::make(make_region(opt), opt.budget);
    const ttile::SearchLimits limits{opt.max_nodes, opt.max_seconds};
    const ttile::SearchResult res = opt.parallel
                                        ? ttile::solve_parallel(problem, limits, opt.threads)
                                        : ttile::solve(problem, limits);

    json doc{
        {"n", opt.n},
        {"region", opt.region},
        {"budget", opt.budget},
        {"status", ttile::to_string(res.status)},
    };
    if (!opt.parallel) doc["nodes"] = res.nodes_expanded;  // not reproducible in parallel mode
    if (res.tiling.has_value()) doc["tiling"] = json::parse(ttile::emit_json(*res.tiling));
    write_output(out_path, doc.dump(2) + "\n");
    std::cerr << "solve: " << ttile::to_string(res.status) << " after " << res.nodes_expanded
              << " nodes, " << res.elapsed.count() << " s\n";
    switch (res.status) {
        case ttile::SearchStatus::Found: return kExitOk;
        case ttile::SearchStatus::Infeasible: return kExitInvalid;
        case ttile::SearchStatus::Aborted: return kExitAborted;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"T-tetromino tilings of squares with minimal monomino counts"};
    app.require_subcommand(1);
    app.fallthrough();  // subcommands pick up --output from the top level

    std::string out_path = "-";
    app.add_option("--output", out_path, "Output path, or - for stdout")->capture_default_str();

    // tile
    auto* tile = app.add_subcommand("tile", "Construct a tiling of the n x n square");
    int tile_n = 0;
    std::string tile_format = "json";
    bool tile_trace = false;
    tile->add_option("--n", tile_n, "Side length (>= 1)")->required()->check(CLI::PositiveNumber);
    tile->add_option("--format", tile_format, "json | ascii | svg")
        ->check(CLI::IsMember({"json", "ascii", "svg"}));
    tile->add_flag("--with-trace", tile_trace, "Include the construction trace (json only)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a tiling document");
    std::string verify_input = "-";
    verify_cmd->add_option("--input", verify_input, "Input path, or - for stdin");

    // solve / min / count
    SolveOptions sopt;
    auto add_limits = [&](CLI::App* cmd) {
        cmd->add_option("--max-nodes", sopt.max_nodes, "Node budget per search")
            ->capture_default_str();
        cmd->add_option("--max-seconds", sopt.max_seconds, "Wall-clock budget per search")
            ->capture_default_str();
    };
    auto* solve_cmd = app.add_subcommand("solve", "Exact-cover search with a monomino budget");
    solve_cmd->add_option("--n", sopt.n, "Region size")->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--region", sopt.region, "square | an")
        ->check(CLI::IsMember({"square", "an"}));
    solve_cmd->add_option("--budget", sopt.budget, "Monomino budget")->check(CLI::NonNegativeNumber);
    add_limits(solve_cmd);
    solve_cmd->add_flag("--parallel", sopt.parallel, "Status-deterministic parallel search");
    solve_cmd->add_option("--threads", sopt.threads, "Worker threads (0 = auto)");

    auto* min_cmd = app.add_subcommand("min", "Smallest workable monomino budget for Square(n)");
    int min_n = 0;
    min_cmd->add_option("--n", min_n, "Side length")->required()->check(CLI::PositiveNumber);
    add_limits(min_cmd);

    auto* count_cmd = app.add_subcommand("count", "Count exact covers");
    count_cmd->add_option("--n", sopt.n, "Region size")->required()->check(CLI::PositiveNumber);
    count_cmd->add_option("--region", sopt.region, "square | an")
        ->check(CLI::IsMember({"square", "an"}));
    count_cmd->add_option("--budget", sopt.budget, "Monomino budget")
        ->check(CLI::NonNegativeNumber);
    add_limits(count_cmd);

    // sequence
    auto* seq = app.add_subcommand("sequence", "Closed-form piece counts for n = 1..N");
    int seq_n = 0;
    std::string seq_format = "csv";
    seq->add_option("--n", seq_n, "Upper bound")->required()->check(CLI::PositiveNumber);
    seq->add_option("--format", seq_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    // render
    auto* render_cmd = app.add_subcommand("render", "Render a tiling document");
    std::string render_input = "-";
    std::string render_format = "ascii";
    render_cmd->add_option("--input", render_input, "Input path, or - for stdin");
    render_cmd->add_option("--format", render_format, "ascii | svg")
        ->check(CLI::IsMember({"ascii", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (tile->parsed()) {
            const ttile::ConstructionTrace trace = ttile::trace_for(tile_n);
            const ttile::Tiling t = ttile::replay(trace);
            const auto rep = ttile::verify(t);
            if (!rep.valid) {
                std::cerr << "internal error: constructed tiling failed verification\n";
                return kExitInvalid;
            }
            if (tile_format == "json") {
                write_output(out_path, tile_trace ? ttile::emit_json(t, trace) : ttile::emit_json(t));
            } else if (tile_format == "ascii") {
                write_output(out_path, ttile::render_ascii(t));
            } else {
                write_output(out_path, ttile::render_svg(t));
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            ttile::Tiling t;
            try {
                t = ttile::parse_json(read_input(verify_input));
            } catch (const ttile::ParseError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitUsage;
            }
            const auto rep = ttile::verify(t);
            write_output(out_path, report_json(rep).dump(2) + "\n");
            return rep.valid ? kExitOk : kExitInvalid;
        }

        if (solve_cmd->parsed()) return run_solve(sopt, out_path);

        if (min_cmd->parsed()) {
            const ttile::SearchLimits limits{sopt.max_nodes, sopt.max_seconds};
            const auto res = ttile::min_monominoes_search(min_n, limits);
            json doc{{"n", min_n}, {"status", ttile::to_string(res.status)}};
            if (res.status == ttile::SearchStatus::Found) doc["min_monominoes"] = res.min_monominoes;
            doc["nodes"] = res.nodes_expanded;
            write_output(out_path, doc.dump(2) + "\n");
            std::cerr << "min: " << res.nodes_expanded << " nodes, " << res.elapsed.count() << " s\n";
            return res.status == ttile::SearchStatus::Found ? kExitOk : kExitAborted;
        }

        if (count_cmd->parsed()) {
            const auto problem = ttile::CoverProblem::make(make_region(sopt), sopt.budget);
            const ttile::SearchLimits limits{sopt.max_nodes, sopt.max_seconds};
            const auto res = ttile::count_solutions(problem, limits);
            json doc{
                {"n", sopt.n},
                {"region", sopt.region},
                {"budget", sopt.budget},
                {"status", ttile::to_string(res.status)},
                {"raw", res.raw},
                {"orbits", res.orbits},
                {"nodes", res.nodes_expanded},
            };
            write_output(out_path, doc.dump(2) + "\n");
            std::cerr << "count: " << res.nodes_expanded << " nodes, " << res.elapsed.count()
                      << " s\n";
            return res.status == ttile::SearchStatus::Found ? kExitOk : kExitAborted;
        }

        if (seq->parsed()) {
            if (seq_format == "csv") {
                std::ostringstream ss;
                ss << "n,max_t,min_mono\n";
                for (int n = 1; n <= seq_n; ++n)
                    ss << n << "," << ttile::max_t_count(n) << "," << ttile::min_monomino_count(n)
                       << "\n";
                write_output(out_path, ss.str());
            } else {
                json rows = json::array();
                for (int n = 1; n <= seq_n; ++n)
                    rows.push_back(json{{"n", n},
                                        {"max_t", ttile::max_t_count(n)},
                                        {"min_mono", ttile::min_monomino_count(n)}});
                write_output(out_path, rows.dump(2) + "\n");
            }
            return kExitOk;
        }

        if (render_cmd->parsed()) {
            ttile::Tiling t;
            try {
                t = ttile::parse_json(read_input(render_input));
            } catch (const ttile::ParseError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitUsage;
            }
            write_output(out_path,
                         render_format == "ascii" ? ttile::render_ascii(t) : ttile::render_svg(t));
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
