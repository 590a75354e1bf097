#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "ttile/formulas.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() {
    const char* p = std::getenv("TTILE_BIN");
    REQUIRE_MESSAGE(p != nullptr, "TTILE_BIN must point at the ttile binary");
    return p;
}

RunResult run(const std::string& args) {
    const std::string cmd = std::string("'") + cli_path() + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ttile_test_" + std::to_string(getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("cli: tile ascii output") {
    const RunResult res = run("tile --n 17 --format ascii");
    CHECK(res.exit_code == 0);
    int lines = 0, dots = 0;
    for (char c : res.out) {
        if (c == '\n') ++lines;
        if (c == '.') ++dots;
    }
    CHECK(lines == 17);
    CHECK(dots == 5);
}

TEST_CASE("cli: tile then verify round trip") {
    for (int n : {1, 2, 5, 8, 14, 23}) {
        const auto doc = temp_file("tiling_" + std::to_string(n) + ".json");
        const RunResult tiled =
            run("tile --n " + std::to_string(n) + " --output '" + doc.string() + "'");
        REQUIRE(tiled.exit_code == 0);
        const RunResult verified = run("verify --input '" + doc.string() + "'");
        CHECK(verified.exit_code == 0);
        const json rep = json::parse(verified.out);
        CHECK(rep["valid"] == true);
        CHECK(rep["tetrominoes"].get<std::int64_t>() == ttile::max_t_count(n));
        CHECK(rep["monominoes"].get<std::int64_t>() == ttile::min_monomino_count(n));
        std::filesystem::remove(doc);
    }
}

TEST_CASE("cli: verify flags an overlapping tiling with exit 1") {
    const auto bad = temp_file("bad.json");
    {
        std::ofstream f(bad);
        f << R"({"schema":1,"region":{"kind":"square","n":4},
                 "tetrominoes":[[[0,0],[0,1],[0,2],[1,1]],[[1,1],[1,2],[1,3],[0,2]]],
                 "monominoes":[]})";
    }
    const RunResult res = run("verify --input '" + bad.string() + "'");
    CHECK(res.exit_code == 1);
    const json rep = json::parse(res.out);
    CHECK(rep["valid"] == false);
    CHECK(!rep["overlaps"].empty());
    std::filesystem::remove(bad);
}

TEST_CASE("cli: verify rejects garbage input with exit 2") {
    const auto junk = temp_file("junk.json");
    {
        std::ofstream f(junk);
        f << "definitely not json";
    }
    CHECK(run("verify --input '" + junk.string() + "'").exit_code == 2);
    std::filesystem::remove(junk);
}

TEST_CASE("cli: solve status maps to exit codes") {
    const RunResult found = run("solve --n 4 --budget 0");
    CHECK(found.exit_code == 0);
    const json jf = json::parse(found.out);
    CHECK(jf["status"] == "found");
    CHECK(jf.contains("tiling"));

    const RunResult infeasible = run("solve --n 5 --budget 1");
    CHECK(infeasible.exit_code == 1);
    CHECK(json::parse(infeasible.out)["status"] == "infeasible");

    const RunResult aborted = run("solve --n 13 --budget 1 --max-nodes 1000");
    CHECK(aborted.exit_code == 3);
    CHECK(json::parse(aborted.out)["status"] == "aborted");

    const RunResult an = run("solve --n 5 --region an --budget 1");
    CHECK(an.exit_code == 0);
    CHECK(json::parse(an.out)["status"] == "found");

    const RunResult par = run("solve --n 6 --budget 4 --parallel");
    CHECK(par.exit_code == 0);
    CHECK(json::parse(par.out)["status"] == "found");
}

TEST_CASE("cli: min") {
    const RunResult res = run("min --n 6");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["n"] == 6);
    CHECK(j["min_monominoes"] == 4);
}

TEST_CASE("cli: count") {
    const RunResult res = run("count --n 2 --budget 4");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["raw"] == 1);
    CHECK(j["orbits"] == 1);
}

TEST_CASE("cli: sequence") {
    const RunResult csv = run("sequence --n 8");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out ==
          "n,max_t,min_mono\n"
          "1,0,1\n"
          "2,0,4\n"
          "3,1,5\n"
          "4,4,0\n"
          "5,5,5\n"
          "6,8,4\n"
          "7,11,5\n"
          "8,16,0\n");

    const RunResult js = run("sequence --n 3 --format json");
    CHECK(js.exit_code == 0);
    const json rows = json::parse(js.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[2]["max_t"] == 1);
}

TEST_CASE("cli: render from a document") {
    const auto doc = temp_file("render.json");
    REQUIRE(run("tile --n 6 --output '" + doc.string() + "'").exit_code == 0);
    const RunResult ascii = run("render --input '" + doc.string() + "' --format ascii");
    CHECK(ascii.exit_code == 0);
    int lines = 0;
    for (char c : ascii.out)
        if (c == '\n') ++lines;
    CHECK(lines == 6);
    const RunResult svg = run("render --input '" + doc.string() + "' --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    std::filesystem::remove(doc);
}

TEST_CASE("cli: tile emits a replayable trace on request") {
    const RunResult res = run("tile --n 9 --with-trace");
    CHECK(res.exit_code == 0);
    const json doc = json::parse(res.out);
    REQUIRE(doc.contains("trace"));
    CHECK(doc["trace"]["n"] == 9);
    CHECK(doc["trace"]["steps"].size() == 3);  // base + two extensions
    CHECK(json::parse(run("tile --n 9").out).contains("trace") == false);
}

TEST_CASE("cli: tile pipes into verify through stdin") {
    for (int n : {1, 3, 6, 16, 25, 42, 61, 84, 100}) {
        const std::string bin = std::string("'") + cli_path() + "'";
        const std::string cmd = bin + " tile --n " + std::to_string(n) + " | " + bin +
                                " verify --input - >/dev/null 2>/dev/null";
        const int status = std::system(cmd.c_str());
        CHECK(WIFEXITED(status));
        CHECK(WEXITSTATUS(status) == 0);
    }
}

TEST_CASE("cli: identical invocations produce identical bytes") {
    const std::string cmds[] = {
        "tile --n 9",
        "tile --n 12 --format svg",
        "solve --n 4 --budget 0",
        "sequence --n 20",
    };
    for (const std::string& cmd : cmds) {
        const RunResult a = run(cmd);
        const RunResult b = run(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("tile").exit_code == 2);          // missing --n
    CHECK(run("tile --n 0").exit_code == 2);    // rejected by validation
    CHECK(run("tile --n 4 --format tiff").exit_code == 2);
    CHECK(run("tile --n 250 --format ascii").exit_code == 2);  // board too large to draw
    CHECK(run("").exit_code == 2);              // a subcommand is required
}
