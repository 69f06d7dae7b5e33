#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "plumb/graph.hpp"
#include "plumb/graph_io.hpp"

// Drives the installed binary through a shell. The harness sets PLUMB_CLI
// to the built executable; "$CLI" in a command expands to it.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* env = std::getenv("PLUMB_CLI");
    return env ? env : "./tools/plumb";
}

RunResult run_shell(std::string command) {
    const std::string cli = "'" + cli_path() + "'";
    for (std::string::size_type pos; (pos = command.find("$CLI")) != std::string::npos;) {
        command.replace(pos, 4, cli);
    }
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& contents) {
    std::string path = "cli_test_" + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("family pipes into analyze") {
    RunResult r = run_shell("$CLI family yp --p 2 | $CLI analyze -");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("etnyre_counterexample") != std::string::npos);
    CHECK(r.output.find("milnor_fillable") != std::string::npos);

    RunResult json = run_shell("$CLI family yp --p 2 | $CLI analyze - --format json");
    CHECK(json.exit_code == 0);
    auto doc = nlohmann::json::parse(json.output);
    CHECK(doc["flags"]["etnyre_counterexample"]["value"] == "true");
}

TEST_CASE("the JSON graph form pipes just as well") {
    RunResult r = run_shell("$CLI family yp --p 2 --format json | $CLI analyze - --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["flags"]["etnyre_counterexample"]["value"] == "true");
}

TEST_CASE("cycle prints the Y_3 tuple in canonical order") {
    std::string path = write_temp("y3.graph", plumb::emit_graph(plumb::make_yp(3), plumb::GraphFormat::dsl));
    RunResult r = run_shell("$CLI cycle " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 2 3 3 2 1 1\n");
    std::remove(path.c_str());
}

TEST_CASE("analyze refuses a disconnected file with exit 2") {
    std::string path = write_temp("disconnected.graph",
                                  "vertex a genus=0 euler=-2\nvertex b genus=0 euler=-2\n");
    RunResult r = run_shell("$CLI analyze " + path + " 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("disconnected") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("parse errors exit 2 with a positioned diagnostic") {
    std::string path = write_temp("bad.graph", "vertex a genus=0 euler=-2\nedge a b\n");
    RunResult r = run_shell("$CLI analyze " + path + " 2>&1 >/dev/null");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("dangling-endpoint") != std::string::npos);
    CHECK(r.output.find("2:8") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cycle on an indefinite form exits 3") {
    std::string path = write_temp("indefinite.graph", "vertex a genus=0 euler=0\n");
    RunResult r = run_shell("$CLI cycle " + path + " 2>/dev/null");
    CHECK(r.exit_code == 3);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_shell("$CLI no-such-command 2>/dev/null").exit_code == 1);
    CHECK(run_shell("$CLI family nope --p 2 2>/dev/null").exit_code == 1);
    CHECK(run_shell("$CLI family yp --p 2 --emit --analyze 2>/dev/null").exit_code == 1);
    CHECK(run_shell("$CLI enumerate --max-vertices 3 --predicate bogus 2>/dev/null").exit_code == 1);
}

TEST_CASE("every subcommand emits machine-parseable JSON under --format json") {
    std::string path = write_temp("y2.graph", plumb::emit_graph(plumb::make_yp(2), plumb::GraphFormat::dsl));
    const std::vector<std::string> commands = {
        "$CLI analyze " + path + " --format json",
        "$CLI family yp --p 4 --format json",
        "$CLI family yp --p 4 --analyze --format json",
        "$CLI matrix " + path + " --format json",
        "$CLI cycle " + path + " --format json",
        "$CLI seifert " + path + " --format json",
        "$CLI enumerate --max-vertices 4 --euler-min -2 --euler-max -1 "
        "--predicate any --format json",
    };
    for (const std::string& cmd : commands) {
        RunResult r = run_shell(cmd);
        CHECK(r.exit_code == 0);
        CHECK_NOTHROW(std::ignore = nlohmann::json::parse(r.output));
    }
    std::remove(path.c_str());
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::vector<std::string> commands = {
        "$CLI family yp --p 5 --analyze --format json",
        "$CLI family yp --p 5 --analyze",
        "$CLI enumerate --max-vertices 5 --euler-min -3 --euler-max -1 --predicate rational",
    };
    for (const std::string& cmd : commands) {
        RunResult a = run_shell(cmd);
        RunResult b = run_shell(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("matrix subcommand prints integer rows") {
    std::string path = write_temp("chain.graph",
                                  "vertex a genus=0 euler=-2\nvertex b genus=0 euler=-2\nedge a b\n");
    RunResult r = run_shell("$CLI matrix " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-2 1\n1 -2\n");
    std::remove(path.c_str());
}

TEST_CASE("seifert subcommand reports the normalized invariants") {
    RunResult r = run_shell("$CLI family yp --p 2 | $CLI seifert -");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "Y(-2; 1/3, 2/3, 2/3)\n");

    // A multi-node input violates the shape precondition: exit 3.
    std::string path = write_temp(
        "twonode.graph",
        "vertex a genus=0 euler=-3\nvertex l1 genus=0 euler=-2\nvertex l2 genus=0 euler=-2\n"
        "vertex c genus=0 euler=-2\nvertex b genus=0 euler=-3\nvertex m1 genus=0 euler=-2\n"
        "vertex m2 genus=0 euler=-2\nedge a l1\nedge a l2\nedge a c\nedge c b\nedge b m1\nedge b m2\n");
    CHECK(run_shell("$CLI seifert " + path + " 2>/dev/null").exit_code == 3);
    std::remove(path.c_str());
}

TEST_CASE("enumerate lists canonical encodings and finds Y_2") {
    RunResult r = run_shell(
        "$CLI enumerate --max-vertices 6 --euler-min -3 --euler-max -1 "
        "--predicate etnyre_counterexample");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("star(-2;[-3]|[-2,-2]|[-2,-2])") != std::string::npos);
}

TEST_CASE("family --emit is the explicit form of the default") {
    RunResult dflt = run_shell("$CLI family yp --p 3");
    RunResult emit = run_shell("$CLI family yp --p 3 --emit");
    CHECK(dflt.exit_code == 0);
    CHECK(dflt.output == emit.output);
    CHECK(dflt.output.find("vertex e1 genus=0 euler=-2") != std::string::npos);
}

} // TEST_SUITE
