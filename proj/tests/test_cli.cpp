// Drives the built CLI binary end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "lie4/report.hpp"

namespace fs = std::filesystem;
using lie4::Json;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(LIE4_CLI_PATH) + " " + args;
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("lie4_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("quadrics: fixtures match the committed files byte for byte") {
    TempDir tmp;
    const int rc = run("quadrics --check-grading --fixtures " + tmp.path.string() +
                       " --json " + (tmp.path / "q.json").string() + " > /dev/null");
    CHECK(rc == 0);

    const fs::path committed = fs::path(LIE4_SOURCE_DIR) / "fixtures" / "theta";
    int compared = 0;
    for (const auto& entry : fs::directory_iterator(committed)) {
        const fs::path mine = tmp.path / "theta" / entry.path().filename();
        REQUIRE(fs::exists(mine));
        CHECK(slurp(mine) == slurp(entry.path()));
        ++compared;
    }
    CHECK(compared == 16);

    Json report = Json::parse(slurp(tmp.path / "q.json"));
    std::ifstream schema_file(std::string(LIE4_SOURCE_DIR) +
                              "/fixtures/report.schema.json");
    Json schema = Json::parse(schema_file);
    CHECK(lie4::validate_against_schema(report, schema).empty());
}

TEST_CASE("fixtures subcommand reproduces every committed fixture") {
    TempDir tmp;
    const int rc = run("fixtures --out " + tmp.path.string() + " > /dev/null");
    CHECK(rc == 0);
    const fs::path committed = fs::path(LIE4_SOURCE_DIR) / "fixtures";
    int compared = 0;
    for (const auto& sub : {"theta", "traces", "hwv", "c2_chart"}) {
        for (const auto& entry : fs::directory_iterator(committed / sub)) {
            const fs::path mine = tmp.path / sub / entry.path().filename();
            REQUIRE(fs::exists(mine));
            CHECK(slurp(mine) == slurp(entry.path()));
            ++compared;
        }
    }
    CHECK(compared == 16 + 4 + 6 + 24);
}

TEST_CASE("component reports are deterministic and schema-valid") {
    TempDir tmp;
    const std::string j1 = (tmp.path / "r1.json").string();
    const std::string j2 = (tmp.path / "r2.json").string();
    CHECK(run("component 3 --max-degree 2 --seed 1 --json " + j1 + " > /dev/null") == 0);
    CHECK(run("component 3 --max-degree 2 --seed 1 --json " + j2 + " > /dev/null") == 0);

    Json a = Json::parse(slurp(j1)), b = Json::parse(slurp(j2));
    a["outputs"].erase("elapsed_seconds");
    b["outputs"].erase("elapsed_seconds");
    CHECK(a == b);
    CHECK(a["outputs"]["profile"]["2"] == 26);

    std::ifstream schema_file(std::string(LIE4_SOURCE_DIR) +
                              "/fixtures/report.schema.json");
    Json schema = Json::parse(schema_file);
    CHECK(lie4::validate_against_schema(Json::parse(slurp(j1)), schema).empty());
}

TEST_CASE("bad arguments exit with code 3") {
    CHECK(run("component 9 2> /dev/null") == 3);
    CHECK(run("2> /dev/null") == 3);
}

TEST_CASE("budget exceeded exits with code 2") {
    CHECK(run("component 1 --max-degree 2 --hilbert --budget 0.0001 2> /dev/null "
              "> /dev/null") == 2);
}
