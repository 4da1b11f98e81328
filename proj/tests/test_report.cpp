#include <doctest.h>

#include <fstream>

#include "lie4/report.hpp"

using namespace lie4;

namespace {

Json load_schema() {
    std::ifstream is(std::string(LIE4_SOURCE_DIR) + "/fixtures/report.schema.json");
    REQUIRE(is.good());
    return Json::parse(is);
}

} // namespace

TEST_CASE("reports validate against the committed schema") {
    Json schema = load_schema();
    Json r = make_report("component");
    r["inputs"]["component"] = 3;
    r["inputs"]["seed"] = 0;
    r["outputs"]["profile"] = {{"2", 26}, {"3", 40}};
    CHECK(validate_against_schema(r, schema).empty());
}

TEST_CASE("schema rejects malformed reports") {
    Json schema = load_schema();

    Json missing = Json::object();
    missing["command"] = "x";
    CHECK(!validate_against_schema(missing, schema).empty());

    Json bad_status = make_report("x");
    bad_status["status"] = "whatever";
    CHECK(!validate_against_schema(bad_status, schema).empty());

    Json bad_type = make_report("x");
    bad_type["inputs"] = 7;
    CHECK(!validate_against_schema(bad_type, schema).empty());
}
