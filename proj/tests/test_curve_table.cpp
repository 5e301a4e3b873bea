#include "doctest.h"

#include "xwell/curve_table.hpp"
#include "xwell/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

using namespace xwell;

namespace {

CurveTable sample_table()
{
    CurveTable t;
    t.columns = {{"E", "energy"}, {"R", ""}, {"T", ""}};
    t.add_row({1.0 / 3.0, 0.1, 0.9});
    t.add_row({-0.0, 1e-300, 6.02214076e23});
    t.add_row({2.5, 0.5, 0.5});
    t.metadata["u0"] = "5";
    t.metadata["a"] = "1";
    return t;
}

} // namespace

TEST_CASE("format parsing")
{
    CHECK(parse_format("csv") == TableFormat::csv);
    CHECK(parse_format("json") == TableFormat::json);
    CHECK_THROWS_AS((void)parse_format("xml"), Error);
}

TEST_CASE("empty table emits a header-only CSV")
{
    CurveTable t;
    t.columns = {{"x", "length"}, {"psi", ""}};
    std::ostringstream os;
    emit(t, TableFormat::csv, os);
    CHECK(os.str() == "x[length],psi\n");
}

TEST_CASE("CSV round-trips doubles exactly")
{
    CurveTable t = sample_table();
    std::ostringstream os;
    emit(t, TableFormat::csv, os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "E[energy],R,T");
    for (const auto& row : t.rows) {
        REQUIRE(std::getline(is, line));
        const char* p = line.c_str();
        for (double expected : row) {
            char* end = nullptr;
            double got = std::strtod(p, &end);
            CHECK(got == expected);
            p = (*end == ',') ? end + 1 : end;
        }
    }
}

TEST_CASE("JSON emission carries schema, metadata, and exact values")
{
    CurveTable t = sample_table();
    std::ostringstream os;
    emit(t, TableFormat::json, os);
    auto j = nlohmann::json::parse(os.str());
    CHECK(j.at("schema_version") == kCurveTableSchemaVersion);
    CHECK(j.at("metadata").at("u0") == "5");
    CHECK(j.at("columns").size() == 3);
    CHECK(j.at("columns")[0].at("name") == "E");
    CHECK(j.at("columns")[0].at("unit") == "energy");
    REQUIRE(j.at("rows").size() == t.rows.size());
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (size_t c = 0; c < t.rows[i].size(); ++c)
            CHECK(j.at("rows")[i][c].get<double>() == t.rows[i][c]);
}

TEST_CASE("emission is deterministic")
{
    CurveTable t = sample_table();
    std::ostringstream a, b;
    emit(t, TableFormat::csv, a);
    emit(t, TableFormat::csv, b);
    CHECK(a.str() == b.str());
    std::ostringstream c, d;
    emit(t, TableFormat::json, c);
    emit(t, TableFormat::json, d);
    CHECK(c.str() == d.str());
}

TEST_CASE("arity mismatch is rejected")
{
    CurveTable t;
    t.columns = {{"x", ""}, {"y", ""}};
    t.add_row({1.0});
    std::ostringstream os;
    CHECK_THROWS_AS(emit(t, TableFormat::csv, os), Error);
}

TEST_CASE("unwritable path raises an IO error")
{
    CurveTable t = sample_table();
    CHECK_THROWS_AS(emit_file(t, TableFormat::csv, "/nonexistent-dir/out.csv"), IoError);
}

TEST_CASE("17 significant digits round-trip")
{
    for (double v : {1.0 / 3.0, 0.1, 1e-300, -2.718281828459045, 6.02214076e23}) {
        std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}
