#include "xwell/curve_table.hpp"
#include "xwell/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>

namespace xwell {

void CurveTable::add_row(std::initializer_list<double> values)
{
    rows.emplace_back(values);
}

void CurveTable::check() const
{
    for (const auto& row : rows)
        if (row.size() != columns.size())
            throw Error("CurveTable row arity mismatch");
}

TableFormat parse_format(const std::string& name)
{
    if (name == "csv")
        return TableFormat::csv;
    if (name == "json")
        return TableFormat::json;
    throw Error("unknown format '" + name + "' (expected csv or json)");
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void emit_csv(const CurveTable& t, std::ostream& os)
{
    bool first = true;
    for (const auto& c : t.columns) {
        if (!first)
            os << ',';
        first = false;
        os << c.name;
        if (!c.unit.empty())
            os << '[' << c.unit << ']';
    }
    os << '\n';
    for (const auto& row : t.rows) {
        first = true;
        for (double v : row) {
            if (!first)
                os << ',';
            first = false;
            os << format_double(v);
        }
        os << '\n';
    }
}

void emit_json(const CurveTable& t, std::ostream& os)
{
    nlohmann::ordered_json j;
    j["schema_version"] = kCurveTableSchemaVersion;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.metadata)
        meta[k] = v;
    j["metadata"] = meta;
    auto cols = nlohmann::ordered_json::array();
    for (const auto& c : t.columns)
        cols.push_back({{"name", c.name}, {"unit", c.unit}});
    j["columns"] = cols;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (double v : row)
            r.push_back(v); // nlohmann serializes doubles round-trip exact
        rows.push_back(std::move(r));
    }
    j["rows"] = rows;
    os << j.dump(2) << '\n';
}

} // namespace

void emit(const CurveTable& table, TableFormat format, std::ostream& os)
{
    table.check();
    if (format == TableFormat::csv)
        emit_csv(table, os);
    else
        emit_json(table, os);
}

void emit_file(const CurveTable& table, TableFormat format, const std::string& path)
{
    std::ofstream os(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!os)
        throw IoError("cannot open '" + path + "' for writing");
    emit(table, format, os);
    os.flush();
    if (!os)
        throw IoError("write failed for '" + path + "'");
}

} // namespace xwell
