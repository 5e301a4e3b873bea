#ifndef XWELL_CURVE_TABLE_HPP
#define XWELL_CURVE_TABLE_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace xwell {

inline constexpr const char* kCurveTableSchemaVersion = "1";

// Ordered numeric samples with column metadata, the carrier for every
// CSV/JSON emission. Output is deterministic: fixed column order, sorted
// metadata keys, 17 significant digits, LF line endings.
struct CurveTable {
    struct Column {
        std::string name;
        std::string unit;
    };

    std::vector<Column> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, std::string> metadata; // schema_version added on emit

    void add_row(std::initializer_list<double> values);
    void check() const; // all rows have column arity
};

enum class TableFormat { csv, json };

TableFormat parse_format(const std::string& name);

void emit(const CurveTable& table, TableFormat format, std::ostream& os);
void emit_file(const CurveTable& table, TableFormat format, const std::string& path);

// 17-significant-digit, locale-independent rendering (round-trips exactly).
std::string format_double(double v);

} // namespace xwell

#endif
