// table.hpp — result tables with CSV (RFC-4180) and JSON serialization

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace bigeo::sweep {

// Empty cells appear when a row failed a regime check.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::size_t column_index(const std::string& name) const; // throws if absent
};

// Shortest round-trip decimal form ('.' separator, no locale).
std::string format_double(double v);

// RFC-4180 quoting: fields with commas, quotes or newlines are quoted, inner
// quotes doubled. Numbers use format_double.
void write_csv(const Table& table, std::ostream& os);

// {"schema_version": 1, "columns": [...], "rows": [[...], ...]}; empty cells
// become null.
void write_json(const Table& table, std::ostream& os);

} // namespace bigeo::sweep
