#include "bigeo/table.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <system_error>

#include "bigeo/errors.hpp"

namespace bigeo::sweep {

std::size_t Table::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw error("Table: no column named '" + name + "'");
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc{}) throw error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

namespace {

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\r\n") != std::string::npos;
}

void write_csv_field(const std::string& s, std::ostream& os) {
    if (!needs_quoting(s)) {
        os << s;
        return;
    }
    os << '"';
    for (char c : s) {
        if (c == '"') os << '"';
        os << c;
    }
    os << '"';
}

void write_json_string(const std::string& s, std::ostream& os) {
    os << '"';
    for (char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\r': os << "\\r"; break;
            case '\t': os << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

} // namespace

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        write_csv_field(table.columns[i], os);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            if (std::holds_alternative<double>(row[i]))
                os << format_double(std::get<double>(row[i]));
            else if (std::holds_alternative<std::string>(row[i]))
                write_csv_field(std::get<std::string>(row[i]), os);
        }
        os << '\n';
    }
}

void write_json(const Table& table, std::ostream& os) {
    os << "{\"schema_version\":1,\"columns\":[";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        write_json_string(table.columns[i], os);
    }
    os << "],\"rows\":[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (r) os << ',';
        os << '[';
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            if (std::holds_alternative<double>(row[i]))
                os << format_double(std::get<double>(row[i]));
            else if (std::holds_alternative<std::string>(row[i]))
                write_json_string(std::get<std::string>(row[i]), os);
            else
                os << "null";
        }
        os << ']';
    }
    os << "]}\n";
}

} // namespace bigeo::sweep
