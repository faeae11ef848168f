#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace hellmann::cli {

enum class Format { Csv, Json };

// Empty cells print as nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

/// CSV: header row then one line per row, doubles at 12 significant digits.
/// JSON: {"meta": {...}, "rows": [{column: value, ...}, ...]} with shortest
/// round-trip doubles.
void write_table(std::ostream& os, Table const& table, Format format);

std::string format_double(double x);

} // namespace hellmann::cli
