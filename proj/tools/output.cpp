#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace hellmann::cli {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string csv_field(std::string const& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

struct CsvCell {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double x) const { return std::isfinite(x) ? format_double(x) : "nan"; }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(std::string const& s) const { return csv_field(s); }
};

struct JsonCell {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double x) const {
        if (!std::isfinite(x)) return nullptr;
        return x;
    }
    nlohmann::ordered_json operator()(long long x) const { return x; }
    nlohmann::ordered_json operator()(std::string const& s) const { return s; }
};

} // namespace

void write_table(std::ostream& os, Table const& table, Format format) {
    if (format == Format::Csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            os << (i ? "," : "") << table.columns[i];
        }
        os << '\n';
        for (auto const& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
            }
            os << '\n';
        }
        return;
    }
    nlohmann::ordered_json doc;
    doc["meta"] = table.meta;
    doc["rows"] = nlohmann::ordered_json::array();
    for (auto const& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[table.columns[i]] = std::visit(JsonCell{}, row[i]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
}

} // namespace hellmann::cli
