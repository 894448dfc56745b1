#include "scarf2/table_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace scarf2::io {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::runtime_error("Table::add_row: arity mismatch");
    rows.push_back(std::move(row));
}

void Table::add_complex_columns(std::vector<std::string>& columns, const std::string& name) {
    columns.push_back(name + "_re");
    columns.push_back(name + "_im");
}

void Table::add_complex_cells(std::vector<Cell>& row, Complex z) {
    row.emplace_back(z.real());
    row.emplace_back(z.imag());
}

std::string format_cell(const Cell& cell) {
    if (std::holds_alternative<std::int64_t>(cell))
        return std::to_string(std::get<std::int64_t>(cell));
    if (std::holds_alternative<double>(cell)) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(cell));
        return buf;
    }
    return std::get<std::string>(cell);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i)
            out += ',';
        out += csv_escape(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += csv_escape(format_cell(row[i]));
        }
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const Table& table, nlohmann::json meta) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const std::string& key = table.columns[i];
            if (std::holds_alternative<std::int64_t>(row[i]))
                obj[key] = std::get<std::int64_t>(row[i]);
            else if (std::holds_alternative<double>(row[i]))
                obj[key] = std::get<double>(row[i]);
            else
                obj[key] = std::get<std::string>(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return nlohmann::json{{"meta", std::move(meta)}, {"rows", std::move(rows)}};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    int line = 1;
    auto end_field = [&] {
        row.push_back(field);
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(row);
        row.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
                if (c == '\n')
                    ++line;
            }
        } else if (c == '"') {
            if (!field.empty())
                throw std::runtime_error("line " + std::to_string(line) +
                                         ": stray quote inside unquoted field");
            quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            end_row();
            ++line;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted)
        throw std::runtime_error("line " + std::to_string(line) + ": unterminated quote");
    if (!field.empty() || !row.empty())
        end_row();
    return rows;
}

} // namespace scarf2::io
