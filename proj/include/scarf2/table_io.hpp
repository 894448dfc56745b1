#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "scarf2/complex_utils.hpp"

namespace scarf2::io {

/// One table cell; doubles serialize with 17 significant digits in CSV and
/// natively in JSON, so either format round-trips exactly.
using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Appends a row; the arity must match `columns`.
    void add_row(std::vector<Cell> row);

    /// Two columns `<name>_re`, `<name>_im` hold a complex value.
    static void add_complex_columns(std::vector<std::string>& columns, const std::string& name);
    static void add_complex_cells(std::vector<Cell>& row, Complex z);
};

std::string format_cell(const Cell& cell);

/// Header row, comma-separated, UTF-8, LF line endings. String cells
/// containing separators are quoted.
std::string to_csv(const Table& table);

/// {"meta": {...}, "rows": [{column: value, ...}, ...]}
nlohmann::json to_json(const Table& table, nlohmann::json meta);

/// Parses CSV produced by to_csv back into string cells (numeric typing is
/// up to the caller). Throws std::runtime_error with a line number message
/// on malformed input.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

} // namespace scarf2::io
