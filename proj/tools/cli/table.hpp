#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace qcat::cli {

/// A numeric value, or the reason code of a point that could not be evaluated.
using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::size_t column_index(const std::string& name) const;  // throws std::out_of_range
};

enum class Format { csv, json, text };

Format parse_format(const std::string& text);

/// 17 significant digits, so every value round-trips.
std::string format_number(double v);
std::string format_cell(const Cell& cell);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
std::string to_text(const Table& table);
std::string render(const Table& table, Format format);

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace qcat::cli
