#include "cli/table.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>
#include <unistd.h>

namespace qcat::cli {

std::size_t Table::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column " + name);
  return static_cast<std::size_t>(it - columns.begin());
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  if (text == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + text + "'");
}

std::string format_number(double v) { return fmt::format("{:.17g}", v); }

std::string format_cell(const Cell& cell) {
  if (const double* v = std::get_if<double>(&cell)) return format_number(*v);
  return std::get<std::string>(cell);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_cell(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (const double* v = std::get_if<double>(&row[c])) {
        obj[table.columns[c]] = *v;
      } else {
        obj[table.columns[c]] = {{"reason", std::get<std::string>(row[c])}};
      }
    }
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string to_text(const Table& table) {
  std::vector<std::size_t> width(table.columns.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = table.columns[c].size();
  for (const auto& row : table.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(format_cell(row[c]));
      width[c] = std::max(width[c], line.back().size());
    }
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out += fmt::format("{:>{}}", line[c], width[c]);
      out += c + 1 < line.size() ? "  " : "\n";
    }
  };
  emit(table.columns);
  for (const auto& line : cells) emit(line);
  return out;
}

std::string render(const Table& table, Format format) {
  switch (format) {
    case Format::csv:
      return to_csv(table);
    case Format::json:
      return to_json(table);
    case Format::text:
      return to_text(table);
  }
  return {};
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += fmt::format(".tmp.{}", ::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot rename onto " + path.string());
  }
}

}  // namespace qcat::cli
