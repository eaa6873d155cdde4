#pragma once

// Tabular reports: CSV with '#' header lines, or JSON {meta, rows}.
// Output depends only on its inputs, so equal configurations give equal bytes.

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace deformlab::report {

/// monostate is an absent value: empty CSV field, JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row)
  {
    if (row.size() != columns.size()) throw std::invalid_argument("Table::add: row width does not match the header");
    rows.push_back(std::move(row));
  }
};

/// Ordered key/value header block.
using Meta = std::vector<std::pair<std::string, std::string>>;

enum class Format { csv, json };

inline std::string format_double(double v)
{
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_field(const Cell& c)
{
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& s) const
    {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + "\"";
    }
  };
  return std::visit(Visitor{}, c);
}

inline nlohmann::ordered_json json_value(const Cell& c)
{
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const
    {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

inline std::string render_csv(const Meta& meta, const Table& table)
{
  std::ostringstream out;
  for (const auto& [key, value] : meta) out << "# " << key << ": " << value << '\n';
  for (std::size_t j = 0; j < table.columns.size(); ++j) out << (j ? "," : "") << table.columns[j];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_field(row[j]);
    out << '\n';
  }
  return out.str();
}

inline std::string render_json(const Meta& meta, const Table& table)
{
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta) doc["meta"][key] = value;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < row.size(); ++j) obj[table.columns[j]] = json_value(row[j]);
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

inline std::string render(const Meta& meta, const Table& table, Format format)
{
  return format == Format::csv ? render_csv(meta, table) : render_json(meta, table);
}

/// Writes the rendered report to `path`, or to `fallback` when path is empty.
inline void emit_report(const Meta& meta, const Table& table, Format format, const std::string& path, std::ostream& fallback)
{
  if (table.rows.empty()) throw std::invalid_argument("emit_report: no rows to emit");
  const std::string text = render(meta, table, format);
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("emit_report: cannot open " + path + " for writing");
  file << text;
  if (!file) throw std::runtime_error("emit_report: write to " + path + " failed");
}

}  // namespace deformlab::report
