#pragma once

// Output documents for the command-line front end.
//
// CSV layout:
//   # triwell v<version> key=value key=value ...     (config echo)
//   column,column,...
//   row...
//   # summary key=value ...                           (reports only)
// JSON layout: {"triwell": version, "config": {...}, "results": [{...}],
// "summary": {...}} with keys in the same order as the CSV.
// Doubles are written in shortest round-trip form in both.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace triwell::cli {

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Entry {
  std::string key;
  Cell value;
};

struct Document {
  std::vector<Entry> config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<Entry> summary;
};

std::string version();

/// Shortest decimal string that parses back to the same double.
std::string format_number(double value);
std::string format_cell(const Cell& cell);

void write_csv(std::ostream& out, const Document& doc);
void write_json(std::ostream& out, const Document& doc);

}  // namespace triwell::cli
