#include "triwell/cli/table.hpp"

#include <charconv>
#include <cmath>
#include "json.hpp"
#include <ostream>

namespace triwell::cli {

namespace {

nlohmann::ordered_json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
        }
        return v;
      },
      cell);
}

}  // namespace

std::string version() {
#ifdef TRIWELL_VERSION
  return TRIWELL_VERSION;
#else
  return "0.0.0";
#endif
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string format_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      cell);
}

void write_csv(std::ostream& out, const Document& doc) {
  out << "# triwell v" << version();
  for (const Entry& e : doc.config) out << ' ' << e.key << '=' << format_cell(e.value);
  out << '\n';
  for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "," : "") << doc.columns[i];
  out << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
  if (!doc.summary.empty()) {
    out << "# summary";
    for (const Entry& e : doc.summary) out << ' ' << e.key << '=' << format_cell(e.value);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Document& doc) {
  nlohmann::ordered_json root;
  root["triwell"] = version();
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const Entry& e : doc.config) config[e.key] = to_json(e.value);
  root["config"] = config;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json item = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) item[doc.columns[i]] = to_json(row[i]);
    results.push_back(item);
  }
  root["results"] = results;
  if (!doc.summary.empty()) {
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const Entry& e : doc.summary) summary[e.key] = to_json(e.value);
    root["summary"] = summary;
  }
  out << root.dump(2) << '\n';
}

}  // namespace triwell::cli
