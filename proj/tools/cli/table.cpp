#include "cli/table.hpp"

#include <cstdio>

#include "json.hpp"

namespace lep::cli {

std::string format_cell(double v) {
  if (v == 0.0) v = 0.0;  // flush -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out = "# params: " + t.params_json + "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (row[c]) out += format_cell(*row[c]);
    }
    out += '\n';
  }
  for (const auto& [name, value] : t.summary) {
    out += "# " + name + ": " + format_cell(value) + "\n";
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::json j;
  j["params"] = nlohmann::json::parse(t.params_json);
  j["columns"] = t.columns;
  auto rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    auto jr = nlohmann::json::array();
    for (const auto& cell : row) {
      if (cell) {
        jr.push_back(*cell);
      } else {
        jr.push_back(nullptr);
      }
    }
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  auto summary = nlohmann::json::object();
  for (const auto& [name, value] : t.summary) summary[name] = value;
  j["summary"] = std::move(summary);
  return j.dump() + "\n";
}

Table table_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Table t;
  t.params_json = j.at("params").dump();
  t.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& jr : j.at("rows")) {
    std::vector<std::optional<double>> row;
    for (const auto& cell : jr) {
      if (cell.is_null()) {
        row.emplace_back(std::nullopt);
      } else {
        row.emplace_back(cell.get<double>());
      }
    }
    t.rows.push_back(std::move(row));
  }
  for (const auto& [name, value] : j.at("summary").items()) {
    t.summary.emplace_back(name, value.get<double>());
  }
  return t;
}

}  // namespace lep::cli
