#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lep::cli {

// One emitted result table. Cells are optional so sparse columns (the
// second exceptional-point root and the like) stay empty instead of
// carrying sentinels.
struct Table {
  std::string params_json;  // full run configuration, one JSON object
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
  std::vector<std::pair<std::string, double>> summary;
};

// Deterministic 12-significant-digit formatting; negative zero collapses
// to "0" so reruns are byte-identical.
std::string format_cell(double v);

std::string to_csv(const Table& t);

// Doubles are serialized in shortest round-trip form, so parsing the
// output recovers them bit-exactly.
std::string to_json(const Table& t);
Table table_from_json(const std::string& text);

}  // namespace lep::cli
