#include "cli/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "lep/model_core.hpp"

namespace lep::cli {

namespace {

double parse_double(const std::string& s) {
  if (s.empty()) throw InvalidParams("empty number in grid spec");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v))
    throw InvalidParams("bad number in grid spec: '" + s + "'");
  return v;
}

}  // namespace

AxisSpec parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(':', start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }

  AxisSpec spec;
  std::size_t i = 0;
  if (!parts.empty() && (parts[0] == "lin" || parts[0] == "log")) {
    spec.scale = parts[0] == "log" ? AxisSpec::Scale::Log : AxisSpec::Scale::Linear;
    i = 1;
  }
  if (parts.size() - i != 3)
    throw InvalidParams("grid spec must be [lin:|log:]min:max:count, got '" + text + "'");
  spec.lo = parse_double(parts[i]);
  spec.hi = parse_double(parts[i + 1]);
  const double count = parse_double(parts[i + 2]);
  if (!(count >= 1.0) || count != std::floor(count) || count > 1e7)
    throw InvalidParams("grid count must be a positive integer");
  spec.count = static_cast<std::size_t>(count);
  if (!(spec.lo <= spec.hi)) throw InvalidParams("grid needs min <= max");
  if (spec.count == 1 && spec.lo != spec.hi)
    throw InvalidParams("grid with count 1 needs min == max");
  if (spec.scale == AxisSpec::Scale::Log && !(spec.lo > 0.0))
    throw InvalidParams("log grid needs min > 0");
  return spec;
}

std::vector<double> materialize(const AxisSpec& spec, bool with_zero) {
  std::vector<double> grid;
  grid.reserve(spec.count + 1);
  if (with_zero && spec.scale == AxisSpec::Scale::Log) grid.push_back(0.0);
  if (spec.count == 1) {
    grid.push_back(spec.lo);
    return grid;
  }
  const double n = static_cast<double>(spec.count - 1);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const double f = static_cast<double>(i) / n;
    if (spec.scale == AxisSpec::Scale::Linear) {
      grid.push_back(spec.lo + (spec.hi - spec.lo) * f);
    } else {
      grid.push_back(spec.lo * std::exp(std::log(spec.hi / spec.lo) * f));
    }
  }
  grid.back() = spec.hi;  // exact endpoint
  return grid;
}

}  // namespace lep::cli
