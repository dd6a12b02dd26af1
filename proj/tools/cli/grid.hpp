#pragma once

#include <string>
#include <vector>

namespace lep::cli {

// Axis specification "[lin:|log:]min:max:count". Log axes get tau = 0
// prepended when materialized with `with_zero`, since a log grid cannot
// reach zero delay itself.
struct AxisSpec {
  enum class Scale { Linear, Log };
  Scale scale = Scale::Linear;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 1;
};

AxisSpec parse_axis(const std::string& text);

std::vector<double> materialize(const AxisSpec& spec, bool with_zero = false);

}  // namespace lep::cli
