#pragma once

#include <string>

#include "cli/table.hpp"

namespace lep::cli {

// Everything a subcommand run needs. Values are quoted in units of gamma
// (amplitudes, detunings, frequency offsets) or 1/gamma (times, delays);
// gamma itself only sets the internal absolute scale.
struct RunOptions {
  std::string subcommand;
  double gamma = 1.0;
  double delta = 0.0;
  double omega = 0.0;
  double theta = 0.0;
  std::string method = "both";  // analytic | numeric | both
  std::string grid;             // axis spec; meaning depends on subcommand
  bool raw_lambda = false;      // eigenvalues: emit lambda instead of i*lambda
  double tau_max = 40.0;        // spectrum: correlator truncation, 1/gamma
  std::string output = "csv";   // csv | json
  std::string out_path = "-";
  unsigned jobs = 0;            // 0: resolve from environment/hardware
};

// Builds the result table for one run. Throws lep::InvalidParams and
// friends on bad configuration, the numeric error types on solver trouble.
Table build_table(const RunOptions& opts);

// Serializes per opts.output and writes to opts.out_path ("-" = stdout).
void write_table(const Table& t, const RunOptions& opts);

// Worker count: LIOUVILLE_EP_JOBS overrides the flag, which overrides the
// hardware count.
unsigned resolve_jobs(unsigned flag_value);

}  // namespace lep::cli
