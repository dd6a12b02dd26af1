#include "cli/run.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <thread>

#include "cli/grid.hpp"
#include "json.hpp"
#include "lep/lep.hpp"

namespace lep::cli {

namespace {

AtomParams make_params(const RunOptions& o) {
  return AtomParams(o.delta * o.gamma, o.omega * o.gamma, o.gamma, o.theta);
}

std::string params_echo(const RunOptions& o, const std::string& default_grid) {
  nlohmann::json j;
  j["subcommand"] = o.subcommand;
  j["gamma"] = o.gamma;
  j["theta"] = o.theta;
  j["method"] = o.method;
  j["output"] = o.output;
  j["grid"] = o.grid.empty() ? default_grid : o.grid;
  if (o.subcommand != "ep-locate") {
    j["delta"] = o.delta;
    j["omega"] = o.omega;
  }
  if (o.subcommand == "eigenvalues") j["raw_lambda"] = o.raw_lambda;
  if (o.subcommand == "spectrum") j["tau_max"] = o.tau_max;
  return j.dump();
}

std::vector<double> resolve_grid(const RunOptions& o, const std::string& fallback,
                                 bool with_zero = false) {
  const AxisSpec spec = parse_axis(o.grid.empty() ? fallback : o.grid);
  return materialize(spec, with_zero);
}

bool wants_analytic(const std::string& m) { return m == "analytic" || m == "both"; }
bool wants_numeric(const std::string& m) { return m == "numeric" || m == "both"; }

void validate_method(const RunOptions& o) {
  if (o.method != "analytic" && o.method != "numeric" && o.method != "both")
    throw InvalidParams("method must be analytic, numeric or both");
  const bool analytic_only_on_resonance = o.subcommand == "dynamics" ||
                                          o.subcommand == "g1" || o.subcommand == "g2" ||
                                          o.subcommand == "spectrum";
  if (analytic_only_on_resonance && o.delta != 0.0 && wants_analytic(o.method))
    throw InvalidParams("analytic " + o.subcommand +
                        " is defined on resonance only; use --method numeric");
}

// Minimum over pairings of the largest eigenvalue mismatch; robust against
// the sort order of near-degenerate pairs.
double matched_distance(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  std::array<int, 4> idx{0, 1, 2, 3};
  double best = 1e300;
  do {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[idx[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

Table run_ep_locate(const RunOptions& o) {
  const std::string default_grid = "0:0.12:121";
  const std::vector<double> grid = resolve_grid(o, default_grid);
  std::vector<double> scaled(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) scaled[i] = grid[i] * o.gamma;

  const auto results = ep_sweep(o.gamma, scaled, resolve_jobs(o.jobs));

  Table t;
  t.params_json = params_echo(o, default_grid);
  t.columns = {"delta", "n_ep", "omega_ep_1", "omega_ep_2", "critical_delta", "discriminant"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const EPResult& r = results[i];
    std::vector<std::optional<double>> row(6);
    row[0] = grid[i];
    row[1] = static_cast<double>(r.omegas.size());
    if (!r.omegas.empty()) row[2] = r.omegas[0] / o.gamma;
    if (r.omegas.size() > 1) row[3] = r.omegas[1] / o.gamma;
    row[4] = r.critical_delta / o.gamma;
    row[5] = r.discriminant;
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table run_eigenvalues(const RunOptions& o) {
  const std::string default_grid = format_cell(o.omega) + ":" + format_cell(o.omega) + ":1";
  const std::vector<double> grid = resolve_grid(o, default_grid);

  Table t;
  t.params_json = params_echo(o, default_grid);
  t.columns = {"omega"};
  const std::string re_name = o.raw_lambda ? "re_lambda" : "re_ilambda";
  const std::string im_name = o.raw_lambda ? "im_lambda" : "im_ilambda";
  if (wants_analytic(o.method)) {
    for (int k = 1; k <= 3; ++k) {
      t.columns.push_back(re_name + std::to_string(k));
      t.columns.push_back(im_name + std::to_string(k));
    }
  }
  if (wants_numeric(o.method)) {
    const std::string suffix = o.method == "both" ? "_num" : "";
    for (int k = 1; k <= 3; ++k) {
      t.columns.push_back(re_name + std::to_string(k) + suffix);
      t.columns.push_back(im_name + std::to_string(k) + suffix);
    }
  }

  t.rows.assign(grid.size(), {});
  std::vector<double> diffs(grid.size(), 0.0);
  parallel_for_indexed(grid.size(), resolve_jobs(o.jobs), [&](std::size_t i) {
    RunOptions point = o;
    point.omega = grid[i];
    const AtomParams p = make_params(point);
    std::vector<std::optional<double>> row;
    row.emplace_back(grid[i]);
    LiouvillianSpectrum analytic;
    LiouvillianSpectrum numeric;
    if (wants_analytic(o.method)) analytic = eigenvalues_analytic(p);
    if (wants_numeric(o.method)) numeric = eigenvalues_numeric(build_liouvillian(p));
    auto emit = [&](const LiouvillianSpectrum& s) {
      for (int k = 0; k < 3; ++k) {
        const Complex l = s.lambdas[k] / o.gamma;
        const Complex v = o.raw_lambda ? l : Complex(0.0, 1.0) * l;
        row.emplace_back(v.real());
        row.emplace_back(v.imag());
      }
    };
    if (wants_analytic(o.method)) emit(analytic);
    if (wants_numeric(o.method)) emit(numeric);
    if (o.method == "both")
      diffs[i] = matched_distance(analytic.lambdas, numeric.lambdas) / o.gamma;
    t.rows[i] = std::move(row);
  });
  if (o.method == "both")
    t.summary.emplace_back("max_abs_diff", *std::max_element(diffs.begin(), diffs.end()));
  return t;
}

Table run_steady_state(const RunOptions& o) {
  const std::string default_grid = format_cell(o.omega) + ":" + format_cell(o.omega) + ":1";
  const std::vector<double> grid = resolve_grid(o, default_grid);

  Table t;
  t.params_json = params_echo(o, default_grid);
  t.columns = {"omega"};
  const char* names[] = {"rho00", "rho11", "re_rho10", "im_rho10"};
  if (wants_analytic(o.method))
    for (const char* n : names) t.columns.push_back(n);
  if (wants_numeric(o.method)) {
    const std::string suffix = o.method == "both" ? "_num" : "";
    for (const char* n : names) t.columns.push_back(n + suffix);
  }

  t.rows.assign(grid.size(), {});
  std::vector<double> diffs(grid.size(), 0.0);
  parallel_for_indexed(grid.size(), resolve_jobs(o.jobs), [&](std::size_t i) {
    RunOptions point = o;
    point.omega = grid[i];
    const AtomParams p = make_params(point);
    std::vector<std::optional<double>> row;
    row.emplace_back(grid[i]);
    auto emit = [&](const DensityVector& rho) {
      row.emplace_back(rho.rho00.real());
      row.emplace_back(rho.rho11.real());
      row.emplace_back(rho.rho10.real());
      row.emplace_back(rho.rho10.imag());
    };
    DensityVector a;
    DensityVector n;
    if (wants_analytic(o.method)) {
      a = steady_state(p);
      emit(a);
    }
    if (wants_numeric(o.method)) {
      n = steady_state_numeric(build_liouvillian(p));
      emit(n);
    }
    if (o.method == "both") {
      diffs[i] = std::max({std::abs(a.rho00 - n.rho00), std::abs(a.rho11 - n.rho11),
                           std::abs(a.rho10 - n.rho10), std::abs(a.rho01 - n.rho01)});
    }
    t.rows[i] = std::move(row);
  });
  if (o.method == "both")
    t.summary.emplace_back("max_abs_diff", *std::max_element(diffs.begin(), diffs.end()));
  return t;
}

// Shared shape for dynamics / g1 / g2 trace tables.
Table run_trace(const RunOptions& o) {
  const bool is_dynamics = o.subcommand == "dynamics";
  const std::string default_grid = is_dynamics ? "lin:0:20:401" : "log:1e-3:20:400";
  std::vector<double> grid = resolve_grid(o, default_grid, /*with_zero=*/true);
  for (double& v : grid) v /= o.gamma;  // inputs quoted in units of 1/gamma

  const AtomParams p = make_params(o);
  CorrelatorTrace analytic;
  CorrelatorTrace numeric;
  if (wants_analytic(o.method)) {
    if (is_dynamics) {
      analytic = population_analytic(p, grid);
    } else if (o.subcommand == "g1") {
      analytic = g1(p, grid, TraceMethod::AnalyticPiecewise);
    } else {
      analytic = g2(p, grid, TraceMethod::AnalyticPiecewise);
    }
  }
  if (wants_numeric(o.method)) {
    if (is_dynamics) {
      numeric = evolve_moments(p, MomentVector{0.0, 0.0, 1.0}, grid);
    } else if (o.subcommand == "g1") {
      numeric = g1(p, grid, TraceMethod::NumericODE);
    } else {
      numeric = g2(p, grid, TraceMethod::NumericODE);
    }
  }

  Table t;
  t.params_json = params_echo(o, default_grid);
  const std::string axis = is_dynamics ? "t" : "tau";
  const std::string value = is_dynamics ? "population" : (o.subcommand == "g1" ? "g1" : "g2");
  t.columns = {axis};
  if (wants_analytic(o.method)) {
    if (o.subcommand == "g1") {
      t.columns.push_back("abs_g1");
    } else {
      t.columns.push_back(value);
    }
  }
  if (wants_numeric(o.method)) {
    const std::string suffix = o.method == "both" ? "_num" : "";
    if (o.subcommand == "g1") {
      t.columns.push_back("re_g1" + suffix);
      t.columns.push_back("im_g1" + suffix);
      t.columns.push_back("abs_g1" + suffix);
    } else {
      t.columns.push_back(value + suffix);
    }
  }

  double diff = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::optional<double>> row;
    row.emplace_back(grid[i] * o.gamma);
    if (wants_analytic(o.method)) row.emplace_back(analytic.values[i].real());
    if (wants_numeric(o.method)) {
      if (o.subcommand == "g1") {
        row.emplace_back(numeric.values[i].real());
        row.emplace_back(numeric.values[i].imag());
        row.emplace_back(std::abs(numeric.values[i]));
      } else {
        row.emplace_back(numeric.values[i].real());
      }
    }
    if (o.method == "both") {
      const double a = analytic.values[i].real();
      const double n =
          o.subcommand == "g1" ? std::abs(numeric.values[i]) : numeric.values[i].real();
      diff = std::max(diff, std::abs(a - n));
    }
    t.rows.push_back(std::move(row));
  }
  if (o.method == "both") t.summary.emplace_back("max_abs_diff", diff);
  return t;
}

Table run_spectrum(const RunOptions& o) {
  const std::string default_grid = "lin:-8:8:3201";
  std::vector<double> grid = resolve_grid(o, default_grid);
  for (double& v : grid) v *= o.gamma;

  const AtomParams p = make_params(o);
  SpectrumResult analytic;
  SpectrumResult numeric;
  if (wants_analytic(o.method)) analytic = spectrum_analytic(p, grid);
  if (wants_numeric(o.method)) {
    NumericSpectrumOptions nopt;
    nopt.tau_max = o.tau_max;
    numeric = spectrum_numeric(p, grid, nopt);
  }

  Table t;
  t.params_json = params_echo(o, default_grid);
  t.columns = {"omega_offset"};
  if (wants_analytic(o.method)) t.columns.push_back("s");
  if (wants_numeric(o.method)) t.columns.push_back(o.method == "both" ? "s_num" : "s");

  double diff = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::optional<double>> row;
    row.emplace_back(grid[i] / o.gamma);
    // lineshape density is per unit frequency: gamma units absorb one power
    if (wants_analytic(o.method)) row.emplace_back(analytic.inelastic[i] * o.gamma);
    if (wants_numeric(o.method)) row.emplace_back(numeric.inelastic[i] * o.gamma);
    if (o.method == "both")
      diff = std::max(diff, std::abs(analytic.inelastic[i] - numeric.inelastic[i]) * o.gamma);
    t.rows.push_back(std::move(row));
  }
  if (wants_analytic(o.method)) t.summary.emplace_back("elastic_weight", analytic.elastic_weight);
  if (wants_numeric(o.method)) {
    t.summary.emplace_back(o.method == "both" ? "elastic_weight_num" : "elastic_weight",
                           numeric.elastic_weight);
  }
  if (o.method == "both") t.summary.emplace_back("max_abs_diff", diff);
  return t;
}

}  // namespace

unsigned resolve_jobs(unsigned flag_value) {
  if (const char* env = std::getenv("LIOUVILLE_EP_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    throw InvalidParams("LIOUVILLE_EP_JOBS must be a positive integer");
  }
  if (flag_value >= 1) return flag_value;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? hw : 1;
}

Table build_table(const RunOptions& opts) {
  validate_method(opts);
  if (opts.output != "csv" && opts.output != "json")
    throw InvalidParams("output must be csv or json");
  if (opts.subcommand == "ep-locate") return run_ep_locate(opts);
  if (opts.subcommand == "eigenvalues") return run_eigenvalues(opts);
  if (opts.subcommand == "steady-state") return run_steady_state(opts);
  if (opts.subcommand == "dynamics" || opts.subcommand == "g1" || opts.subcommand == "g2")
    return run_trace(opts);
  if (opts.subcommand == "spectrum") return run_spectrum(opts);
  throw InvalidParams("unknown subcommand '" + opts.subcommand + "'");
}

void write_table(const Table& t, const RunOptions& opts) {
  const std::string payload = opts.output == "json" ? to_json(t) : to_csv(t);
  if (opts.out_path == "-" || opts.out_path.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw InvalidParams("cannot open output file '" + opts.out_path + "'");
  out << payload;
  if (!out.good()) throw InvalidParams("failed writing '" + opts.out_path + "'");
}

}  // namespace lep::cli
