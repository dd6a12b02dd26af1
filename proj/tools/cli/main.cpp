#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/run.hpp"
#include "lep/model_core.hpp"

namespace {

void emit_error(const std::string& kind, const std::string& message) {
  std::string msg = message;
  for (char& c : msg) {
    if (c == '"') c = '\'';
    if (c == '\n') c = ' ';
  }
  std::cerr << "{\"error\":\"" << kind << "\",\"message\":\"" << msg << "\"}\n";
}

void add_common(CLI::App* cmd, lep::cli::RunOptions& o) {
  cmd->add_option("--gamma", o.gamma, "Decay rate (sets the absolute scale)")
      ->capture_default_str();
  cmd->add_option("--theta", o.theta, "Drive phase in radians")->capture_default_str();
  cmd->add_option("--output", o.output, "Output encoding: csv or json")->capture_default_str();
  cmd->add_option("--out", o.out_path, "Output path ('-' for stdout)")->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "Worker threads (LIOUVILLE_EP_JOBS overrides)");
}

void add_drive(CLI::App* cmd, lep::cli::RunOptions& o) {
  cmd->add_option("--delta", o.delta, "Detuning in units of gamma")->capture_default_str();
  cmd->add_option("--omega", o.omega, "Drive amplitude in units of gamma")
      ->capture_default_str();
}

void add_method(CLI::App* cmd, lep::cli::RunOptions& o) {
  cmd->add_option("--method", o.method, "analytic, numeric or both")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "liouville-ep: spectra, exceptional points, dynamics and emission of a "
      "driven dissipative two-level atom"};
  app.require_subcommand(1);

  lep::cli::RunOptions opts;

  auto* ep = app.add_subcommand("ep-locate", "Exceptional-point drives across detuning");
  add_common(ep, opts);
  ep->add_option("--delta-grid", opts.grid, "Detuning grid [lin:|log:]min:max:count");

  auto* eig = app.add_subcommand("eigenvalues", "Liouvillian eigenvalues vs drive");
  add_common(eig, opts);
  add_drive(eig, opts);
  add_method(eig, opts);
  eig->add_option("--omega-grid", opts.grid, "Drive grid [lin:|log:]min:max:count");
  eig->add_flag("--raw-lambda", opts.raw_lambda, "Emit lambda instead of i*lambda");

  auto* ss = app.add_subcommand("steady-state", "Steady-state density matrix vs drive");
  add_common(ss, opts);
  add_drive(ss, opts);
  add_method(ss, opts);
  ss->add_option("--omega-grid", opts.grid, "Drive grid [lin:|log:]min:max:count");

  auto* dyn = app.add_subcommand("dynamics", "Population relaxation from the excited state");
  add_common(dyn, opts);
  add_drive(dyn, opts);
  add_method(dyn, opts);
  dyn->add_option("--t-grid", opts.grid, "Time grid in 1/gamma, [lin:|log:]min:max:count");

  auto* c1 = app.add_subcommand("g1", "First-order coherence vs delay");
  add_common(c1, opts);
  add_drive(c1, opts);
  add_method(c1, opts);
  c1->add_option("--tau-grid", opts.grid, "Delay grid in 1/gamma; log grids start at tau=0");

  auto* c2 = app.add_subcommand("g2", "Second-order coherence vs delay");
  add_common(c2, opts);
  add_drive(c2, opts);
  add_method(c2, opts);
  c2->add_option("--tau-grid", opts.grid, "Delay grid in 1/gamma; log grids start at tau=0");

  auto* sp = app.add_subcommand("spectrum", "Emission lineshape and elastic weight");
  add_common(sp, opts);
  add_drive(sp, opts);
  add_method(sp, opts);
  sp->add_option("--freq-grid", opts.grid, "Offset grid in gamma, [lin:|log:]min:max:count");
  sp->add_option("--tau-max", opts.tau_max, "Numeric correlator truncation in 1/gamma")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("UsageError", e.what());
    return 2;
  }

  opts.subcommand = app.get_subcommands().front()->get_name();
  try {
    const lep::cli::Table t = lep::cli::build_table(opts);
    lep::cli::write_table(t, opts);
  } catch (const lep::InvalidParams& e) {
    emit_error("InvalidParams", e.what());
    return 2;
  } catch (const lep::NonResonantInput& e) {
    emit_error("NonResonantInput", e.what());
    return 2;
  } catch (const lep::ToleranceNotMet& e) {
    emit_error("ToleranceNotMet", e.what());
    return 3;
  } catch (const lep::TailNotConverged& e) {
    emit_error("TailNotConverged", e.what());
    return 3;
  } catch (const lep::ConvergenceFailure& e) {
    emit_error("ConvergenceFailure", e.what());
    return 3;
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return 3;
  }
  return 0;
}
