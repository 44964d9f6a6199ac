#include "pll/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "pll/report.hpp"
#include "pll/series.hpp"

namespace pll {

namespace {

struct Options {
  std::optional<double> k0, tau1, tau2;
  std::optional<double> omega, theta0, x0;
  std::optional<double> tmax, h;
  std::optional<double> eps, h_theta;
  std::optional<std::string> format;
  std::string config_path;
  std::string out_path;
};

void add_io_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "JSON config file; flags override config keys");
  cmd->add_option("--out", o.out_path, "write the report to FILE instead of stdout");
}

void add_param_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--k0", o.k0, "loop gain [1/s]");
  cmd->add_option("--tau1", o.tau1, "integrator time constant [s]");
  cmd->add_option("--tau2", o.tau2, "proportional time constant [s]");
}

void add_trace_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--eps", o.eps, "separatrix launch offset [rad]");
  cmd->add_option("--h-theta", o.h_theta, "separatrix theta step [rad]");
}

// Fill options that were not passed on the command line from the config file.
void apply_config(Options& o) {
  std::ifstream in(o.config_path);
  if (!in) throw std::invalid_argument("cannot open --config file '" + o.config_path + "'");
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("cannot parse --config file: " + std::string(e.what()));
  }
  if (!cfg.is_object()) throw std::invalid_argument("--config file must hold a JSON object");

  const auto number = [&](const char* key, std::optional<double>& slot) {
    if (!cfg.contains(key) || slot.has_value()) return;
    if (!cfg[key].is_number())
      throw std::invalid_argument(std::string("config key '") + key + "' must be a number");
    slot = cfg[key].get<double>();
  };
  number("k0", o.k0);
  number("tau1", o.tau1);
  number("tau2", o.tau2);
  number("omega", o.omega);
  number("theta0", o.theta0);
  number("x0", o.x0);
  number("tmax", o.tmax);
  number("h", o.h);
  number("eps", o.eps);
  number("h-theta", o.h_theta);
  number("h_theta", o.h_theta);
  if (cfg.contains("format") && !o.format.has_value()) o.format = cfg["format"].get<std::string>();
  if (cfg.contains("out") && o.out_path.empty()) o.out_path = cfg["out"].get<std::string>();
}

LoopParams require_params(const Options& o) {
  if (!o.k0) throw std::invalid_argument("missing required parameter --k0");
  if (!o.tau1) throw std::invalid_argument("missing required parameter --tau1");
  if (!o.tau2) throw std::invalid_argument("missing required parameter --tau2");
  if (!std::isfinite(*o.k0) || !(*o.k0 > 0.0))
    throw std::invalid_argument("--k0 must be > 0");
  if (!std::isfinite(*o.tau1) || !(*o.tau1 > 0.0))
    throw std::invalid_argument("--tau1 must be > 0");
  if (!std::isfinite(*o.tau2) || !(*o.tau2 >= 0.0))
    throw std::invalid_argument("--tau2 must be >= 0");
  return {*o.k0, *o.tau1, *o.tau2};
}

TraceOptions require_trace_options(const Options& o) {
  TraceOptions t;
  if (o.eps) {
    if (!std::isfinite(*o.eps) || !(*o.eps > 0.0) || *o.eps > 1e-4)
      throw std::invalid_argument("--eps must lie in (0, 1e-4]");
    t.eps = *o.eps;
  }
  if (o.h_theta) {
    if (!std::isfinite(*o.h_theta) || !(*o.h_theta > 0.0))
      throw std::invalid_argument("--h-theta must be > 0");
    t.h_theta = *o.h_theta;
  }
  return t;
}

std::string require_format(const Options& o, std::initializer_list<const char*> allowed) {
  const std::string fmt = o.format.value_or(*allowed.begin());
  for (const char* a : allowed)
    if (fmt == a) return fmt;
  throw std::invalid_argument("--format '" + fmt + "' is not supported by this subcommand");
}

void run_lock_in(const Options& o, std::ostream& os, bool estimate_keys) {
  require_format(o, {"json"});
  const LoopParams p = require_params(o);
  const TraceOptions topt = require_trace_options(o);
  write_lock_in_json(os, compute_lock_in(p, topt), estimate_keys);
}

void run_separatrix(const Options& o, std::ostream& os) {
  require_format(o, {"csv"});
  const LoopParams p = require_params(o);
  const TraceOptions topt = require_trace_options(o);
  write_separatrix_csv(os, trace(p, topt), p, o.omega.value_or(0.0));
}

void run_simulate(const Options& o, std::ostream& os) {
  require_format(o, {"csv"});
  const LoopParams p = require_params(o);
  IntegratorConfig cfg = default_config(p);
  if (o.h) {
    if (!std::isfinite(*o.h) || !(*o.h > 0.0)) throw std::invalid_argument("--h must be > 0");
    cfg.h = *o.h;
  }
  if (o.tmax) {
    if (!std::isfinite(*o.tmax) || !(*o.tmax > cfg.h))
      throw std::invalid_argument("--tmax must exceed the step --h");
    cfg.t_max = *o.tmax;
  }
  const double omega = o.omega.value_or(0.0);
  const XState init{o.theta0.value_or(0.0), o.x0.value_or(0.0)};
  write_trajectory_csv(os, simulate(p, omega, init, cfg), p, omega);
}

void run_sweep(const Options& o, std::ostream& os) {
  const std::string fmt = require_format(o, {"csv", "json"});
  const TraceOptions topt = require_trace_options(o);
  const SweepGrid grid = SweepGrid::defaults();
  const auto rows = sweep_lock_in(grid, topt);
  if (fmt == "json")
    write_sweep_json(os, grid, topt, rows);
  else
    write_sweep_csv(os, rows);
}

void run_compare(const Options& o, std::ostream& os) {
  const std::string fmt = require_format(o, {"csv", "json"});
  const TraceOptions topt = require_trace_options(o);
  const SweepGrid grid = SweepGrid::defaults();
  const auto rows = compare_pull_out(grid, topt);
  if (fmt == "json")
    write_compare_json(os, grid, topt, rows);
  else
    write_compare_csv(os, rows);
}

void run_pd_table(const Options& o, std::ostream& os) {
  require_format(o, {"csv"});
  write_pd_table_csv(os, pd_gain_table(4096, 4096));
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lock-in range toolkit for PLLs with a sinusoidal phase detector and active PI "
               "filter"};
  app.set_help_flag("--help", "print this help message and exit");  // frees -h / --h
  app.require_subcommand(1);
  Options o;

  CLI::App* lockin = app.add_subcommand("lockin", "lock-in frequency report (JSON)");
  CLI::App* pullout = app.add_subcommand("pullout", "pull-out frequency report (JSON)");
  CLI::App* separatrix_cmd = app.add_subcommand("separatrix", "traced separatrix samples (CSV)");
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "time-domain trajectory (CSV)");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "lock-in diagram table over k0/tau1, tau2");
  CLI::App* estimate_cmd = app.add_subcommand("estimate", "series estimates report (JSON)");
  CLI::App* pd_table_cmd = app.add_subcommand("pd-table", "recovered PD gains table (CSV)");
  CLI::App* compare_cmd = app.add_subcommand("compare", "pull-out estimate comparison table");

  for (CLI::App* cmd : {lockin, pullout, separatrix_cmd, simulate_cmd, sweep_cmd, estimate_cmd,
                        pd_table_cmd, compare_cmd})
    cmd->set_help_flag("--help", "print this help message and exit");

  for (CLI::App* cmd : {lockin, pullout, separatrix_cmd, estimate_cmd}) {
    add_param_options(cmd, o);
    add_trace_options(cmd, o);
    add_io_options(cmd, o);
  }
  separatrix_cmd->add_option("--omega", o.omega, "frequency deviation for the x column [rad/s]");
  for (CLI::App* cmd : {lockin, pullout, separatrix_cmd, simulate_cmd, sweep_cmd, estimate_cmd,
                        pd_table_cmd, compare_cmd}) {
    cmd->add_option("--format", o.format, "output format");
  }

  add_param_options(simulate_cmd, o);
  simulate_cmd->add_option("--omega", o.omega, "frequency deviation [rad/s]");
  simulate_cmd->add_option("--theta0", o.theta0, "initial phase error [rad]");
  simulate_cmd->add_option("--x0", o.x0, "initial filter state");
  simulate_cmd->add_option("--tmax", o.tmax, "time horizon [s]");
  simulate_cmd->add_option("--h", o.h, "time step [s]");
  add_io_options(simulate_cmd, o);

  for (CLI::App* cmd : {sweep_cmd, compare_cmd}) {
    add_trace_options(cmd, o);
    add_io_options(cmd, o);
  }
  add_io_options(pd_table_cmd, o);

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << sub->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  std::ofstream file_out;
  try {
    if (!o.config_path.empty()) apply_config(o);

    std::ostream* target = &out;
    if (!o.out_path.empty()) {
      file_out.open(o.out_path);
      if (!file_out) throw std::invalid_argument("cannot open --out file '" + o.out_path + "'");
      target = &file_out;
    }

    if (name == "lockin" || name == "pullout")
      run_lock_in(o, *target, false);
    else if (name == "estimate")
      run_lock_in(o, *target, true);
    else if (name == "separatrix")
      run_separatrix(o, *target);
    else if (name == "simulate")
      run_simulate(o, *target);
    else if (name == "sweep")
      run_sweep(o, *target);
    else if (name == "compare")
      run_compare(o, *target);
    else if (name == "pd-table")
      run_pd_table(o, *target);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace pll
