#include "pll/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "pll/series.hpp"

namespace pll {

namespace {

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return format_sig(v);
}

void write_grid_metadata(std::ostream& os, const SweepGrid& grid, const TraceOptions& opt) {
  os << "  \"metadata\": {\n";
  os << "    \"tau1_fixed\": " << json_number(grid.tau1_fixed) << ",\n";
  os << "    \"ratio_values\": [";
  for (std::size_t i = 0; i < grid.ratio_values.size(); ++i)
    os << (i ? ", " : "") << json_number(grid.ratio_values[i]);
  os << "],\n";
  os << "    \"tau2_values\": [";
  for (std::size_t i = 0; i < grid.tau2_values.size(); ++i)
    os << (i ? ", " : "") << json_number(grid.tau2_values[i]);
  os << "],\n";
  os << "    \"eps\": " << json_number(opt.eps) << ",\n";
  os << "    \"h_theta\": " << json_number(opt.h_theta) << "\n";
  os << "  },\n";
}

}  // namespace

std::string format_sig(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

LockInComputation compute_lock_in(const LoopParams& p, const TraceOptions& opt) {
  p.validate();
  LockInComputation r;
  r.params = p;
  r.opt = opt;
  r.omega_l_numeric = lock_in_frequency(p, opt);
  r.omega_l_series1 = omega_l_series(p, 1);
  r.omega_l_series2 = omega_l_series(p, 2);
  r.omega_l_series1_as_printed = omega_l_series_as_printed(p, 1);
  r.omega_l_series2_as_printed = omega_l_series_as_printed(p, 2);
  r.omega_po_numeric = 2.0 * r.omega_l_numeric;
  r.omega_po_gardner =
      p.tau2 > 0.0 ? gardner_pull_out(p) : std::numeric_limits<double>::quiet_NaN();
  return r;
}

void write_lock_in_json(std::ostream& os, const LockInComputation& r, bool estimate_keys) {
  const LoopParams& p = r.params;
  os << "{\n";
  os << "  \"tool\": \"" << tool_name << "\",\n";
  os << "  \"version\": \"" << tool_version << "\",\n";
  os << "  \"params\": {\"k0\": " << json_number(p.k0) << ", \"tau1\": " << json_number(p.tau1)
     << ", \"tau2\": " << json_number(p.tau2) << "},\n";
  os << "  \"omega_l_numeric\": " << json_number(r.omega_l_numeric) << ",\n";
  os << "  \"omega_l_series1\": " << json_number(r.omega_l_series1) << ",\n";
  os << "  \"omega_l_series2\": " << json_number(r.omega_l_series2) << ",\n";
  if (estimate_keys) {
    os << "  \"omega_l_series1_as_printed\": " << json_number(r.omega_l_series1_as_printed)
       << ",\n";
    os << "  \"omega_l_series2_as_printed\": " << json_number(r.omega_l_series2_as_printed)
       << ",\n";
    os << "  \"omega_po\": " << json_number(r.omega_po_numeric) << ",\n";
  } else {
    os << "  \"omega_po_numeric\": " << json_number(r.omega_po_numeric) << ",\n";
  }
  os << "  \"omega_po_gardner\": " << json_number(r.omega_po_gardner) << ",\n";
  os << "  \"y_norm_consistent\": " << json_number(r.omega_l_numeric * p.tau1 / p.k0) << ",\n";
  os << "  \"y_norm_as_printed\": " << json_number(r.omega_l_numeric) << ",\n";
  os << "  \"metadata\": {\"eps\": " << json_number(r.opt.eps)
     << ", \"h_theta\": " << json_number(r.opt.h_theta) << "}\n";
  os << "}\n";
}

void write_separatrix_csv(std::ostream& os, const SeparatrixCurve& c, const LoopParams& p,
                          double omega) {
  os << "theta,y,x_at_omega\n";
  for (std::size_t i = 0; i < c.thetas.size(); ++i) {
    const XState xs = y_to_x(p, omega, YState{c.thetas[i], c.ys[i]});
    os << format_sig(c.thetas[i]) << ',' << format_sig(c.ys[i]) << ',' << format_sig(xs.x)
       << '\n';
  }
}

void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& rec, const LoopParams& p,
                          double omega) {
  os << "t,theta_delta,x,y,v\n";
  for (const TrajectorySample& s : rec.samples) {
    const double y = x_to_y(p, omega, s.state).y;
    os << format_sig(s.t) << ',' << format_sig(s.state.theta_delta) << ','
       << format_sig(s.state.x) << ',' << format_sig(y) << ',' << format_sig(s.v) << '\n';
  }
}

void write_pd_table_csv(std::ostream& os, const std::vector<PdTableRow>& rows) {
  os << "waveform_f1,waveform_f2,kd_recovered,kd_expected\n";
  for (const PdTableRow& r : rows)
    os << r.waveform_f1 << ',' << r.waveform_f2 << ',' << format_sig(r.kd_recovered) << ','
       << format_sig(r.kd_expected) << '\n';
}

void write_sweep_csv(std::ostream& os, const std::vector<LockInRow>& rows) {
  os << "ratio,tau2,omega_l_numeric,omega_l_series1,omega_l_series2,omega_po_numeric,"
        "omega_po_gardner,y_norm_consistent,y_norm_as_printed\n";
  for (const LockInRow& r : rows) {
    os << format_sig(r.ratio) << ',' << format_sig(r.tau2) << ',' << format_sig(r.omega_l_numeric)
       << ',' << format_sig(r.omega_l_series1) << ',' << format_sig(r.omega_l_series2) << ','
       << format_sig(r.omega_po_numeric) << ',' << format_sig(r.omega_po_gardner) << ','
       << format_sig(r.y_norm_consistent) << ',' << format_sig(r.y_norm_as_printed) << '\n';
  }
}

void write_sweep_json(std::ostream& os, const SweepGrid& grid, const TraceOptions& opt,
                      const std::vector<LockInRow>& rows) {
  os << "{\n";
  os << "  \"tool\": \"" << tool_name << "\",\n";
  os << "  \"version\": \"" << tool_version << "\",\n";
  write_grid_metadata(os, grid, opt);
  os << "  \"rows\": [\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const LockInRow& r = rows[i];
    os << "    {\"ratio\": " << json_number(r.ratio) << ", \"tau2\": " << json_number(r.tau2)
       << ", \"omega_l_numeric\": " << json_number(r.omega_l_numeric)
       << ", \"omega_l_series1\": " << json_number(r.omega_l_series1)
       << ", \"omega_l_series2\": " << json_number(r.omega_l_series2)
       << ", \"omega_po_numeric\": " << json_number(r.omega_po_numeric)
       << ", \"omega_po_gardner\": " << json_number(r.omega_po_gardner)
       << ", \"y_norm_consistent\": " << json_number(r.y_norm_consistent)
       << ", \"y_norm_as_printed\": " << json_number(r.y_norm_as_printed) << ", \"error\": ";
    if (r.error.empty())
      os << "null";
    else
      os << '"' << r.error << '"';
    os << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "  ]\n";
  os << "}\n";
}

void write_compare_csv(std::ostream& os, const std::vector<PullOutRow>& rows) {
  os << "ratio,tau2,omega_po_numeric,omega_po_series1,omega_po_series2,omega_po_gardner,"
        "po_norm_consistent,po_norm_as_printed\n";
  for (const PullOutRow& r : rows) {
    os << format_sig(r.ratio) << ',' << format_sig(r.tau2) << ','
       << format_sig(r.omega_po_numeric) << ',' << format_sig(r.omega_po_series1) << ','
       << format_sig(r.omega_po_series2) << ',' << format_sig(r.omega_po_gardner) << ','
       << format_sig(r.po_norm_consistent) << ',' << format_sig(r.po_norm_as_printed) << '\n';
  }
}

void write_compare_json(std::ostream& os, const SweepGrid& grid, const TraceOptions& opt,
                        const std::vector<PullOutRow>& rows) {
  os << "{\n";
  os << "  \"tool\": \"" << tool_name << "\",\n";
  os << "  \"version\": \"" << tool_version << "\",\n";
  write_grid_metadata(os, grid, opt);
  os << "  \"rows\": [\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const PullOutRow& r = rows[i];
    os << "    {\"ratio\": " << json_number(r.ratio) << ", \"tau2\": " << json_number(r.tau2)
       << ", \"omega_po_numeric\": " << json_number(r.omega_po_numeric)
       << ", \"omega_po_series1\": " << json_number(r.omega_po_series1)
       << ", \"omega_po_series2\": " << json_number(r.omega_po_series2)
       << ", \"omega_po_gardner\": " << json_number(r.omega_po_gardner)
       << ", \"po_norm_consistent\": " << json_number(r.po_norm_consistent)
       << ", \"po_norm_as_printed\": " << json_number(r.po_norm_as_printed) << '}'
       << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "  ]\n";
  os << "}\n";
}

}  // namespace pll
