#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pll/integrate.hpp"
#include "pll/model.hpp"
#include "pll/separatrix.hpp"
#include "pll/sweep.hpp"
#include "pll/waveform.hpp"

namespace pll {

inline constexpr const char* tool_name = "pllrange";
inline constexpr const char* tool_version = "0.1.0";

/// Locale-independent formatting with 12 significant digits, so identical
/// invocations produce byte-identical reports.
std::string format_sig(double v);

/// Numbers behind the lockin / pullout / estimate reports.
struct LockInComputation {
  LoopParams params{};
  TraceOptions opt{};
  double omega_l_numeric = 0.0;
  double omega_l_series1 = 0.0;
  double omega_l_series2 = 0.0;
  double omega_l_series1_as_printed = 0.0;
  double omega_l_series2_as_printed = 0.0;
  double omega_po_numeric = 0.0;
  double omega_po_gardner = 0.0;  ///< NaN when tau2 = 0, emitted as null
};

LockInComputation compute_lock_in(const LoopParams& p, const TraceOptions& opt = {});

/// estimate_keys selects the estimate-report field names (omega_po instead
/// of omega_po_numeric, plus the as-printed series fields).
void write_lock_in_json(std::ostream& os, const LockInComputation& r, bool estimate_keys);

void write_separatrix_csv(std::ostream& os, const SeparatrixCurve& c, const LoopParams& p,
                          double omega);
void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& rec, const LoopParams& p,
                          double omega);
void write_pd_table_csv(std::ostream& os, const std::vector<PdTableRow>& rows);

void write_sweep_csv(std::ostream& os, const std::vector<LockInRow>& rows);
void write_sweep_json(std::ostream& os, const SweepGrid& grid, const TraceOptions& opt,
                      const std::vector<LockInRow>& rows);

void write_compare_csv(std::ostream& os, const std::vector<PullOutRow>& rows);
void write_compare_json(std::ostream& os, const SweepGrid& grid, const TraceOptions& opt,
                        const std::vector<PullOutRow>& rows);

}  // namespace pll
