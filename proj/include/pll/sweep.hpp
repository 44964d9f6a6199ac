#pragma once

#include <span>
#include <string>
#include <vector>

#include "pll/model.hpp"
#include "pll/separatrix.hpp"

namespace pll {

/// Parameter grid over the two coefficients the dynamics depend on:
/// k0/tau1 and tau2. tau1 is held fixed and k0 realizes each ratio.
struct SweepGrid {
  std::vector<double> ratio_values;  ///< k0/tau1 values, strictly increasing
  std::vector<double> tau2_values;   ///< [s]
  double tau1_fixed = 1.0;           ///< [s]

  void validate() const;

  /// ratio in {0.1 ... 100}, tau2 in {0.05, 0.1, 0.2, 0.5}.
  static SweepGrid defaults();
};

struct LockInRow {
  LoopParams params{};
  double ratio = 0.0;
  double tau2 = 0.0;
  double omega_l_numeric = 0.0;
  double omega_l_series1 = 0.0;
  double omega_l_series2 = 0.0;
  double omega_po_numeric = 0.0;
  double omega_po_gardner = 0.0;   ///< NaN when tau2 = 0
  double y_norm_consistent = 0.0;  ///< omega_l_numeric * tau1/k0
  double y_norm_as_printed = 0.0;  ///< as-printed omega_l over k0/tau1
  std::string error;               ///< row-level failure, empty when ok
};

/// One row per (tau2, ratio) cell, sorted by (tau2, ratio) regardless of the
/// input or evaluation order. Cells are pure and evaluated concurrently; a
/// failed cell only marks its own row.
std::vector<LockInRow> sweep_lock_in(const SweepGrid& grid, const TraceOptions& opt = {});

/// Interpolated lock-in frequency from a sweep table: the normalized column
/// is interpolated linearly at k0/tau1 on the tau2 curve, then multiplied
/// back by k0/tau1. Throws lookup_error off the table.
double lookup_lock_in(std::span<const LockInRow> table, double k0, double tau1, double tau2);

struct PullOutRow {
  double ratio = 0.0;
  double tau2 = 0.0;
  double omega_po_numeric = 0.0;
  double omega_po_series1 = 0.0;
  double omega_po_series2 = 0.0;
  double omega_po_gardner = 0.0;
  double po_norm_consistent = 0.0;
  double po_norm_as_printed = 0.0;
};

/// Pull-out comparison table: traced value against the doubled series
/// estimates and Gardner's formula. Requires tau2 > 0 throughout.
std::vector<PullOutRow> compare_pull_out(const SweepGrid& grid, const TraceOptions& opt = {});

}  // namespace pll
