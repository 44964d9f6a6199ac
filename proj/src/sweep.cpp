#include "pll/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>

#include "pll/errors.hpp"
#include "pll/series.hpp"

namespace pll {

namespace {

// Evaluate a function over [0, n) with a small deterministic fan-out; each
// index writes only its own slot, so completion order does not matter.
template <class Fn>
void for_each_index(std::size_t n, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    }));
  }
  for (auto& f : futures) f.get();
}

LockInRow evaluate_cell(double ratio, double tau2, double tau1_fixed, const TraceOptions& opt) {
  LockInRow row;
  row.ratio = ratio;
  row.tau2 = tau2;
  row.params = LoopParams{ratio * tau1_fixed, tau1_fixed, tau2};
  try {
    const double wl = lock_in_frequency(row.params, opt);
    row.omega_l_numeric = wl;
    row.omega_l_series1 = omega_l_series(row.params, 1);
    row.omega_l_series2 = omega_l_series(row.params, 2);
    row.omega_po_numeric = 2.0 * wl;
    row.omega_po_gardner =
        tau2 > 0.0 ? gardner_pull_out(row.params) : std::numeric_limits<double>::quiet_NaN();
    row.y_norm_consistent = wl * row.params.tau1 / row.params.k0;
    // The as-printed lock-in value is (k0/tau1) times the consistent one, so
    // dividing it back by k0/tau1 for the diagram axis returns wl itself.
    row.y_norm_as_printed = wl;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

void SweepGrid::validate() const {
  if (ratio_values.empty() || tau2_values.empty())
    throw std::invalid_argument("sweep: grid must not be empty");
  if (!(tau1_fixed > 0.0)) throw std::invalid_argument("sweep: tau1_fixed must be > 0");
  for (const double r : ratio_values)
    if (!std::isfinite(r) || !(r > 0.0))
      throw std::invalid_argument("sweep: ratio values must be > 0");
  for (std::size_t i = 1; i < ratio_values.size(); ++i)
    if (!(ratio_values[i] > ratio_values[i - 1]))
      throw std::invalid_argument("sweep: ratio values must be strictly increasing");
  for (const double t2 : tau2_values)
    if (!std::isfinite(t2) || !(t2 >= 0.0))
      throw std::invalid_argument("sweep: tau2 values must be >= 0");
}

SweepGrid SweepGrid::defaults() {
  return {{0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}, {0.05, 0.1, 0.2, 0.5}, 1.0};
}

std::vector<LockInRow> sweep_lock_in(const SweepGrid& grid, const TraceOptions& opt) {
  grid.validate();

  std::vector<double> tau2s = grid.tau2_values;
  std::sort(tau2s.begin(), tau2s.end());

  struct Cell {
    double ratio, tau2;
  };
  std::vector<Cell> cells;
  cells.reserve(tau2s.size() * grid.ratio_values.size());
  for (const double t2 : tau2s)
    for (const double r : grid.ratio_values) cells.push_back({r, t2});

  std::vector<LockInRow> rows(cells.size());
  for_each_index(cells.size(), [&](std::size_t i) {
    rows[i] = evaluate_cell(cells[i].ratio, cells[i].tau2, grid.tau1_fixed, opt);
  });
  return rows;
}

double lookup_lock_in(std::span<const LockInRow> table, double k0, double tau1, double tau2) {
  LoopParams{k0, tau1, tau2}.validate();
  const double x = k0 / tau1;
  const double tau2_tol = 1e-12 * std::max(1.0, std::abs(tau2));

  std::vector<const LockInRow*> curve;
  for (const LockInRow& row : table)
    if (row.error.empty() && std::abs(row.tau2 - tau2) <= tau2_tol) curve.push_back(&row);
  if (curve.empty()) throw lookup_error("lookup_lock_in: tau2 is not tabulated");

  std::sort(curve.begin(), curve.end(),
            [](const LockInRow* a, const LockInRow* b) { return a->ratio < b->ratio; });
  if (x < curve.front()->ratio || x > curve.back()->ratio)
    throw lookup_error("lookup_lock_in: k0/tau1 outside the tabulated range");

  for (const LockInRow* row : curve)
    if (row->ratio == x) return row->y_norm_consistent * x;

  const auto hi = std::lower_bound(curve.begin(), curve.end(), x,
                                   [](const LockInRow* row, double v) { return row->ratio < v; });
  const LockInRow* r1 = *hi;
  const LockInRow* r0 = *(hi - 1);
  const double w = (x - r0->ratio) / (r1->ratio - r0->ratio);
  const double y = r0->y_norm_consistent + w * (r1->y_norm_consistent - r0->y_norm_consistent);
  return y * x;
}

std::vector<PullOutRow> compare_pull_out(const SweepGrid& grid, const TraceOptions& opt) {
  grid.validate();
  for (const double t2 : grid.tau2_values)
    if (!(t2 > 0.0))
      throw std::invalid_argument("compare_pull_out: the Gardner column needs tau2 > 0");

  std::vector<double> tau2s = grid.tau2_values;
  std::sort(tau2s.begin(), tau2s.end());

  struct Cell {
    double ratio, tau2;
  };
  std::vector<Cell> cells;
  for (const double t2 : tau2s)
    for (const double r : grid.ratio_values) cells.push_back({r, t2});

  std::vector<PullOutRow> rows(cells.size());
  for_each_index(cells.size(), [&](std::size_t i) {
    const LoopParams p{cells[i].ratio * grid.tau1_fixed, grid.tau1_fixed, cells[i].tau2};
    PullOutRow row;
    row.ratio = cells[i].ratio;
    row.tau2 = cells[i].tau2;
    row.omega_po_numeric = pull_out_frequency(p, opt);
    row.omega_po_series1 = 2.0 * omega_l_series(p, 1);
    row.omega_po_series2 = 2.0 * omega_l_series(p, 2);
    row.omega_po_gardner = gardner_pull_out(p);
    row.po_norm_consistent = row.omega_po_numeric * p.tau1 / p.k0;
    row.po_norm_as_printed = row.omega_po_numeric;
    rows[i] = row;
  });
  return rows;
}

}  // namespace pll
