// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pll/integrate.hpp"
#include "pll/model.hpp"
#include "pll/report.hpp"
#include "pll/separatrix.hpp"
#include "pll/series.hpp"
#include "pll/sweep.hpp"
#include "pll/waveform.hpp"

using namespace pll;

namespace {

constexpr double ln2 = 0.69314718055994530941723212145818;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

template <class Body>
void criterion(int id, const char* name, Body&& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  criterion %2d (%.2fs): %s%s%s\n", c.ok ? "PASS" : "FAIL", id, dt, name,
              c.ok ? "" : " -- ", c.ok ? "" : c.detail.c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

std::string num(double v) { return format_sig(v); }

}  // namespace

int main() {
  criterion(1, "conservative oracle: trace matches 4*cos(theta/2), omega_l = 2", [](Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const LoopParams p{2.0, 0.5, 0.0};
    const SeparatrixCurve curve = trace(p);
    double worst = 0.0;
    for (std::size_t i = 0; i < curve.thetas.size(); ++i) {
      if (curve.thetas[i] > 0.95 * pi) continue;
      const double ref = 4.0 * std::cos(0.5 * curve.thetas[i]);
      worst = std::max(worst, std::abs(curve.ys[i] - ref) / ref);
    }
    const double wl = 0.5 * curve.y_at_zero;
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(worst < 1e-6, "relative branch error " + num(worst) + " >= 1e-6");
    c.require(std::abs(wl - 2.0) <= 1e-5, "omega_l = " + num(wl) + " not within 1e-5 of 2");
    c.require(dt < 1.0, "runtime " + num(dt) + "s >= 1s");
  });

  criterion(2, "series anchors s0(0), s1(0), s2(0) to 1e-12 relative", [](Check& c) {
    for (const LoopParams p : {LoopParams{1.0, 1.0, 0.0}, LoopParams{10.0, 1.0, 0.1},
                               LoopParams{2.0, 0.5, 0.05}}) {
      const double sqrt_bk0 = std::sqrt(p.b() * p.k0);
      const double a0 = 2.0 * sqrt_bk0;
      const double a1 = 2.0 * p.k0 / 3.0;
      const double a2 = p.k0 * p.k0 * (5.0 - 6.0 * ln2) / (9.0 * sqrt_bk0);
      c.require(std::abs(s0(p, 0.0) - a0) <= 1e-12 * a0, "s0(0) off for k0=" + num(p.k0));
      c.require(std::abs(s1(p, 0.0) - a1) <= 1e-12 * a1, "s1(0) off for k0=" + num(p.k0));
      c.require(std::abs(s2(p, 0.0) - a2) <= 1e-12 * a2, "s2(0) off for k0=" + num(p.k0));
    }
  });

  criterion(3, "series remainder scaling: quadratic and cubic error ratios", [](Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    TraceOptions fine;
    fine.h_theta = pi / 40000.0;
    double err1[3], err2[3];
    const double as[3] = {0.02, 0.04, 0.08};
    for (int i = 0; i < 3; ++i) {
      const LoopParams p{1.0, 1.0, as[i]};
      const double y0 = trace(p, fine).y_at_zero;
      err1[i] = std::abs(2.0 * omega_l_series(p, 1) - y0);
      err2[i] = std::abs(2.0 * omega_l_series(p, 2) - y0);
    }
    for (int i = 0; i < 2; ++i) {
      const double r1 = err1[i + 1] / err1[i];
      const double r2 = err2[i + 1] / err2[i];
      c.require(r1 >= 3.0 && r1 <= 5.5, "order-1 ratio " + num(r1) + " outside [3, 5.5]");
      c.require(r2 >= 5.5 && r2 <= 11.0, "order-2 ratio " + num(r2) + " outside [5.5, 11]");
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(dt < 5.0, "runtime " + num(dt) + "s >= 5s");
  });

  criterion(4, "lock-in bracketing and slip-boundary bisection within 1%", [](Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const LoopParams p{10.0, 1.0, 0.1};
    const double wl = lock_in_frequency(p);
    IntegratorConfig cfg = default_config(p);
    cfg.t_max = 400.0 / p.natural_rate();

    const auto run_at = [&](double omega) {
      return simulate(p, omega, XState{0.0, -omega * p.tau1 / p.k0}, cfg);
    };
    const TrajectoryRecord below = run_at(0.98 * wl);
    const TrajectoryRecord above = run_at(1.02 * wl);
    c.require(!below.slipped, "slip at 0.98*omega_l");
    c.require(below.converged, "no convergence at 0.98*omega_l");
    c.require(above.slipped, "no slip at 1.02*omega_l");

    double lo = 0.98 * wl, hi = 1.02 * wl;
    while (hi - lo > 0.005 * wl) {
      const double mid = 0.5 * (lo + hi);
      (run_at(mid).slipped ? hi : lo) = mid;
    }
    const double boundary = 0.5 * (lo + hi);
    c.require(std::abs(boundary - wl) <= 0.01 * wl,
              "bisected boundary " + num(boundary) + " vs omega_l " + num(wl));
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(dt < 10.0, "runtime " + num(dt) + "s >= 10s");
  });

  criterion(5, "pull-out is exactly twice lock-in; frequency step brackets it", [](Check& c) {
    std::mt19937 rng(2024u);
    std::uniform_real_distribution<double> uk(0.5, 15.0), ut1(0.25, 2.0), ut2(0.01, 0.4);
    for (int i = 0; i < 20; ++i) {
      const LoopParams p{uk(rng), ut1(rng), ut2(rng)};
      if (pull_out_frequency(p) != 2.0 * lock_in_frequency(p)) {
        c.require(false, "omega_po != 2*omega_l for k0=" + num(p.k0));
        return;
      }
    }

    const LoopParams p{10.0, 1.0, 0.1};
    const double po = pull_out_frequency(p);
    IntegratorConfig cfg = default_config(p);
    cfg.t_max = 400.0 / p.natural_rate();
    const double base = 1.0;  // locked at this deviation before the step
    const auto step_slips = [&](double step) {
      const XState locked{0.0, base * p.tau1 / p.k0};
      return simulate(p, base + step, locked, cfg).slipped;
    };
    c.require(!step_slips(0.98 * po), "slip for a step of 0.98*omega_po");
    c.require(step_slips(1.02 * po), "no slip for a step of 1.02*omega_po");
  });

  criterion(6, "Lyapunov suite: V nonincreasing, every trajectory locks", [](Check& c) {
    const LoopParams params[3] = {{2.0, 1.0, 0.5}, {10.0, 1.0, 0.1}, {1.0, 0.5, 0.2}};
    const double omegas[3] = {0.2, 1.0, 0.1};
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> uth(-pi, pi), ux(-5.0, 5.0);
    for (int kp = 0; kp < 3; ++kp) {
      IntegratorConfig cfg = default_config(params[kp]);
      // far-out initial filter states slip hundreds of cycles before locking
      cfg.t_max = 2000.0 / params[kp].natural_rate();
      for (int i = 0; i < 10; ++i) {
        const TrajectoryRecord rec =
            simulate(params[kp], omegas[kp], XState{uth(rng), ux(rng)}, cfg);
        double vmax = 0.0;
        for (const auto& s : rec.samples) vmax = std::max(vmax, s.v);
        for (std::size_t k = 1; k < rec.samples.size(); ++k) {
          if (rec.samples[k].v > rec.samples[k - 1].v + 1e-9 * vmax) {
            c.require(false, "V increased at t=" + num(rec.samples[k].t) + " in set " +
                                 std::to_string(kp));
            return;
          }
        }
        c.require(rec.converged, "trajectory " + std::to_string(i) + " of set " +
                                     std::to_string(kp) + " did not lock");
      }
    }
  });

  criterion(7, "PD gain recovery: 1/2, 2/pi, 4/pi^2 within 1e-3; identity 1e-12", [](Check& c) {
    const int m = 4096, n = 4096;
    const double g1 = fit_sine_gain(Waveform::Sine, Waveform::Cosine, m, n);
    const double g2 = fit_sine_gain(Waveform::Sine, Waveform::SquareOfCosine, m, n);
    const double g3 = fit_sine_gain(Waveform::Triangle, Waveform::Sine, m, n);
    c.require(std::abs(g1 - 0.5) <= 1e-3, "sine/cosine gain " + num(g1));
    c.require(std::abs(g2 - 2.0 / pi) <= 1e-3, "sine/sign_cos gain " + num(g2));
    c.require(std::abs(g3 - 4.0 / (pi * pi)) <= 1e-3, "triangle/sine gain " + num(g3));

    double worst = 0.0;
    for (int i = 0; i < 128; ++i)
      for (int j = 0; j < 128; ++j) {
        const double t1 = i * (two_pi / 128.0), t2 = j * (two_pi / 128.0);
        worst = std::max(worst, std::abs(two_phase_pd(t1, t2) - std::sin(t1 - t2)));
      }
    c.require(worst <= 1e-12, "quadrature identity error " + num(worst));
  });

  criterion(8, "domain boundary shift law uniform to 1e-10", [](Check& c) {
    for (const LoopParams p : {LoopParams{10.0, 1.0, 0.1}, LoopParams{2.0, 0.5, 0.2}}) {
      std::vector<double> grid;
      for (int i = 0; i <= 80; ++i) grid.push_back(i * (0.95 * pi / 80.0));
      const SeparatrixCurve curve = trace(p);
      const DomainBoundary b0 = boundary_from_curve(curve, p, 0.0, grid);
      for (const double omega : {0.7, -1.3, 4.0}) {
        const DomainBoundary bw = boundary_from_curve(curve, p, omega, grid);
        const double shift = omega * p.tau1 / p.k0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double lo = std::abs(bw.lower[i].x - b0.lower[i].x - shift);
          const double up = std::abs(bw.upper[i].x - b0.upper[i].x - shift);
          if (lo > 1e-10 || up > 1e-10) {
            c.require(false, "shift defect " + num(std::max(lo, up)) + " at theta=" +
                                 num(grid[i]));
            return;
          }
        }
      }
    }
  });

  criterion(9, "eigenvalue classification: node / degenerate node / focus", [](Check& c) {
    const Classification node = classify(LoopParams{1.0, 1.0, 3.0});
    c.require(node.stable_kind == EquilibriumKind::StableNode, "tau2=3 not a node");
    const double l1 = (-3.0 + std::sqrt(5.0)) / 2.0;
    const double l2 = (-3.0 - std::sqrt(5.0)) / 2.0;
    c.require(std::abs(node.stable_eigenvalues[0].real() - l1) <= 1e-12, "node lambda1");
    c.require(std::abs(node.stable_eigenvalues[1].real() - l2) <= 1e-12, "node lambda2");

    const Classification deg = classify(LoopParams{1.0, 1.0, 2.0});
    c.require(deg.stable_kind == EquilibriumKind::StableDegenerateNode,
              "tau2=2 not a degenerate node");
    c.require(std::abs(deg.stable_eigenvalues[0].real() + 1.0) <= 1e-12 &&
                  std::abs(deg.stable_eigenvalues[1].real() + 1.0) <= 1e-12,
              "degenerate lambda != -1");

    const Classification foc = classify(LoopParams{1.0, 1.0, 1.0});
    c.require(foc.stable_kind == EquilibriumKind::StableFocus, "tau2=1 not a focus");
    c.require(std::abs(foc.stable_eigenvalues[0].real() + 0.5) <= 1e-12, "focus Re != -1/2");
    c.require(std::abs(foc.stable_eigenvalues[0].imag() - std::sqrt(3.0) / 2.0) <= 1e-12,
              "focus Im != sqrt(3)/2");
  });

  criterion(10, "sweep table: series-2 tracks numeric within 1% in the small-a regime",
            [](Check& c) {
              const auto t0 = std::chrono::steady_clock::now();
              const auto rows = sweep_lock_in(SweepGrid::defaults());
              std::ostringstream csv;
              write_sweep_csv(csv, rows);
              const double dt =
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
              c.require(dt < 10.0, "runtime " + num(dt) + "s >= 10s");
              c.require(csv.str().size() > 1000, "CSV output truncated");

              int regime_rows = 0;
              for (const LockInRow& r : rows) {
                c.require(r.error.empty(), "row error: " + r.error);
                if (r.tau2 * std::sqrt(r.ratio) > 0.1) continue;
                ++regime_rows;
                const double e1 = std::abs(r.omega_l_series1 - r.omega_l_numeric);
                const double e2 = std::abs(r.omega_l_series2 - r.omega_l_numeric);
                c.require(e2 / r.omega_l_numeric < 0.01,
                          "series-2 off by " + num(e2 / r.omega_l_numeric) + " at ratio " +
                              num(r.ratio) + ", tau2 " + num(r.tau2));
                c.require(e2 < e1, "series-2 worse than series-1 at ratio " + num(r.ratio) +
                                       ", tau2 " + num(r.tau2));
              }
              c.require(regime_rows >= 8, "too few regime rows");
            });

  if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
