#pragma once

#include <array>
#include <vector>

#include "pll/errors.hpp"
#include "pll/model.hpp"

namespace pll {

using Vec2 = std::array<double, 2>;

/// One classical fourth-order Runge-Kutta step of an autonomous 2-D field.
template <class Field>
Vec2 rk4_step(Field&& f, const Vec2& s, double h) {
  const Vec2 k1 = f(s);
  const Vec2 k2 = f(Vec2{s[0] + 0.5 * h * k1[0], s[1] + 0.5 * h * k1[1]});
  const Vec2 k3 = f(Vec2{s[0] + 0.5 * h * k2[0], s[1] + 0.5 * h * k2[1]});
  const Vec2 k4 = f(Vec2{s[0] + h * k3[0], s[1] + h * k3[1]});
  return {s[0] + (h / 6.0) * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          s[1] + (h / 6.0) * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

/// Equation-of-motion adapter in (theta, x) component order.
inline auto x_field(const LoopParams& p, double omega) {
  return [p, omega](const Vec2& s) -> Vec2 {
    const XRates r = vector_field_x(p, omega, XState{s[0], s[1]});
    return {r.dtheta_dt, r.dx_dt};
  };
}

/// Reduced-system adapter in (theta, y) component order.
inline auto y_field(const LoopParams& p) {
  return [p](const Vec2& s) -> Vec2 {
    const YRates r = vector_field_y(p, YState{s[0], s[1]});
    return {r.dtheta_dt, r.dy_dt};
  };
}

struct IntegratorConfig {
  double h;              ///< time step [s]
  double t_max;          ///< horizon [s]
  double eps_conv;       ///< convergence radius in the weighted norm [rad]
  double settle_window;  ///< dwell time required inside eps_conv [s]

  void validate() const;
};

/// Step 0.01/sqrt(k0/tau1), horizon 200/sqrt(k0/tau1), eps 1e-4,
/// settle window 20/sqrt(k0/tau1): several natural periods.
IntegratorConfig default_config(const LoopParams& p);

struct TrajectorySample {
  double t;
  XState state;
  double v;  ///< Lyapunov value at the sample
};

/// Immutable once returned; samples are ordered by t.
struct TrajectoryRecord {
  std::vector<TrajectorySample> samples;
  bool slipped = false;   ///< max |theta(t) - theta(0)| reached 2*pi
  int slip_count = 0;     ///< floor(max excursion / 2*pi)
  bool converged = false; ///< stayed within eps_conv for settle_window

  /// Sampled Lyapunov values in time order.
  std::vector<double> v_series() const {
    std::vector<double> v;
    v.reserve(samples.size());
    for (const TrajectorySample& s : samples) v.push_back(s.v);
    return v;
  }
};

/// Integrate the loop equations with unwrapped phase, recording cycle slips
/// and convergence to the nearest locked state (theta modulo 2*pi).
/// Stops early once converged. Throws integration_error on non-finite states.
TrajectoryRecord simulate(const LoopParams& p, double omega, const XState& init,
                          const IntegratorConfig& cfg);

/// V = (x - tau1*omega/k0)^2 / 2 + (2*tau1/k0)*sin^2(theta/2), >= 0.
double lyapunov_v(const LoopParams& p, double omega, const XState& s);

/// dV/dt = -tau2*sin^2(theta) along trajectories; independent of omega.
double lyapunov_vdot(const LoopParams& p, const XState& s);

/// |wrap(theta)| + sqrt(k0/tau1)*|x - x_eq|: distance to the nearest locked
/// state, with both components in radians.
double convergence_distance(const LoopParams& p, double omega, const XState& s);

/// First integral y^2/2 - b*k0*cos(theta) of the undamped (tau2 = 0)
/// reduced system.
double reduced_energy(const LoopParams& p, const YState& s);

}  // namespace pll
