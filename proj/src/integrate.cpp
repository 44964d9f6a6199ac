#include "pll/integrate.hpp"

#include <cmath>
#include <stdexcept>

namespace pll {

void IntegratorConfig::validate() const {
  if (!std::isfinite(h) || !(h > 0.0)) throw std::invalid_argument("integrator: h must be > 0");
  if (!std::isfinite(t_max) || !(t_max > h))
    throw std::invalid_argument("integrator: t_max must exceed h");
  if (!(eps_conv > 0.0)) throw std::invalid_argument("integrator: eps_conv must be > 0");
  if (!(settle_window >= 0.0))
    throw std::invalid_argument("integrator: settle_window must be >= 0");
}

IntegratorConfig default_config(const LoopParams& p) {
  const double rate = p.natural_rate();
  return {0.01 / rate, 200.0 / rate, 1e-4, 20.0 / rate};
}

double lyapunov_v(const LoopParams& p, double omega, const XState& s) {
  const double dx = s.x - p.tau1 * omega / p.k0;
  const double sh = std::sin(0.5 * s.theta_delta);
  return 0.5 * dx * dx + (2.0 * p.tau1 / p.k0) * sh * sh;
}

double lyapunov_vdot(const LoopParams& p, const XState& s) {
  const double si = std::sin(s.theta_delta);
  return -p.tau2 * si * si;
}

double convergence_distance(const LoopParams& p, double omega, const XState& s) {
  const double x_eq = omega * p.tau1 / p.k0;
  return std::abs(wrap_phase(s.theta_delta)) + p.natural_rate() * std::abs(s.x - x_eq);
}

double reduced_energy(const LoopParams& p, const YState& s) {
  return 0.5 * s.y * s.y - p.b() * p.k0 * std::cos(s.theta_delta);
}

TrajectoryRecord simulate(const LoopParams& p, double omega, const XState& init,
                          const IntegratorConfig& cfg) {
  p.validate();
  cfg.validate();
  if (!std::isfinite(init.theta_delta) || !std::isfinite(init.x))
    throw integration_error("simulate: initial state is not finite");

  const auto f = x_field(p, omega);

  TrajectoryRecord rec;
  const double step_count = cfg.t_max / cfg.h;
  rec.samples.reserve(step_count < 4e6 ? static_cast<std::size_t>(step_count) + 2 : 4000000u);

  Vec2 s{init.theta_delta, init.x};
  double t = 0.0;
  double max_excursion = 0.0;
  bool in_window = false;
  double window_start = 0.0;

  const auto observe = [&](double tt, const Vec2& ss) {
    const XState xs{ss[0], ss[1]};
    rec.samples.push_back({tt, xs, lyapunov_v(p, omega, xs)});
    if (convergence_distance(p, omega, xs) <= cfg.eps_conv) {
      if (!in_window) {
        in_window = true;
        window_start = tt;
      }
      if (tt - window_start >= cfg.settle_window) rec.converged = true;
    } else {
      in_window = false;
    }
  };

  observe(t, s);
  while (!rec.converged && t < cfg.t_max) {
    s = rk4_step(f, s, cfg.h);
    t += cfg.h;
    if (!std::isfinite(s[0]) || !std::isfinite(s[1]))
      throw integration_error("simulate: state diverged to a non-finite value");
    max_excursion = std::max(max_excursion, std::abs(s[0] - init.theta_delta));
    observe(t, s);
  }

  rec.slipped = max_excursion >= two_pi;
  rec.slip_count = static_cast<int>(std::floor(max_excursion / two_pi));
  return rec;
}

}  // namespace pll
