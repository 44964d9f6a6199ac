#include "pll/separatrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace pll {

namespace {

// Slope of the phase-plane equation in the open upper half-plane.
inline double plane_slope(double ak0, double bk0, double theta, double y) {
  return -(ak0 * std::cos(theta) * y + bk0 * std::sin(theta)) / y;
}

}  // namespace

double saddle_lambda_minus(const LoopParams& p) {
  const double ak0 = p.a() * p.k0;
  const double bk0 = p.b() * p.k0;
  return 0.5 * (ak0 - std::sqrt(ak0 * ak0 + 4.0 * bk0));
}

double saddle_lambda_plus(const LoopParams& p) {
  const double ak0 = p.a() * p.k0;
  const double bk0 = p.b() * p.k0;
  return 0.5 * (ak0 + std::sqrt(ak0 * ak0 + 4.0 * bk0));
}

std::array<double, 2> stable_direction(const LoopParams& p) {
  const double lam = saddle_lambda_minus(p);
  const double norm = std::sqrt(1.0 + lam * lam);
  return {-1.0 / norm, -lam / norm};
}

SeparatrixCurve trace(const LoopParams& p, const TraceOptions& opt) {
  p.validate();
  if (!std::isfinite(opt.eps) || !(opt.eps > 0.0) || opt.eps > 1e-4)
    throw std::invalid_argument("trace: eps must lie in (0, 1e-4]");
  if (!std::isfinite(opt.h_theta) || !(opt.h_theta > 0.0))
    throw std::invalid_argument("trace: h_theta must be > 0");

  const double ak0 = p.a() * p.k0;
  const double bk0 = p.b() * p.k0;
  const double lam = saddle_lambda_minus(p);

  SeparatrixCurve c;
  double theta = pi - opt.eps;
  double y = -lam * opt.eps;  // eigendirection launch, error O(eps^2)
  c.thetas.push_back(theta);
  c.ys.push_back(y);

  while (theta > 0.0) {
    // Near the saddle the off-branch field stiffens like 1/(pi - theta);
    // cap the step so the transversal contraction stays inside the RK4
    // stability region, which makes the approach grid geometric there.
    double h = std::min(opt.h_theta, 0.2 * (pi - theta));
    const double sin_th = std::sin(theta);
    if (sin_th > 0.0) h = std::min(h, y * y / (bk0 * sin_th));
    h = std::min(h, theta);  // final step lands exactly on theta = 0
    const double theta_next = (h == theta) ? 0.0 : theta - h;
    if (!(theta_next < theta)) throw trace_error("trace: step size collapsed");

    const double k1 = plane_slope(ak0, bk0, theta, y);
    const double k2 = plane_slope(ak0, bk0, theta - 0.5 * h, y - 0.5 * h * k1);
    const double k3 = plane_slope(ak0, bk0, theta - 0.5 * h, y - 0.5 * h * k2);
    const double k4 = plane_slope(ak0, bk0, theta - h, y - h * k3);
    y -= (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    theta = theta_next;

    if (!std::isfinite(y) || !(y > 0.0))
      throw trace_error("trace: branch left the upper half-plane");
    c.thetas.push_back(theta);
    c.ys.push_back(y);
  }

  c.y_at_zero = c.ys.back();
  return c;
}

double SeparatrixCurve::eval(double theta) const {
  if (thetas.size() < 2) throw std::invalid_argument("SeparatrixCurve::eval: empty curve");
  if (!(theta >= 0.0) || theta > thetas.front())
    throw std::invalid_argument("SeparatrixCurve::eval: theta outside the traced range");
  // thetas descend; find the first sample <= theta.
  const auto it = std::lower_bound(thetas.begin(), thetas.end(), theta, std::greater<double>());
  const auto i = static_cast<std::size_t>(it - thetas.begin());
  if (i == 0) return ys.front();
  if (thetas[i] == theta) return ys[i];
  const double t0 = thetas[i], t1 = thetas[i - 1];
  const double w = (theta - t0) / (t1 - t0);
  return ys[i] + w * (ys[i - 1] - ys[i]);
}

double lock_in_frequency(const LoopParams& p, const TraceOptions& opt) {
  return 0.5 * trace(p, opt).y_at_zero;
}

double pull_out_frequency(const LoopParams& p, const TraceOptions& opt) {
  return 2.0 * lock_in_frequency(p, opt);
}

DomainBoundary boundary_from_curve(const SeparatrixCurve& c, const LoopParams& p, double omega,
                                   std::span<const double> theta_grid) {
  DomainBoundary b;
  b.lower.reserve(theta_grid.size());
  b.upper.reserve(theta_grid.size());
  for (const double th : theta_grid) {
    const double yv = c.eval(th);
    b.lower.push_back(y_to_x(p, omega, YState{th, yv}));
    b.upper.push_back(y_to_x(p, omega, YState{-th, -yv}));
  }
  return b;
}

DomainBoundary lock_in_domain_boundary_x(const LoopParams& p, double omega,
                                         std::span<const double> theta_grid,
                                         const TraceOptions& opt) {
  return boundary_from_curve(trace(p, opt), p, omega, theta_grid);
}

}  // namespace pll
