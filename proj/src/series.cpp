#include "pll/series.hpp"

#include <cmath>
#include <stdexcept>

namespace pll {

namespace {

constexpr double ln2 = 0.69314718055994530941723212145818;

void require_theta_s0(double theta) {
  if (!(theta >= 0.0) || !(theta < pi))
    throw std::invalid_argument("series: theta must lie in [0, pi)");
}

void require_theta(double theta) {
  if (!(theta >= 0.0) || !(theta <= pi - 1e-6))
    throw std::invalid_argument("series: theta must lie in [0, pi - 1e-6]");
}

}  // namespace

double s0(const LoopParams& p, double theta) {
  require_theta_s0(theta);
  return std::sqrt(2.0 * p.b() * p.k0 * (1.0 + std::cos(theta)));
}

double s1(const LoopParams& p, double theta) {
  require_theta(theta);
  const double half = 0.5 * theta;
  return p.k0 * (2.0 / 3.0 - std::sin(half) - std::sin(3.0 * half) / 3.0) / std::cos(half);
}

double s2(const LoopParams& p, double theta) {
  require_theta(theta);
  const double k0 = p.k0;
  const double sqrt_bk0 = std::sqrt(p.b() * k0);
  const double half = 0.5 * theta;
  const double ch = std::cos(half);
  const double sh = std::sin(half);

  const double bracket =
      8.0 * sh - 4.0 * std::log(sh + 1.0) + 0.5 * std::cos(2.0 * theta) + 2.0 * std::cos(theta);
  const double integral_part = k0 * k0 * ((6.5 - 4.0 * ln2) - bracket) / (6.0 * sqrt_bk0 * ch);

  const double q = 2.0 / 3.0 - sh - std::sin(3.0 * half) / 3.0;
  const double squared_part = k0 * k0 * q * q / (4.0 * sqrt_bk0 * ch * ch * ch);

  return integral_part - squared_part;
}

double series_separatrix(const LoopParams& p, double theta, int order) {
  if (order < 0 || order > 2)
    throw std::invalid_argument("series_separatrix: order must be 0, 1, or 2");
  double v = s0(p, theta);
  const double a = p.a();
  if (order >= 1) v += a * s1(p, theta);
  if (order >= 2) v += a * a * s2(p, theta);
  return v;
}

double omega_l_series(const LoopParams& p, int order) {
  p.validate();
  if (order != 1 && order != 2)
    throw std::invalid_argument("omega_l_series: order must be 1 or 2");
  const double rate = p.natural_rate();
  double v = rate + p.tau2 * rate * rate / 3.0;
  if (order == 2) v += (5.0 - 6.0 * ln2) / 18.0 * p.tau2 * p.tau2 * rate * rate * rate;
  return v;
}

double omega_l_series_as_printed(const LoopParams& p, int order) {
  p.validate();
  if (order != 1 && order != 2)
    throw std::invalid_argument("omega_l_series_as_printed: order must be 1 or 2");
  const double rate = p.natural_rate();
  double v = p.k0 * rate / p.tau1 + p.k0 * p.k0 * p.tau2 / (3.0 * p.tau1 * p.tau1);
  if (order == 2)
    v += p.k0 * p.k0 * p.tau2 * p.tau2 * (5.0 - 6.0 * ln2) / (18.0 * p.tau1 * p.tau1) * rate;
  return v;
}

double gardner_pull_out(const LoopParams& p) {
  p.validate();
  if (!(p.tau2 > 0.0)) throw std::invalid_argument("gardner_pull_out: tau2 must be > 0");
  return 1.85 * (0.5 + p.tau1 / (p.k0 * p.tau2 * p.tau2));
}

}  // namespace pll
