#include "pll/model.hpp"

#include <stdexcept>

namespace pll {

void LoopParams::validate() const {
  if (!std::isfinite(k0) || !(k0 > 0.0)) throw std::invalid_argument("k0 must be > 0");
  if (!std::isfinite(tau1) || !(tau1 > 0.0)) throw std::invalid_argument("tau1 must be > 0");
  if (!std::isfinite(tau2) || !(tau2 >= 0.0)) throw std::invalid_argument("tau2 must be >= 0");
}

const char* to_string(EquilibriumKind k) {
  switch (k) {
    case EquilibriumKind::StableNode: return "stable_node";
    case EquilibriumKind::StableDegenerateNode: return "stable_degenerate_node";
    case EquilibriumKind::StableFocus: return "stable_focus";
    case EquilibriumKind::Saddle: return "saddle";
  }
  return "unknown";
}

XRates vector_field_x(const LoopParams& p, double omega, const XState& s) {
  const double sin_th = std::sin(s.theta_delta);
  return {sin_th, omega - (p.k0 / p.tau1) * (s.x + p.tau2 * sin_th)};
}

YRates vector_field_y(const LoopParams& p, const YState& s) {
  const double ak0 = p.a() * p.k0;
  const double bk0 = p.b() * p.k0;
  return {s.y, -ak0 * std::cos(s.theta_delta) * s.y - bk0 * std::sin(s.theta_delta)};
}

YState x_to_y(const LoopParams& p, double omega, const XState& s) {
  const double y = omega - p.b() * p.k0 * s.x - p.a() * p.k0 * std::sin(s.theta_delta);
  return {s.theta_delta, y};
}

XState y_to_x(const LoopParams& p, double omega, const YState& s) {
  const double x = (omega - s.y - p.a() * p.k0 * std::sin(s.theta_delta)) / (p.b() * p.k0);
  return {s.theta_delta, x};
}

EquilibriaPair equilibria(const LoopParams& p, double omega) {
  const Classification cls = classify(p);
  const double x_eq = omega * p.tau1 / p.k0;
  return {Equilibrium{0.0, x_eq, cls.stable_kind, cls.stable_eigenvalues},
          Equilibrium{pi, x_eq, EquilibriumKind::Saddle, cls.saddle_eigenvalues}};
}

Classification classify(const LoopParams& p) {
  const double c = p.k0 * p.tau2;
  const double disc = c * c - 4.0 * p.k0 * p.tau1;
  // The degenerate node is a measure-zero case; exact zero never survives
  // floating-point arithmetic, so detect it with a relative band.
  const double tol = 1e-12 * c * c;

  Classification out;
  const double re = -c / (2.0 * p.tau1);
  if (std::abs(disc) <= tol) {
    out.stable_kind = EquilibriumKind::StableDegenerateNode;
    out.stable_eigenvalues = {std::complex<double>{re, 0.0}, std::complex<double>{re, 0.0}};
  } else if (disc > 0.0) {
    out.stable_kind = EquilibriumKind::StableNode;
    const double r = std::sqrt(disc) / (2.0 * p.tau1);
    out.stable_eigenvalues = {std::complex<double>{re + r, 0.0}, std::complex<double>{re - r, 0.0}};
  } else {
    out.stable_kind = EquilibriumKind::StableFocus;
    const double im = std::sqrt(-disc) / (2.0 * p.tau1);
    out.stable_eigenvalues = {std::complex<double>{re, im}, std::complex<double>{re, -im}};
  }

  const double rs = std::sqrt(c * c + 4.0 * p.k0 * p.tau1) / (2.0 * p.tau1);
  const double cs = c / (2.0 * p.tau1);
  out.saddle_eigenvalues = {std::complex<double>{cs + rs, 0.0}, std::complex<double>{cs - rs, 0.0}};
  return out;
}

double wrap_phase(double theta) {
  double r = std::remainder(theta, two_pi);
  if (r <= -pi) r += two_pi;
  return r;
}

}  // namespace pll
