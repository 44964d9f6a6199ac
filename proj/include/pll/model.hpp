#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace pll {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

/// Parameters of a PLL with sinusoidal phase-detector characteristic and an
/// active PI loop filter (1 + tau2*s)/(tau1*s), written in the normalized
/// coordinates where the PD gain is absorbed into the loop gain k0 = Kv*Kd.
///
/// tau2 = 0 is admitted so the conservative (undamped) closed forms can be
/// used as test oracles; the lock-in machinery itself expects tau2 > 0.
struct LoopParams {
  double k0;    ///< loop gain [1/s]
  double tau1;  ///< integrator time constant [s]
  double tau2;  ///< proportional time constant [s]

  double a() const { return tau2 / tau1; }  ///< dimensionless filter ratio
  double b() const { return 1.0 / tau1; }   ///< [1/s]

  /// sqrt(k0/tau1) [1/s]; sets the time and step scales of the loop.
  double natural_rate() const { return std::sqrt(k0 / tau1); }

  /// Throws std::invalid_argument unless k0 > 0, tau1 > 0, tau2 >= 0.
  void validate() const;
};

/// Phase-plane point in (phase error, filter state) coordinates.
struct XState {
  double theta_delta;  ///< [rad]
  double x;            ///< filter state
};

/// Phase-plane point in reduced coordinates, y = d(theta_delta)/dt.
/// The reduced dynamics do not depend on the frequency deviation.
struct YState {
  double theta_delta;  ///< [rad]
  double y;            ///< [rad/s]
};

struct XRates {
  double dx_dt;
  double dtheta_dt;
};

struct YRates {
  double dtheta_dt;
  double dy_dt;
};

enum class EquilibriumKind { StableNode, StableDegenerateNode, StableFocus, Saddle };

const char* to_string(EquilibriumKind k);

struct Equilibrium {
  double theta;    ///< [rad]
  double x_eq;     ///< filter state, omega*tau1/k0
  EquilibriumKind kind;
  std::array<std::complex<double>, 2> eigenvalues;  ///< [1/s]
};

struct EquilibriaPair {
  Equilibrium stable;  ///< at theta = 0
  Equilibrium saddle;  ///< at theta = pi
};

struct Classification {
  EquilibriumKind stable_kind;
  std::array<std::complex<double>, 2> stable_eigenvalues;
  std::array<std::complex<double>, 2> saddle_eigenvalues;  ///< {lambda+, lambda-}
};

/// Right-hand side dx/dt = sin(theta), dtheta/dt = omega - (k0/tau1)(x + tau2*sin(theta)).
XRates vector_field_x(const LoopParams& p, double omega, const XState& s);

/// Reduced system dtheta/dt = y, dy/dt = -a*k0*cos(theta)*y - b*k0*sin(theta).
YRates vector_field_y(const LoopParams& p, const YState& s);

/// y = omega - b*k0*x - a*k0*sin(theta); y_to_x inverts it exactly.
YState x_to_y(const LoopParams& p, double omega, const XState& s);
XState y_to_x(const LoopParams& p, double omega, const YState& s);

/// The two equilibria with theta in (-pi, pi]: stable at 0, saddle at pi,
/// both at x_eq = omega*tau1/k0.
EquilibriaPair equilibria(const LoopParams& p, double omega);

/// Eigenvalue classification of both equilibria from the characteristic
/// polynomials lambda^2 +- (k0*tau2/tau1)*lambda +- k0/tau1 = 0.
Classification classify(const LoopParams& p);

/// Wrap a phase to (-pi, pi]. Wrapping is never applied implicitly:
/// cycle-slip accounting observes the unwrapped phase.
double wrap_phase(double theta);

}  // namespace pll
