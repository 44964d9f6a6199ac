#pragma once

#include <span>
#include <vector>

#include "pll/errors.hpp"
#include "pll/model.hpp"

namespace pll {

struct TraceOptions {
  double eps = 1e-8 * pi;        ///< launch offset from the saddle [rad]
  double h_theta = pi / 20000.0; ///< nominal theta step [rad]
};

/// Sampled stable-manifold branch of the saddle (pi, 0) in the reduced
/// (theta, y) plane; the branch with y > 0 over theta in [0, pi).
struct SeparatrixCurve {
  std::vector<double> thetas;  ///< descending from pi - eps to 0
  std::vector<double> ys;      ///< y(theta) > 0
  double y_at_zero = 0.0;      ///< S(0), the headline output

  /// Linear interpolation on the traced grid; theta in [0, thetas.front()].
  double eval(double theta) const;
};

/// Negative saddle eigenvalue (a*k0 - sqrt((a*k0)^2 + 4*b*k0))/2.
double saddle_lambda_minus(const LoopParams& p);
double saddle_lambda_plus(const LoopParams& p);

/// Unit stable eigendirection of the saddle, oriented into theta < pi,
/// y > 0; proportional to (-1, -lambda_minus).
std::array<double, 2> stable_direction(const LoopParams& p);

/// Integrate the phase-plane equation dy/dtheta =
/// -(a*k0*cos(theta)*y + b*k0*sin(theta))/y from the eigendirection launch
/// point (pi - eps, |lambda_minus|*eps) down to theta = 0 with RK4 in theta.
/// The last step is shortened to land exactly on 0.
SeparatrixCurve trace(const LoopParams& p, const TraceOptions& opt = {});

/// Lock-in frequency: half the separatrix value over the stable equilibrium.
double lock_in_frequency(const LoopParams& p, const TraceOptions& opt = {});

/// Pull-out frequency, exactly 2 * lock_in_frequency(p).
double pull_out_frequency(const LoopParams& p, const TraceOptions& opt = {});

/// Lock-in domain boundary in (theta, x) coordinates for the given
/// frequency deviation: the traced branch and its symmetric image
/// (theta, y) -> (-theta, -y), mapped through y_to_x. Shifting omega moves
/// both curves by omega*tau1/k0 exactly.
struct DomainBoundary {
  std::vector<XState> lower;  ///< image of the traced branch, theta in [0, pi)
  std::vector<XState> upper;  ///< image of the symmetric branch, at -theta
};

DomainBoundary boundary_from_curve(const SeparatrixCurve& c, const LoopParams& p, double omega,
                                   std::span<const double> theta_grid);

DomainBoundary lock_in_domain_boundary_x(const LoopParams& p, double omega,
                                         std::span<const double> theta_grid,
                                         const TraceOptions& opt = {});

}  // namespace pll
