#pragma once

#include "pll/model.hpp"

namespace pll {

/// Closed-form perturbation series of the separatrix in the filter ratio
/// a = tau2/tau1: S(theta, a) = s0 + a*s1 + a^2*s2 + O(a^3).
///
/// s0 accepts theta in [0, pi); s1 and s2 evaluate 0/0 forms at pi and are
/// restricted to theta <= pi - 1e-6.

/// sqrt(2*b*k0*(1 + cos(theta))) = 2*sqrt(b*k0)*cos(theta/2).
double s0(const LoopParams& p, double theta);

/// k0*(2/3 - sin(theta/2) - sin(3*theta/2)/3)/cos(theta/2); s1(0) = 2*k0/3.
double s1(const LoopParams& p, double theta);

/// Second-order coefficient with the log term and the squared-s1 correction;
/// s2(0) = k0^2*(5 - 6*ln 2)/(9*sqrt(b*k0)).
double s2(const LoopParams& p, double theta);

/// Partial sum s0 + a*s1 (+ a^2*s2), order in {0, 1, 2}.
double series_separatrix(const LoopParams& p, double theta, int order);

/// Series lock-in estimate L + (tau2/3)*L^2 + ((5 - 6*ln 2)/18)*tau2^2*L^3
/// with L = sqrt(k0/tau1); order in {1, 2} keeps one or two corrections.
double omega_l_series(const LoopParams& p, int order);

/// The same estimate in the alternative normalization that carries an extra
/// k0/tau1 factor: k0*sqrt(k0/tau1)/tau1 + k0^2*tau2/(3*tau1^2) + ...
/// Exposed for side-by-side comparison tables.
double omega_l_series_as_printed(const LoopParams& p, int order);

/// Gardner's empirical pull-out estimate 1.85*(1/2 + tau1/(k0*tau2^2)).
/// Requires tau2 > 0.
double gardner_pull_out(const LoopParams& p);

}  // namespace pll
