#pragma once

#include <string>
#include <vector>

namespace pll {

/// 2*pi-periodic signal waveforms whose product average yields the
/// sinusoidal phase-detector characteristic kd*sin(theta_delta).
enum class Waveform {
  Sine,
  Cosine,
  SquareOfCosine,  ///< sign(cos(theta))
  Triangle,        ///< piecewise-linear wave, see waveform_eval
};

const char* waveform_name(Waveform w);

/// Evaluate a waveform at any phase (periodic extension).
///
/// Triangle uses the branches (2/pi)*t + 1 on [0, pi] and 1 - (2/pi)*t on
/// (pi, 2*pi). The branches do not join continuously at 0 and pi; the
/// sine-projected gain 4/pi^2 is unaffected by the jump components.
double waveform_eval(Waveform w, double theta);

/// Mean of f1(s + theta_delta)*f2(s) over a uniform n-point grid on [0, 2*pi).
/// Requires n >= 64.
double averaged_pd(Waveform f1, Waveform f2, double theta_delta, int n);

/// Fourier projection of averaged_pd onto sin(theta_delta) over a uniform
/// m-point grid; recovers the PD gain kd. Requires m >= 16.
double fit_sine_gain(Waveform f1, Waveform f2, int m, int n);

/// Quadrature mixer output sin(theta1)*cos(theta2) - cos(theta1)*sin(theta2)
/// of the two-phase detector; identically sin(theta1 - theta2).
double two_phase_pd(double theta1, double theta2);

/// Sine projection of the two-phase mixer output; equals 1 up to rounding.
double two_phase_sine_gain(int m);

struct PdTableRow {
  std::string waveform_f1;
  std::string waveform_f2;
  double kd_recovered;
  double kd_expected;
};

/// The four waveform pairs with their recovered and nominal gains
/// (1/2, 2/pi, 4/pi^2 and the two-phase gain 1).
std::vector<PdTableRow> pd_gain_table(int m, int n);

}  // namespace pll
