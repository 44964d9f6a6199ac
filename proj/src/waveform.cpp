#include "pll/waveform.hpp"

#include <cmath>
#include <stdexcept>

#include "pll/model.hpp"

namespace pll {

const char* waveform_name(Waveform w) {
  switch (w) {
    case Waveform::Sine: return "sine";
    case Waveform::Cosine: return "cosine";
    case Waveform::SquareOfCosine: return "sign_cos";
    case Waveform::Triangle: return "triangle";
  }
  return "unknown";
}

double waveform_eval(Waveform w, double theta) {
  switch (w) {
    case Waveform::Sine: return std::sin(theta);
    case Waveform::Cosine: return std::cos(theta);
    case Waveform::SquareOfCosine: {
      const double c = std::cos(theta);
      return static_cast<double>(c > 0.0) - static_cast<double>(c < 0.0);
    }
    case Waveform::Triangle: {
      double t = theta - two_pi * std::floor(theta / two_pi);  // [0, 2*pi)
      return t <= pi ? (2.0 / pi) * t + 1.0 : 1.0 - (2.0 / pi) * t;
    }
  }
  return 0.0;
}

double averaged_pd(Waveform f1, Waveform f2, double theta_delta, int n) {
  if (n < 64) throw std::invalid_argument("averaged_pd: sample count n must be >= 64");
  const double ds = two_pi / n;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double s = k * ds;
    acc += waveform_eval(f1, s + theta_delta) * waveform_eval(f2, s);
  }
  return acc / n;
}

double fit_sine_gain(Waveform f1, Waveform f2, int m, int n) {
  if (m < 16) throw std::invalid_argument("fit_sine_gain: sample count m must be >= 16");
  const double dt = two_pi / m;
  double acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double td = j * dt;
    acc += averaged_pd(f1, f2, td, n) * std::sin(td);
  }
  return 2.0 * acc / m;
}

double two_phase_pd(double theta1, double theta2) {
  return std::sin(theta1) * std::cos(theta2) - std::cos(theta1) * std::sin(theta2);
}

double two_phase_sine_gain(int m) {
  if (m < 16) throw std::invalid_argument("two_phase_sine_gain: sample count m must be >= 16");
  const double dt = two_pi / m;
  double acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double td = j * dt;
    acc += two_phase_pd(td, 0.0) * std::sin(td);
  }
  return 2.0 * acc / m;
}

std::vector<PdTableRow> pd_gain_table(int m, int n) {
  std::vector<PdTableRow> rows;
  rows.push_back({waveform_name(Waveform::Sine), waveform_name(Waveform::Cosine),
                  fit_sine_gain(Waveform::Sine, Waveform::Cosine, m, n), 0.5});
  rows.push_back({waveform_name(Waveform::Sine), waveform_name(Waveform::SquareOfCosine),
                  fit_sine_gain(Waveform::Sine, Waveform::SquareOfCosine, m, n), 2.0 / pi});
  rows.push_back({waveform_name(Waveform::Triangle), waveform_name(Waveform::Sine),
                  fit_sine_gain(Waveform::Triangle, Waveform::Sine, m, n), 4.0 / (pi * pi)});
  // Two-phase detector: the gain comes from quadrature mixing, not from a
  // single product average (cos*cos would average to cos(theta_delta)/2).
  rows.push_back({"two_phase_cos", "two_phase_cos", two_phase_sine_gain(m), 1.0});
  return rows;
}

}  // namespace pll
