#include "qubitfit/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qubitfit {

namespace {

// Maclaurin series of cos(alpha + x/2) and sin(alpha + x/2), degree 2.
QuadraticPoly half_angle_cos(double alpha) {
  return {{std::cos(alpha), -0.5 * std::sin(alpha), -0.125 * std::cos(alpha)}};
}

QuadraticPoly half_angle_sin(double alpha) {
  return {{std::sin(alpha), 0.5 * std::cos(alpha), -0.125 * std::sin(alpha)}};
}

// Amplitude of `bit` for a single qubit after R(x - theta) H |0>.
QuadraticPoly qubit_amplitude_series(int bit, double theta) {
  const double alpha = -0.5 * theta;
  const QuadraticPoly c = half_angle_cos(alpha);
  const QuadraticPoly s = half_angle_sin(alpha);
  const double h = 1.0 / std::numbers::sqrt2;
  return bit == 0 ? (c + s * -1.0) * h : (c + s) * h;
}

}  // namespace

double CubicPoly::coefficient(int k) const {
  switch (k) {
    case 0: return a0;
    case 1: return a1;
    case 2: return a2;
    case 3: return a3;
    default: throw std::out_of_range("cubic coefficient index");
  }
}

double qubit_probability(int bit, double phi) {
  const double s = std::sin(phi);
  return bit == 0 ? 0.5 * (1.0 - s) : 0.5 * (1.0 + s);
}

double closed_form_expectation(const CircuitParams& params, double x) {
  const double phi_first = x - params.theta2;
  const double phi_second = x - params.theta1;
  double e = 0.0;
  for (int b = 0; b < 4; ++b) {
    e += params.observable.g[b] * qubit_probability(b >> 1, phi_first) *
         qubit_probability(b & 1, phi_second);
  }
  return e;
}

TrigForm trig_form(const DiagonalObservable& obs) {
  const auto& g = obs.g;
  return TrigForm{
      0.25 * (g[0] + g[1] + g[2] + g[3]),
      0.25 * (-g[0] + g[1] - g[2] + g[3]),
      0.25 * (-g[0] - g[1] + g[2] + g[3]),
      0.25 * (g[0] - g[1] - g[2] + g[3]),
  };
}

double evaluate(const TrigForm& form, const CircuitParams& params, double x) {
  const double s1 = std::sin(x - params.theta1);
  const double s2 = std::sin(x - params.theta2);
  return form.c0 + form.c1 * s1 + form.c2 * s2 + form.c3 * s1 * s2;
}

TruncatedSeries<3> shifted_sine_series(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {{-s, c, 0.5 * s, -c / 6.0}};
}

CubicPoly cubic_coefficients(const CircuitParams& params) {
  const TrigForm form = trig_form(params.observable);
  const TruncatedSeries<3> s1 = shifted_sine_series(params.theta1);
  const TruncatedSeries<3> s2 = shifted_sine_series(params.theta2);
  TruncatedSeries<3> f = s1 * form.c1 + s2 * form.c2 + (s1 * s2) * form.c3;
  f.coeff[0] += form.c0;
  return CubicPoly{f.coeff[0], f.coeff[1], f.coeff[2], f.coeff[3]};
}

double cubic_remainder_check(const CircuitParams& params, double x) {
  if (!(std::abs(x) <= 1.0))
    throw std::domain_error("cubic remainder is only defined for |x| <= 1");
  return std::abs(fhat(params, x) - cubic_coefficients(params)(x));
}

std::array<QuadraticPoly, 4> amplitude_quadratics(const CircuitParams& params) {
  std::array<QuadraticPoly, 4> out;
  for (int b = 0; b < 4; ++b) {
    out[b] = qubit_amplitude_series(b >> 1, params.theta2) *
             qubit_amplitude_series(b & 1, params.theta1);
  }
  return out;
}

}  // namespace qubitfit
