#pragma once

// Closed-form expectation of the two-qubit circuit and its Maclaurin
// truncations.
//
// Each qubit ends in ((cos(phi/2) - sin(phi/2)) |0> + (cos(phi/2) + sin(phi/2)) |1>) / sqrt(2),
// so p0(phi) = (1 - sin phi) / 2 and p1(phi) = (1 + sin phi) / 2. With
// s1 = sin(x - theta1), s2 = sin(x - theta2):
//
//   f_hat(x) = c0 + c1 s1 + c2 s2 + c3 s1 s2
//
// which is trigonometric in x. The cubic form is its degree-3 Maclaurin
// polynomial about x = 0.

#include <array>
#include <cstddef>

#include "qubitfit/circuit.hpp"

namespace qubitfit {

/// Polynomial truncated at a fixed degree; coeff[k] multiplies x^k.
template <std::size_t Degree>
struct TruncatedSeries {
  std::array<double, Degree + 1> coeff{};

  double operator()(double x) const {
    double acc = 0.0;
    for (std::size_t k = Degree + 1; k-- > 0;) acc = acc * x + coeff[k];
    return acc;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    TruncatedSeries r;
    for (std::size_t k = 0; k <= Degree; ++k) r.coeff[k] = coeff[k] + o.coeff[k];
    return r;
  }

  TruncatedSeries operator*(double s) const {
    TruncatedSeries r;
    for (std::size_t k = 0; k <= Degree; ++k) r.coeff[k] = coeff[k] * s;
    return r;
  }

  /// Cauchy product, terms above Degree dropped.
  TruncatedSeries operator*(const TruncatedSeries& o) const {
    TruncatedSeries r;
    for (std::size_t i = 0; i <= Degree; ++i)
      for (std::size_t j = 0; i + j <= Degree; ++j)
        r.coeff[i + j] += coeff[i] * o.coeff[j];
    return r;
  }
};

using QuadraticPoly = TruncatedSeries<2>;

/// a0 + a1 x + a2 x^2 + a3 x^3
struct CubicPoly {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double operator()(double x) const { return a0 + x * (a1 + x * (a2 + x * a3)); }
  double coefficient(int k) const;
};

struct TrigForm {
  double c0 = 0.0;  // constant
  double c1 = 0.0;  // sin(x - theta1)
  double c2 = 0.0;  // sin(x - theta2)
  double c3 = 0.0;  // sin(x - theta1) sin(x - theta2)
};

/// Probability that a single qubit prepared as R(phi) H |0> reads `bit`.
double qubit_probability(int bit, double phi);

double closed_form_expectation(const CircuitParams& params, double x);

TrigForm trig_form(const DiagonalObservable& obs);

/// Evaluates c0 + c1 s1 + c2 s2 + c3 s1 s2 at x.
double evaluate(const TrigForm& form, const CircuitParams& params, double x);

/// Degree-3 Maclaurin coefficients of sin(x - theta).
TruncatedSeries<3> shifted_sine_series(double theta);

/// a_k = f_hat^(k)(0) / k!, k = 0..3, in closed form.
CubicPoly cubic_coefficients(const CircuitParams& params);

/// |f_hat(x) - P3(x)|. Requires |x| <= 1; throws std::domain_error otherwise.
double cubic_remainder_check(const CircuitParams& params, double x);

/// Degree-2 Maclaurin truncation of each of the four amplitudes, in basis
/// index order.
std::array<QuadraticPoly, 4> amplitude_quadratics(const CircuitParams& params);

}  // namespace qubitfit
