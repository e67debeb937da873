#include "qubitfit/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qubitfit {

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amp) s += std::norm(a);
  return s;
}

double DiagonalObservable::min() const {
  return *std::min_element(g.begin(), g.end());
}

double DiagonalObservable::max() const {
  return *std::max_element(g.begin(), g.end());
}

std::array<double, CircuitParams::kDimension> CircuitParams::to_array() const {
  return {theta1, theta2, observable.g[0], observable.g[1], observable.g[2],
          observable.g[3]};
}

CircuitParams CircuitParams::from_array(
    const std::array<double, kDimension>& v) {
  return CircuitParams{v[0], v[1], DiagonalObservable{{v[2], v[3], v[4], v[5]}}};
}

bool CircuitParams::is_finite() const {
  const auto v = to_array();
  return std::all_of(v.begin(), v.end(),
                     [](double d) { return std::isfinite(d); });
}

Matrix2 hadamard() {
  const double h = 1.0 / std::numbers::sqrt2;
  return {h, h, h, -h};
}

Matrix2 rotation_matrix(RotationAngle phi) {
  const double c = std::cos(0.5 * phi.radians);
  const double s = std::sin(0.5 * phi.radians);
  return {c, -s, s, c};
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out[(2 * i + k) * 4 + (2 * j + l)] = a[2 * i + j] * b[2 * k + l];
  return out;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) out[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
  return out;
}

StateVector apply_matrix(const Matrix4& u, const StateVector& v) {
  StateVector out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.amp[i] += u[i * 4 + j] * v.amp[j];
  return out;
}

Matrix4 circuit_unitary(const CircuitParams& params, double x) {
  const Matrix4 rotations =
      kron(rotation_matrix(RotationAngle(x - params.theta2)),
           rotation_matrix(RotationAngle(x - params.theta1)));
  return multiply(rotations, kron(hadamard(), hadamard()));
}

StateVector basis_state_00() {
  StateVector s;
  s.amp[0] = 1.0;
  return s;
}

StateVector prepare_state(const CircuitParams& params, double x) {
  return apply_matrix(circuit_unitary(params, x), basis_state_00());
}

double expectation(const StateVector& state, const DiagonalObservable& obs) {
  double e = 0.0;
  for (int b = 0; b < 4; ++b) e += obs.g[b] * state.probability(b);
  return e;
}

double expectation_sandwich(const StateVector& state,
                            const DiagonalObservable& obs) {
  Matrix4 g{};
  for (int b = 0; b < 4; ++b) g[b * 4 + b] = obs.g[b];
  const StateVector g_psi = apply_matrix(g, state);
  Complex e = 0.0;
  for (int b = 0; b < 4; ++b) e += std::conj(state.amp[b]) * g_psi.amp[b];
  return e.real();
}

double fhat(const CircuitParams& params, double x) {
  return expectation(prepare_state(params, x), params.observable);
}

}  // namespace qubitfit
