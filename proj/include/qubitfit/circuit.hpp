#pragma once

// Two-qubit product circuit |psi> = (R(x - theta2) (x) R(x - theta1)) (H (x) H) |00>
// and expectation values of diagonal observables.
//
// Basis convention: label b = (b_first, b_second) maps to index
// 2 * b_first + b_second. The first tensor factor is R(x - theta2).

#include <array>
#include <complex>

namespace qubitfit {

using Complex = std::complex<double>;

/// 2x2 and 4x4 dense matrices, row-major.
using Matrix2 = std::array<Complex, 4>;
using Matrix4 = std::array<Complex, 16>;

struct RotationAngle {
  double radians = 0.0;
  constexpr explicit RotationAngle(double phi) : radians(phi) {}
};

struct StateVector {
  std::array<Complex, 4> amp{};

  double norm_squared() const;
  double probability(int index) const { return std::norm(amp[index]); }
};

struct DiagonalObservable {
  std::array<double, 4> g{};

  double min() const;
  double max() const;
  bool operator==(const DiagonalObservable&) const = default;
};

/// The six trainable values: rotation offsets theta1, theta2 and diag(G).
struct CircuitParams {
  double theta1 = 0.0;
  double theta2 = 0.0;
  DiagonalObservable observable;

  static constexpr std::size_t kDimension = 6;

  /// Packed as (theta1, theta2, g0, g1, g2, g3).
  std::array<double, kDimension> to_array() const;
  static CircuitParams from_array(const std::array<double, kDimension>& v);

  bool is_finite() const;
  bool operator==(const CircuitParams&) const = default;
};

Matrix2 hadamard();

/// [[cos(phi/2), -sin(phi/2)], [sin(phi/2), cos(phi/2)]]
Matrix2 rotation_matrix(RotationAngle phi);

Matrix4 kron(const Matrix2& a, const Matrix2& b);
Matrix4 multiply(const Matrix4& a, const Matrix4& b);
StateVector apply_matrix(const Matrix4& u, const StateVector& v);

/// The full circuit unitary U for the given parameters and input.
Matrix4 circuit_unitary(const CircuitParams& params, double x);

StateVector basis_state_00();
StateVector prepare_state(const CircuitParams& params, double x);

/// sum_b g_b |amp_b|^2
double expectation(const StateVector& state, const DiagonalObservable& obs);

/// <psi| G |psi> by explicit matrix sandwich; equal to expectation() for
/// diagonal G.
double expectation_sandwich(const StateVector& state,
                            const DiagonalObservable& obs);

/// Circuit output f_hat(x) = <psi(x)| G |psi(x)>.
double fhat(const CircuitParams& params, double x);

}  // namespace qubitfit
