#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qubitfit/circuit.hpp"

namespace qubitfit {

enum class TargetKind { quadratic, gaussian, sigmoid, custom };

/// A real-valued function to be approximated by the circuit.
class TargetFunction {
 public:
  static TargetFunction quadratic();  // x^2
  static TargetFunction gaussian();   // exp(-x^2)
  static TargetFunction sigmoid();    // tanh(x)

  /// c[0] + c[1] x + c[2] x^2 + ...
  static TargetFunction polynomial(std::vector<double> coefficients);

  /// Any callable; reported as `custom`.
  static TargetFunction custom(std::string name,
                               std::function<double(double)> fn);

  /// Accepts "quadratic", "gaussian", "sigmoid" or "poly:c0,c1,...".
  /// Throws std::invalid_argument on anything else.
  static TargetFunction parse(std::string_view spec);

  TargetKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  double operator()(double x) const { return fn_(x); }

 private:
  TargetFunction(TargetKind kind, std::string name,
                 std::function<double(double)> fn);

  TargetKind kind_;
  std::string name_;
  std::function<double(double)> fn_;
};

/// Ordered sample points over [-x0, x0].
class SampleGrid {
 public:
  /// Wraps arbitrary points, e.g. a reversed grid. Points are not checked
  /// for ordering.
  SampleGrid(std::vector<double> points, double x0);

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double x0() const { return x0_; }

  SampleGrid reversed() const;

 private:
  std::vector<double> points_;
  double x0_;
};

/// n uniformly spaced points from -x0 to +x0 inclusive. Throws
/// std::domain_error when n < 2 or x0 <= 0.
SampleGrid make_grid(std::size_t n, double x0);

/// J = sum_k (f(x_k) - f_hat(x_k))^2, unnormalized.
double performance_index(const CircuitParams& params, const TargetFunction& t,
                         const SampleGrid& grid);

/// max_k |f(x_k) - f_hat(x_k)|
double max_pointwise_error(const CircuitParams& params, const TargetFunction& t,
                           const SampleGrid& grid);

}  // namespace qubitfit
