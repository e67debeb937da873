#pragma once

// Randomized self-checks of the simulator against the closed form and the
// cubic truncation. Shared by `qubitfit verify` and the test suites.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qubitfit/circuit.hpp"

namespace qubitfit {

struct Draw {
  CircuitParams params;
  double x = 0.0;
  std::uint64_t seed = 0;
};

/// theta_i, x ~ U(-pi, pi); g_i ~ U(-2, 2).
Draw random_draw(std::uint64_t seed);

namespace tolerance {
inline constexpr double kOracle = 1e-12;
inline constexpr double kNorm = 1e-12;
inline constexpr double kImag = 1e-15;
inline constexpr double kBound = 1e-12;
inline constexpr double kFiniteDifference = 1e-6;
inline constexpr double kFiniteDifferenceStep = 1e-3;
inline constexpr double kRemainderRatioLo = 4.0;
inline constexpr double kRemainderRatioHi = 64.0;
}  // namespace tolerance

/// k-th derivative of closed_form_expectation at 0 divided by k!, by central
/// differences with step h (k = 0..3).
double finite_difference_coefficient(const CircuitParams& params, int k, double h);

/// |f_hat - P3| at 2x divided by the value at x.
double remainder_ratio(const CircuitParams& params, double x);

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  /// Largest observed deviation (or worst ratio for the remainder suite).
  double worst = 0.0;
  std::optional<std::uint64_t> failing_seed;
};

/// Runs the oracle-equivalence, normalization, boundedness, remainder and
/// taylor-coefficient suites. Draw i uses seed + i.
std::vector<SuiteResult> run_verification(std::size_t trials, std::uint64_t seed);

}  // namespace qubitfit
