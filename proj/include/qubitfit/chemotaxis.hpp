#pragma once

// Chemotaxis: greedy Gaussian random walk over (theta1, theta2, g0..g3).
//
// Each iteration spends one objective evaluation. A fresh direction
// d ~ N(0, sigma^2 I) is drawn unless the previous step succeeded, in which
// case the same d is tried again (a "run"). Strict improvements are
// accepted. After `fail_streak` consecutive rejections sigma is multiplied
// by `sigma_shrink`.

#include <cstdint>
#include <optional>
#include <vector>

#include "qubitfit/circuit.hpp"
#include "qubitfit/objective.hpp"

namespace qubitfit {

struct OptimizerConfig {
  std::size_t iterations = 5000;
  double sigma0 = 0.3;
  double sigma_shrink = 0.7;
  std::size_t fail_streak = 50;
  /// Starting point for every restart; random_init(restart seed) when empty.
  std::optional<CircuitParams> init;
  std::uint64_t seed = 42;
  std::size_t restarts = 1;
  /// Worker threads for restarts. 0 picks hardware concurrency.
  std::size_t threads = 1;

  /// Throws std::invalid_argument on out-of-range knobs.
  void validate() const;
};

struct TracePoint {
  std::size_t iteration = 0;
  double j = 0.0;
  bool operator==(const TracePoint&) const = default;
};

struct FitResult {
  CircuitParams best;
  double j_final = 0.0;
  /// Best-J so far for the winning restart: iteration 0, every improvement,
  /// and the final iteration.
  std::vector<TracePoint> j_trace;
  double epsilon = 0.0;
  /// Objective evaluations summed over all restarts.
  std::size_t evals = 0;
  std::size_t best_restart = 0;
  std::uint64_t seed = 0;

  bool operator==(const FitResult&) const = default;
};

/// theta_i ~ U(-pi, pi), g_i ~ U(-2, 2).
CircuitParams random_init(std::uint64_t seed);

/// Seed used by restart `index`.
constexpr std::uint64_t restart_seed(std::uint64_t master, std::size_t index) {
  return master + index;
}

/// One chemotaxis run with the given seed; cfg.restarts and cfg.threads are
/// ignored.
FitResult optimize_single(const TargetFunction& t, const SampleGrid& grid,
                          const OptimizerConfig& cfg, std::uint64_t seed);

/// Best of cfg.restarts independent runs (ties go to the lowest index).
/// Throws std::invalid_argument for a bad config and std::runtime_error if
/// the objective ever evaluates to a non-finite value.
FitResult optimize(const TargetFunction& t, const SampleGrid& grid,
                   const OptimizerConfig& cfg);

}  // namespace qubitfit
