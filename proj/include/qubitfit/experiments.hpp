#pragma once

// The three fitting experiments (x^2, exp(-x^2), tanh(x) on 30 points over
// [-1.5, 1.5], 5000 iterations) and their acceptance thresholds.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qubitfit/chemotaxis.hpp"
#include "qubitfit/objective.hpp"

namespace qubitfit {

struct Experiment {
  std::string target;          // quadratic | gaussian | sigmoid
  std::string params_file;     // file name under the published-data directory
  double reported_j = 0.0;     // J reported with the published parameters
  double published_limit = 0.0;
  double retrained_limit = 0.0;
};

const std::vector<Experiment>& experiments();

inline constexpr std::size_t kPaperSamples = 30;
inline constexpr double kPaperHalfWidth = 1.5;
inline constexpr std::size_t kPaperIterations = 5000;
inline constexpr std::size_t kDefaultRestarts = 10;

struct ReproductionRow {
  std::string target;
  std::string source;  // "published" | "retrained"
  double j = 0.0;
  double epsilon = 0.0;
  double reported_j = 0.0;
  double limit = 0.0;
  bool passed = false;
  FitResult fit;  // retrained rows only
  CircuitParams params;
};

struct ReproductionReport {
  std::vector<ReproductionRow> rows;
  std::uint64_t seed = 0;
  bool all_passed() const;
};

struct ReproductionOptions {
  std::filesystem::path data_dir;
  std::uint64_t seed = 42;
  std::size_t restarts = kDefaultRestarts;
  std::size_t iterations = kPaperIterations;
  std::size_t threads = 1;
};

/// Evaluates the published parameter files and retrains every target.
ReproductionReport run_reproduction(const ReproductionOptions& options);

std::string markdown_table(const ReproductionReport& report);

/// Target and approximation over a dense 200-point grid on [-x0, x0].
std::string fit_plot_svg(const TargetFunction& t, const CircuitParams& params,
                         double x0, const std::string& title);

}  // namespace qubitfit
