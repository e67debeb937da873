#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qubitfit/chemotaxis.hpp"
#include "qubitfit/circuit.hpp"
#include "qubitfit/objective.hpp"

namespace qubitfit {

struct RunRow {
  double x = 0.0;
  double f = 0.0;
  double fhat = 0.0;
  double abs_err = 0.0;
};

std::vector<RunRow> tabulate(const CircuitParams& params, const TargetFunction& t,
                             const SampleGrid& grid);

/// Header `x,f,fhat,abs_err`, one row per sample, shortest round-trip floats.
std::string run_csv(std::span<const RunRow> rows);

/// Header `iteration,j`.
std::string trace_csv(std::span<const TracePoint> trace);

struct RunSummary {
  std::string target;
  std::size_t n = 0;
  double x0 = 0.0;
  double j = 0.0;
  double epsilon = 0.0;
  std::size_t evals = 0;
  std::uint64_t seed = 0;
};

/// `key: value` lines: target, n, x0, J, epsilon, evals, seed.
std::string summary_text(const RunSummary& s);

}  // namespace qubitfit
