#include "qubitfit/run_record.hpp"

#include <cmath>

#include "qubitfit/numeric_text.hpp"

namespace qubitfit {

std::vector<RunRow> tabulate(const CircuitParams& params, const TargetFunction& t,
                             const SampleGrid& grid) {
  std::vector<RunRow> rows;
  rows.reserve(grid.size());
  for (double x : grid.points()) {
    const double f = t(x);
    const double fh = fhat(params, x);
    rows.push_back({x, f, fh, std::abs(f - fh)});
  }
  return rows;
}

std::string run_csv(std::span<const RunRow> rows) {
  std::string out = "x,f,fhat,abs_err\n";
  for (const auto& r : rows) {
    out += format_double(r.x) + ',' + format_double(r.f) + ',' +
           format_double(r.fhat) + ',' + format_double(r.abs_err) + '\n';
  }
  return out;
}

std::string trace_csv(std::span<const TracePoint> trace) {
  std::string out = "iteration,j\n";
  for (const auto& p : trace)
    out += std::to_string(p.iteration) + ',' + format_double(p.j) + '\n';
  return out;
}

std::string summary_text(const RunSummary& s) {
  std::string out;
  out += "target: " + s.target + '\n';
  out += "n: " + std::to_string(s.n) + '\n';
  out += "x0: " + format_double(s.x0) + '\n';
  out += "J: " + format_double(s.j) + '\n';
  out += "epsilon: " + format_double(s.epsilon) + '\n';
  out += "evals: " + std::to_string(s.evals) + '\n';
  out += "seed: " + std::to_string(s.seed) + '\n';
  return out;
}

}  // namespace qubitfit
