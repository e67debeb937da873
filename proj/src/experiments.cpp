#include "qubitfit/experiments.hpp"

#include <algorithm>
#include <cstdio>

#include "qubitfit/params_io.hpp"
#include "qubitfit/svg_plot.hpp"

namespace qubitfit {

const std::vector<Experiment>& experiments() {
  static const std::vector<Experiment> kExperiments = {
      {"quadratic", "quadratic.params", 0.03, 0.1, 0.05},
      {"gaussian", "gaussian.params", 0.005, 0.02, 0.02},
      {"sigmoid", "sigmoid.params", 0.006, 0.02, 0.02},
  };
  return kExperiments;
}

bool ReproductionReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ReproductionRow& r) { return r.passed; });
}

ReproductionReport run_reproduction(const ReproductionOptions& options) {
  const SampleGrid grid = make_grid(kPaperSamples, kPaperHalfWidth);
  ReproductionReport report;
  report.seed = options.seed;

  for (const auto& e : experiments()) {
    const TargetFunction t = TargetFunction::parse(e.target);
    ReproductionRow row;
    row.target = e.target;
    row.source = "published";
    row.params = read_params_file(options.data_dir / e.params_file);
    row.j = performance_index(row.params, t, grid);
    row.epsilon = max_pointwise_error(row.params, t, grid);
    row.reported_j = e.reported_j;
    row.limit = e.published_limit;
    row.passed = row.j <= row.limit;
    report.rows.push_back(std::move(row));
  }

  for (const auto& e : experiments()) {
    const TargetFunction t = TargetFunction::parse(e.target);
    OptimizerConfig cfg;
    cfg.iterations = options.iterations;
    cfg.restarts = options.restarts;
    cfg.seed = options.seed;
    cfg.threads = options.threads;
    ReproductionRow row;
    row.target = e.target;
    row.source = "retrained";
    row.fit = optimize(t, grid, cfg);
    row.params = row.fit.best;
    row.j = row.fit.j_final;
    row.epsilon = row.fit.epsilon;
    row.reported_j = e.reported_j;
    row.limit = e.retrained_limit;
    row.passed = row.j <= row.limit;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string markdown_table(const ReproductionReport& report) {
  std::string out;
  out += "| target | parameters | J | epsilon | reported J | limit | result |\n";
  out += "|---|---|---|---|---|---|---|\n";
  char buf[256];
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "| %s | %s | %.6f | %.6f | %.3f | %.3f | %s |\n",
                  r.target.c_str(), r.source.c_str(), r.j, r.epsilon, r.reported_j,
                  r.limit, r.passed ? "pass" : "FAIL");
    out += buf;
  }
  return out;
}

std::string fit_plot_svg(const TargetFunction& t, const CircuitParams& params,
                         double x0, const std::string& title) {
  PlotSeries target{"f(x) = " + t.name(), "red", linspace(-x0, x0, 200), {}};
  PlotSeries approx{"f_hat(x) = <G>", "black", target.x, {}};
  for (double x : target.x) {
    target.y.push_back(t(x));
    approx.y.push_back(fhat(params, x));
  }
  return render_line_plot({target, approx}, PlotOptions{title, "x", "f(x)"});
}

}  // namespace qubitfit
