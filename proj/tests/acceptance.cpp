// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qubitfit/analytic.hpp"
#include "qubitfit/chemotaxis.hpp"
#include "qubitfit/circuit.hpp"
#include "qubitfit/experiments.hpp"
#include "qubitfit/objective.hpp"
#include "qubitfit/params_io.hpp"
#include "test_support.hpp"

using namespace qubitfit;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

const fs::path kDataDir = QUBITFIT_TEST_DATA_DIR;
constexpr std::uint64_t kMasterSeed = 42;

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Draw {
  CircuitParams params;
  double x;
};

std::vector<Draw> draws(std::size_t n, std::uint64_t seed) {
  testing::ParamSampler rng(seed);
  std::vector<Draw> out;
  for (std::size_t i = 0; i < n; ++i) {
    const CircuitParams p = rng.params();
    out.push_back({p, rng.angle()});
  }
  return out;
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  double worst = 0;
  for (const auto& d : draws(1000, 1)) {
    worst = std::max(worst, std::abs(fhat(d.params, d.x) - closed_form_expectation(d.params, d.x)));
  }
  const double t = seconds_since(start);
  return {worst <= 1e-12 && t < 1.0,
          fmt("max |simulator - closed form| = %.3e (tol 1e-12), %.3f s (limit 1 s)", worst, t)};
}

Outcome normalization_and_bounds() {
  double norm_dev = 0, excess = 0;
  for (const auto& d : draws(1000, 1)) {
    const StateVector s = prepare_state(d.params, d.x);
    norm_dev = std::max(norm_dev, std::abs(s.norm_squared() - 1));
    const double f = expectation(s, d.params.observable);
    excess = std::max({excess, d.params.observable.min() - f, f - d.params.observable.max()});
  }
  return {norm_dev <= 1e-12 && excess <= 1e-12,
          fmt("max |norm^2 - 1| = %.3e (tol 1e-12), max bound excess = %.3e", norm_dev, excess)};
}

// Central differences of the simulator output, k-th Maclaurin coefficient.
double fd_coefficient(const CircuitParams& p, int k, double h) {
  auto f = [&](double x) { return fhat(p, x); };
  switch (k) {
    case 0: return f(0);
    case 1: return (f(h) - f(-h)) / (2 * h);
    case 2: return (f(h) - 2 * f(0) + f(-h)) / (2 * h * h);
    default: return (f(2 * h) - 2 * f(h) + 2 * f(-h) - f(-2 * h)) / (12 * h * h * h);
  }
}

Outcome theorem_check() {
  const auto start = Clock::now();
  double ratio_lo = 1e300, ratio_hi = 0, worst_rel = 0;
  for (const auto& d : draws(100, 3)) {
    const double ratio = cubic_remainder_check(d.params, 2e-2) / cubic_remainder_check(d.params, 1e-2);
    ratio_lo = std::min(ratio_lo, ratio);
    ratio_hi = std::max(ratio_hi, ratio);

    const CubicPoly c = cubic_coefficients(d.params);
    const double scale =
        std::max(std::abs(d.params.observable.min()), std::abs(d.params.observable.max()));
    for (int k = 0; k <= 3; ++k) {
      const double a = c.coefficient(k);
      worst_rel = std::max(worst_rel, std::abs(a - fd_coefficient(d.params, k, 1e-3)) /
                                          std::max(std::abs(a), scale));
    }
  }
  const double t = seconds_since(start);
  return {ratio_lo >= 4 && ratio_hi <= 64 && worst_rel <= 1e-6 && t < 1.0,
          fmt("remainder ratio in [%.2f, %.2f] (need [4, 64]), FD rel err %.3e (tol 1e-6), %.3f s",
              ratio_lo, ratio_hi, worst_rel, t)};
}

Outcome published_parameters() {
  const SampleGrid grid = make_grid(kPaperSamples, kPaperHalfWidth);
  bool ok = true;
  std::string detail;
  for (const auto& e : experiments()) {
    const CircuitParams p = read_params_file(kDataDir / e.params_file);
    const double j = performance_index(p, TargetFunction::parse(e.target), grid);
    ok = ok && j <= e.published_limit;
    detail += fmt("%s J = %.5f (<= %.3f, reported %.3f); ", e.target.c_str(), j,
                  e.published_limit, e.reported_j);
  }
  return {ok, detail};
}

std::vector<FitResult> g_retrained;

Outcome retraining() {
  const auto start = Clock::now();
  const SampleGrid grid = make_grid(kPaperSamples, kPaperHalfWidth);
  bool ok = true;
  std::string detail;
  for (const auto& e : experiments()) {
    OptimizerConfig cfg;
    cfg.iterations = kPaperIterations;
    cfg.restarts = kDefaultRestarts;
    cfg.seed = kMasterSeed;
    cfg.threads = 0;
    const FitResult r = optimize(TargetFunction::parse(e.target), grid, cfg);
    g_retrained.push_back(r);
    ok = ok && r.j_final <= e.retrained_limit;
    detail += fmt("%s J = %.5f (<= %.3f); ", e.target.c_str(), r.j_final, e.retrained_limit);
  }
  const double t = seconds_since(start);
  detail += fmt("%.2f s (limit 60 s)", t);
  return {ok && t < 60.0, detail};
}

bool trace_monotone(const FitResult& r) {
  for (std::size_t i = 1; i < r.j_trace.size(); ++i)
    if (r.j_trace[i].j > r.j_trace[i - 1].j) return false;
  return !r.j_trace.empty() && r.j_trace.back().j == r.j_final;
}

Outcome optimizer_contracts() {
  const SampleGrid grid = make_grid(kPaperSamples, kPaperHalfWidth);
  bool monotone = std::all_of(g_retrained.begin(), g_retrained.end(), trace_monotone);
  std::size_t runs = g_retrained.size();
  for (const auto& e : experiments()) {
    OptimizerConfig cfg;
    for (std::size_t i = 0; i < kDefaultRestarts; ++i) {
      monotone = monotone && trace_monotone(optimize_single(TargetFunction::parse(e.target), grid,
                                                            cfg, restart_seed(kMasterSeed, i)));
      ++runs;
    }
  }

  OptimizerConfig cfg;
  cfg.seed = 2718;
  cfg.restarts = 8;
  cfg.threads = 1;
  const TargetFunction sig = TargetFunction::sigmoid();
  const FitResult serial = optimize(sig, grid, cfg);
  cfg.threads = 4;
  const FitResult parallel_a = optimize(sig, grid, cfg);
  const FitResult parallel_b = optimize(sig, grid, cfg);
  const bool identical = serial == parallel_a && parallel_a == parallel_b;

  const CircuitParams truth{0.4, -0.9, DiagonalObservable{{0.5, -1.2, 1.7, 0.3}}};
  const TargetFunction self = TargetFunction::custom("self", [truth](double x) { return fhat(truth, x); });
  OptimizerConfig self_cfg;
  CircuitParams start = truth;
  start.theta1 += 0.3;
  start.theta2 -= 0.3;
  for (auto& g : start.observable.g) g += 0.3;
  self_cfg.init = start;
  const double j_self = optimize(self, grid, self_cfg).j_final;

  return {monotone && identical && j_self <= 1e-3,
          fmt("monotone traces on %zu runs: %s; identical across thread counts: %s; "
              "self-fit J = %.3e (<= 1e-3)",
              runs, monotone ? "yes" : "no", identical ? "yes" : "no", j_self)};
}

Outcome io_contracts() {
  testing::ParamSampler rng(5);
  std::size_t exact = 0;
  for (int i = 0; i < 1000; ++i) {
    std::array<double, 6> v;
    for (auto& d : v) d = rng.uniform(-1e3, 1e3) * std::pow(10.0, rng.uniform(-20, 20));
    const auto back = parse_params(serialize_params(CircuitParams::from_array(v))).to_array();
    bool same = true;
    for (int k = 0; k < 6; ++k)
      same = same && std::bit_cast<std::uint64_t>(back[k]) == std::bit_cast<std::uint64_t>(v[k]);
    exact += same;
  }

  const fs::path out = fs::temp_directory_path() / "qubitfit_acceptance_reproduce";
  fs::remove_all(out);
  std::ostringstream cout_buf, cerr_buf;
  const int code = cli::run({"qubitfit", "reproduce", "--out-dir", out.string(), "--data-dir",
                             kDataDir.string(), "--seed", std::to_string(kMasterSeed),
                             "--threads", "0"},
                            cout_buf, cerr_buf);
  std::size_t rows = 0;
  std::string md;
  if (fs::exists(out / "reproduce.md")) {
    md = read_text_file(out / "reproduce.md");
    for (const char* t : {"quadratic", "gaussian", "sigmoid"})
      for (const char* src : {"published", "retrained"})
        rows += md.find(std::string("| ") + t + " | " + src + " |") != std::string::npos;
  }
  fs::remove_all(out);
  return {exact == 1000 && code == 0 && rows == 6,
          fmt("round trip exact %zu/1000; reproduce exit %d; table rows %zu/6", exact, code, rows)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 oracle equivalence", oracle_equivalence},
      {"2 normalization and boundedness", normalization_and_bounds},
      {"3 cubic form (remainder order, finite differences)", theorem_check},
      {"4 published parameters", published_parameters},
      {"5 retraining at paper scale", retraining},
      {"6 optimizer contracts", optimizer_contracts},
      {"7 I/O contracts", io_contracts},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("[%s] criterion %s: %s\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
