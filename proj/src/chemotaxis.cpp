#include "qubitfit/chemotaxis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace qubitfit {

namespace {

using Point = std::array<double, CircuitParams::kDimension>;

double checked_objective(const CircuitParams& p, const TargetFunction& t,
                         const SampleGrid& grid) {
  const double j = performance_index(p, t, grid);
  if (!std::isfinite(j))
    throw std::runtime_error("objective evaluated to a non-finite value");
  return j;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(sigma0 > 0.0) || !std::isfinite(sigma0))
    throw std::invalid_argument("sigma0 must be finite and > 0");
  if (!(sigma_shrink > 0.0 && sigma_shrink < 1.0))
    throw std::invalid_argument("sigma_shrink must lie in (0, 1)");
  if (fail_streak == 0) throw std::invalid_argument("fail_streak must be >= 1");
  if (restarts == 0) throw std::invalid_argument("restarts must be >= 1");
  if (init && !init->is_finite())
    throw std::invalid_argument("initial parameters must be finite");
}

CircuitParams random_init(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> weight(-2.0, 2.0);
  CircuitParams p;
  p.theta1 = angle(rng);
  p.theta2 = angle(rng);
  for (auto& g : p.observable.g) g = weight(rng);
  return p;
}

FitResult optimize_single(const TargetFunction& t, const SampleGrid& grid,
                          const OptimizerConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  // The init draw and the walk use separate streams so that supplying an
  // explicit init does not shift the walk.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal(0.0, 1.0);

  Point current = (cfg.init ? *cfg.init : random_init(seed)).to_array();
  double j_current = checked_objective(CircuitParams::from_array(current), t, grid);

  FitResult r;
  r.seed = seed;
  r.evals = 1;
  r.j_trace.push_back({0, j_current});

  double sigma = cfg.sigma0;
  std::size_t failures = 0;
  bool running = false;
  Point direction{};

  for (std::size_t it = 1; it <= cfg.iterations; ++it) {
    if (!running)
      for (auto& d : direction) d = sigma * normal(rng);

    Point candidate;
    for (std::size_t i = 0; i < candidate.size(); ++i)
      candidate[i] = current[i] + direction[i];
    const double j = checked_objective(CircuitParams::from_array(candidate), t, grid);
    ++r.evals;

    if (j < j_current) {
      current = candidate;
      j_current = j;
      running = true;
      failures = 0;
      r.j_trace.push_back({it, j_current});
    } else {
      running = false;
      if (++failures >= cfg.fail_streak) {
        sigma *= cfg.sigma_shrink;
        failures = 0;
      }
    }
  }
  if (r.j_trace.back().iteration != cfg.iterations)
    r.j_trace.push_back({cfg.iterations, j_current});

  r.best = CircuitParams::from_array(current);
  r.j_final = j_current;
  r.epsilon = max_pointwise_error(r.best, t, grid);
  return r;
}

FitResult optimize(const TargetFunction& t, const SampleGrid& grid,
                   const OptimizerConfig& cfg) {
  cfg.validate();
  std::vector<FitResult> runs(cfg.restarts);
  std::vector<std::exception_ptr> errors(cfg.restarts);

  std::size_t threads = cfg.threads == 0
                            ? std::max(1u, std::thread::hardware_concurrency())
                            : cfg.threads;
  threads = std::min(threads, cfg.restarts);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.restarts; i = next++) {
      try {
        runs[i] = optimize_single(t, grid, cfg, restart_seed(cfg.seed, i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t best = 0;
  std::size_t evals = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    evals += runs[i].evals;
    if (runs[i].j_final < runs[best].j_final) best = i;
  }
  FitResult out = std::move(runs[best]);
  out.best_restart = best;
  out.evals = evals;
  out.seed = cfg.seed;
  return out;
}

}  // namespace qubitfit
