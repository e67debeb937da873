#include "qubitfit/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qubitfit/analytic.hpp"

namespace qubitfit {

Draw random_draw(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> weight(-2.0, 2.0);
  Draw d;
  d.seed = seed;
  d.params.theta1 = angle(rng);
  d.params.theta2 = angle(rng);
  for (auto& g : d.params.observable.g) g = weight(rng);
  d.x = angle(rng);
  return d;
}

double finite_difference_coefficient(const CircuitParams& params, int k, double h) {
  auto f = [&](double x) { return closed_form_expectation(params, x); };
  switch (k) {
    case 0: return f(0.0);
    case 1: return (f(h) - f(-h)) / (2.0 * h);
    case 2: return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h) / 2.0;
    case 3:
      return (f(2.0 * h) - 2.0 * f(h) + 2.0 * f(-h) - f(-2.0 * h)) / (2.0 * h * h * h) / 6.0;
    default: throw std::out_of_range("finite difference order must be 0..3");
  }
}

double remainder_ratio(const CircuitParams& params, double x) {
  return cubic_remainder_check(params, 2.0 * x) / cubic_remainder_check(params, x);
}

std::vector<SuiteResult> run_verification(std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  auto named = [](std::string name) {
    SuiteResult r;
    r.name = std::move(name);
    return r;
  };

  SuiteResult oracle = named("oracle-equivalence");
  SuiteResult norm = named("normalization");
  SuiteResult bounds = named("boundedness");
  SuiteResult remainder = named("remainder-order");
  remainder.worst = 16.0;  // nominal ratio for O(x^4)
  SuiteResult taylor = named("taylor-coefficients");

  auto record = [](SuiteResult& s, bool ok, double deviation, std::uint64_t draw_seed) {
    ++s.trials;
    s.worst = std::max(s.worst, deviation);
    if (!ok && s.passed) {
      s.passed = false;
      s.failing_seed = draw_seed;
    }
  };

  for (std::size_t i = 0; i < trials; ++i) {
    const Draw d = random_draw(seed + i);
    const StateVector psi = prepare_state(d.params, d.x);
    const double sim = expectation(psi, d.params.observable);

    const double oracle_dev = std::abs(sim - closed_form_expectation(d.params, d.x));
    record(oracle, oracle_dev <= tolerance::kOracle, oracle_dev, d.seed);

    double imag = 0.0;
    for (const auto& a : psi.amp) imag = std::max(imag, std::abs(a.imag()));
    const double norm_dev = std::abs(psi.norm_squared() - 1.0);
    record(norm, norm_dev <= tolerance::kNorm && imag <= tolerance::kImag, norm_dev, d.seed);

    const double lo = d.params.observable.min() - tolerance::kBound;
    const double hi = d.params.observable.max() + tolerance::kBound;
    const double excess = std::max({0.0, lo - sim, sim - hi});
    record(bounds, sim >= lo && sim <= hi, excess, d.seed);

    const double ratio = remainder_ratio(d.params, 1e-2);
    const bool ratio_ok = ratio >= tolerance::kRemainderRatioLo &&
                          ratio <= tolerance::kRemainderRatioHi;
    ++remainder.trials;
    if (!ratio_ok && remainder.passed) {
      remainder.passed = false;
      remainder.failing_seed = d.seed;
      remainder.worst = ratio;
    } else if (remainder.passed &&
               std::abs(std::log2(ratio) - 4.0) > std::abs(std::log2(remainder.worst) - 4.0)) {
      remainder.worst = ratio;
    }

    const CubicPoly cubic = cubic_coefficients(d.params);
    const double scale = std::max(std::abs(d.params.observable.max()),
                                  std::abs(d.params.observable.min()));
    double fd_dev = 0.0;
    for (int k = 0; k <= 3; ++k) {
      const double a = cubic.coefficient(k);
      const double fd = finite_difference_coefficient(d.params, k, tolerance::kFiniteDifferenceStep);
      fd_dev = std::max(fd_dev, std::abs(a - fd) / std::max(std::abs(a), scale));
    }
    record(taylor, fd_dev <= tolerance::kFiniteDifference, fd_dev, d.seed);
  }
  return {oracle, norm, bounds, remainder, taylor};
}

}  // namespace qubitfit
