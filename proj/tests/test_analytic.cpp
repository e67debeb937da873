#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qubitfit/analytic.hpp"
#include "qubitfit/circuit.hpp"
#include "test_support.hpp"

using namespace qubitfit;

namespace {

constexpr double kPi = std::numbers::pi;

// Central differences on the simulator path, k-th Maclaurin coefficient.
double fd_coefficient(const CircuitParams& p, int k, double h) {
  auto f = [&](double x) { return fhat(p, x); };
  switch (k) {
    case 0: return f(0);
    case 1: return (f(h) - f(-h)) / (2 * h);
    case 2: return (f(h) - 2 * f(0) + f(-h)) / (2 * h * h);
    default: return (f(2 * h) - 2 * f(h) + 2 * f(-h) - f(-2 * h)) / (12 * h * h * h);
  }
}

double max_abs_g(const CircuitParams& p) {
  return std::max(std::abs(p.observable.min()), std::abs(p.observable.max()));
}

}  // namespace

TEST_CASE("closed form special cases") {
  testing::ParamSampler rng(1);
  for (int i = 0; i < 50; ++i) {
    CircuitParams p = rng.params();
    const auto& g = p.observable.g;
    const double x = rng.angle();
    p.theta1 = p.theta2 = x;
    CHECK(std::abs(closed_form_expectation(p, x) - (g[0] + g[1] + g[2] + g[3]) / 4) <= 1e-15);
    p.theta1 = p.theta2 = x - kPi / 2;
    CHECK(std::abs(closed_form_expectation(p, x) - g[3]) <= 1e-14);
  }
}

TEST_CASE("closed form agrees with the simulator") {
  testing::ParamSampler rng(77);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const CircuitParams p = rng.params();
    const double x = rng.angle();
    worst = std::max(worst, std::abs(closed_form_expectation(p, x) - fhat(p, x)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("trig form coefficients") {
  auto check = [](std::array<double, 4> g, std::array<double, 4> c) {
    const TrigForm t = trig_form(DiagonalObservable{g});
    CHECK(t.c0 == doctest::Approx(c[0]));
    CHECK(t.c1 == doctest::Approx(c[1]));
    CHECK(t.c2 == doctest::Approx(c[2]));
    CHECK(t.c3 == doctest::Approx(c[3]));
  };
  check({1, 1, 1, 1}, {1, 0, 0, 0});
  check({0, 0, 0, 4}, {1, 1, 1, 1});  // (1 + s2)(1 + s1)
  check({0, 0, 0, 0}, {0, 0, 0, 0});

  testing::ParamSampler rng(8);
  for (int i = 0; i < 500; ++i) {
    const CircuitParams p = rng.params();
    const double x = rng.angle();
    CHECK(std::abs(evaluate(trig_form(p.observable), p, x) - closed_form_expectation(p, x)) <=
          1e-12);
  }
}

TEST_CASE("truncated series product drops high orders") {
  const TruncatedSeries<3> a{{1, 2, 3, 4}};
  const TruncatedSeries<3> b{{5, 6, 7, 8}};
  const TruncatedSeries<3> c = a * b;
  // full product coefficients 5, 16, 34, 60, ... truncated at x^3
  CHECK(c.coeff == std::array<double, 4>{5, 16, 34, 60});
  CHECK(a(2.0) == doctest::Approx(1 + 4 + 12 + 32));
}

TEST_CASE("cubic coefficients of (1 + sin x)^2") {
  const CircuitParams p{0, 0, DiagonalObservable{{0, 0, 0, 4}}};
  for (double x : {-0.3, 0.1, 1.2}) CHECK(fhat(p, x) == doctest::Approx(std::pow(1 + std::sin(x), 2)));
  // (1 + x - x^3/6)^2 = 1 + 2x + x^2 - x^3/3 + O(x^4)
  const CubicPoly c = cubic_coefficients(p);
  CHECK(std::abs(c.a0 - 1) <= 1e-15);
  CHECK(std::abs(c.a1 - 2) <= 1e-15);
  CHECK(std::abs(c.a2 - 1) <= 1e-15);
  CHECK(std::abs(c.a3 + 1.0 / 3) <= 1e-15);
}

TEST_CASE("cubic coefficients of a constant observable") {
  testing::ParamSampler rng(9);
  for (int i = 0; i < 20; ++i) {
    CircuitParams p = rng.params();
    p.observable = DiagonalObservable{{1, 1, 1, 1}};
    const CubicPoly c = cubic_coefficients(p);
    CHECK(std::abs(c.a0 - 1) <= 1e-15);
    CHECK(std::abs(c.a1) <= 1e-15);
    CHECK(std::abs(c.a2) <= 1e-15);
    CHECK(std::abs(c.a3) <= 1e-15);
    CHECK(cubic_remainder_check(p, 0.7) <= 1e-15);
  }
}

TEST_CASE("cubic coefficients match finite differences of the simulator") {
  testing::ParamSampler rng(13);
  for (int i = 0; i < 200; ++i) {
    const CircuitParams p = rng.params();
    const CubicPoly c = cubic_coefficients(p);
    for (int k = 0; k <= 3; ++k) {
      const double a = c.coefficient(k);
      const double rel = std::abs(a - fd_coefficient(p, k, 1e-3)) /
                         std::max(std::abs(a), max_abs_g(p));
      CHECK(rel <= 1e-6);
    }
  }
}

TEST_CASE("cubic remainder scales as x^4") {
  CircuitParams any{0.4, -1.1, DiagonalObservable{{0.3, -1, 2, 0.5}}};
  CHECK(cubic_remainder_check(any, 0.0) <= 1e-14);
  CHECK_THROWS_AS(cubic_remainder_check(any, 1.5), std::domain_error);

  testing::ParamSampler rng(21);
  for (int i = 0; i < 100; ++i) {
    const CircuitParams p = rng.params();
    for (double x : {1e-2, 5e-3}) {
      const double ratio = cubic_remainder_check(p, 2 * x) / cubic_remainder_check(p, x);
      CHECK(ratio >= 4.0);
      CHECK(ratio <= 64.0);
    }
  }
}

TEST_CASE("amplitudes are quadratic up to O(x^3)") {
  testing::ParamSampler rng(31);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const CircuitParams p = rng.params();
    const auto quad = amplitude_quadratics(p);
    auto remainder = [&](int b, double x) {
      return std::abs(prepare_state(p, x).amp[b].real() - quad[b](x));
    };
    const StateVector at_zero = prepare_state(p, 0.0);
    for (int b = 0; b < 4; ++b) {
      CHECK(std::abs(quad[b](0.0) - at_zero.amp[b].real()) <= 1e-15);
      // Each single-qubit amplitude has |k-th derivative| <= 2^-k, so the
      // product's third derivative is bounded by 1.
      for (double x : {0.05, 0.2, 0.5}) CHECK(remainder(b, x) <= x * x * x / 6 + 1e-15);

      // The ratio test needs a non-vanishing cubic term; below ~1e-2 the
      // quartic term can cancel it at these step sizes.
      if (remainder(b, 1e-2) < 1e-8) continue;
      const double ratio = remainder(b, 2e-2) / remainder(b, 1e-2);
      CHECK(ratio >= 2.0);
      CHECK(ratio <= 32.0);
      ++checked;
    }
  }
  CHECK(checked > 350);
}

TEST_CASE("a sign flip in R is caught by the equivalence and remainder checks") {
  auto flipped = [](double phi) {
    Matrix2 r = rotation_matrix(RotationAngle(phi));
    std::swap(r[1], r[2]);  // [[c, s], [-s, c]]
    return r;
  };
  auto mutant_fhat = [&](const CircuitParams& p, double x) {
    const Matrix4 u = multiply(kron(flipped(x - p.theta2), flipped(x - p.theta1)),
                               kron(hadamard(), hadamard()));
    return expectation(apply_matrix(u, basis_state_00()), p.observable);
  };

  testing::ParamSampler rng(41);
  int equivalence_caught = 0, remainder_caught = 0;
  for (int i = 0; i < 100; ++i) {
    const CircuitParams p = rng.params();
    equivalence_caught += std::abs(mutant_fhat(p, 0.3) - closed_form_expectation(p, 0.3)) > 1e-12;
    const CubicPoly c = cubic_coefficients(p);
    const double ratio = std::abs(mutant_fhat(p, 2e-2) - c(2e-2)) / std::abs(mutant_fhat(p, 1e-2) - c(1e-2));
    remainder_caught += ratio < 4.0 || ratio > 64.0;
  }
  CHECK(equivalence_caught >= 95);
  CHECK(remainder_caught >= 95);
}
