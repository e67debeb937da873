#include "qubitfit/objective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "qubitfit/numeric_text.hpp"

namespace qubitfit {

TargetFunction::TargetFunction(TargetKind kind, std::string name,
                               std::function<double(double)> fn)
    : kind_(kind), name_(std::move(name)), fn_(std::move(fn)) {}

TargetFunction TargetFunction::quadratic() {
  return {TargetKind::quadratic, "quadratic", [](double x) { return x * x; }};
}

TargetFunction TargetFunction::gaussian() {
  return {TargetKind::gaussian, "gaussian",
          [](double x) { return std::exp(-x * x); }};
}

TargetFunction TargetFunction::sigmoid() {
  return {TargetKind::sigmoid, "sigmoid", [](double x) { return std::tanh(x); }};
}

TargetFunction TargetFunction::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty())
    throw std::invalid_argument("polynomial target needs at least one coefficient");
  std::string name = "poly:";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) name += ',';
    name += format_double(coefficients[i]);
  }
  return {TargetKind::custom, std::move(name),
          [c = std::move(coefficients)](double x) {
            double acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
            return acc;
          }};
}

TargetFunction TargetFunction::custom(std::string name,
                                      std::function<double(double)> fn) {
  return {TargetKind::custom, std::move(name), std::move(fn)};
}

TargetFunction TargetFunction::parse(std::string_view spec) {
  if (spec == "quadratic") return quadratic();
  if (spec == "gaussian") return gaussian();
  if (spec == "sigmoid") return sigmoid();
  constexpr std::string_view kPoly = "poly:";
  if (spec.starts_with(kPoly)) {
    std::vector<double> coeffs;
    std::string_view rest = spec.substr(kPoly.size());
    while (true) {
      const auto comma = rest.find(',');
      coeffs.push_back(parse_double(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return polynomial(std::move(coeffs));
  }
  throw std::invalid_argument("unknown target '" + std::string(spec) +
                              "' (expected quadratic, gaussian, sigmoid or poly:c0,c1,...)");
}

SampleGrid::SampleGrid(std::vector<double> points, double x0)
    : points_(std::move(points)), x0_(x0) {}

SampleGrid SampleGrid::reversed() const {
  return SampleGrid(std::vector<double>(points_.rbegin(), points_.rend()), x0_);
}

SampleGrid make_grid(std::size_t n, double x0) {
  if (n < 2) throw std::domain_error("sample grid needs n >= 2");
  if (!(x0 > 0.0) || !std::isfinite(x0))
    throw std::domain_error("sample grid needs a finite x0 > 0");
  std::vector<double> pts(n);
  const double step = 2.0 * x0 / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) pts[i] = -x0 + step * static_cast<double>(i);
  pts.back() = x0;
  return SampleGrid(std::move(pts), x0);
}

double performance_index(const CircuitParams& params, const TargetFunction& t,
                         const SampleGrid& grid) {
  double j = 0.0;
  for (double x : grid.points()) {
    const double r = t(x) - fhat(params, x);
    j += r * r;
  }
  return j;
}

double max_pointwise_error(const CircuitParams& params, const TargetFunction& t,
                           const SampleGrid& grid) {
  double eps = 0.0;
  for (double x : grid.points()) eps = std::max(eps, std::abs(t(x) - fhat(params, x)));
  return eps;
}

}  // namespace qubitfit
