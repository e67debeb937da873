#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "qubitfit/analytic.hpp"
#include "qubitfit/chemotaxis.hpp"
#include "qubitfit/circuit.hpp"
#include "qubitfit/objective.hpp"
#include "qubitfit/params_io.hpp"
#include "qubitfit/verification.hpp"

namespace py = pybind11;
using namespace qubitfit;

namespace {

// str -> named target; callable -> custom target that takes the GIL per call.
TargetFunction to_target(const py::object& target) {
  if (py::isinstance<py::str>(target)) return TargetFunction::parse(target.cast<std::string>());
  if (!PyCallable_Check(target.ptr()))
    throw py::type_error("target must be a name or a callable float -> float");
  auto fn = std::make_shared<py::function>(target.cast<py::function>());
  return TargetFunction::custom("custom", [fn](double x) {
    py::gil_scoped_acquire gil;
    return (*fn)(x).cast<double>();
  });
}

CircuitParams make_params(double theta1, double theta2, std::array<double, 4> g) {
  return CircuitParams{theta1, theta2, DiagonalObservable{g}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-qubit circuit function approximation";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<CircuitParams>(m, "CircuitParams")
      .def(py::init(&make_params), py::arg("theta1") = 0.0, py::arg("theta2") = 0.0,
           py::arg("g") = std::array<double, 4>{0, 0, 0, 0})
      .def_readwrite("theta1", &CircuitParams::theta1)
      .def_readwrite("theta2", &CircuitParams::theta2)
      .def_property(
          "g", [](const CircuitParams& p) { return p.observable.g; },
          [](CircuitParams& p, std::array<double, 4> g) { p.observable.g = g; })
      .def("to_list", &CircuitParams::to_array)
      .def_static("from_list", &CircuitParams::from_array)
      .def(py::self == py::self)
      .def("__repr__", [](const CircuitParams& p) {
        return "CircuitParams(" + serialize_params(p) + ")";
      });

  m.def("prepare_state",
        [](const CircuitParams& p, double x) { return prepare_state(p, x).amp; },
        py::arg("params"), py::arg("x"), "Amplitudes of U|00> in basis order 00, 01, 10, 11.");
  m.def("fhat", &fhat, py::arg("params"), py::arg("x"));
  m.def("closed_form_expectation", &closed_form_expectation, py::arg("params"), py::arg("x"));
  m.def(
      "trig_form",
      [](const CircuitParams& p) {
        const TrigForm t = trig_form(p.observable);
        return std::array<double, 4>{t.c0, t.c1, t.c2, t.c3};
      },
      py::arg("params"));
  m.def(
      "cubic_coefficients",
      [](const CircuitParams& p) {
        const CubicPoly c = cubic_coefficients(p);
        return std::array<double, 4>{c.a0, c.a1, c.a2, c.a3};
      },
      py::arg("params"));
  m.def("cubic_remainder", &cubic_remainder_check, py::arg("params"), py::arg("x"));

  m.def(
      "make_grid",
      [](std::size_t n, double x0) {
        const SampleGrid g = make_grid(n, x0);
        return std::vector<double>(g.points().begin(), g.points().end());
      },
      py::arg("n") = 30, py::arg("x0") = 1.5);
  m.def(
      "performance_index",
      [](const CircuitParams& p, const py::object& target, std::size_t n, double x0) {
        return performance_index(p, to_target(target), make_grid(n, x0));
      },
      py::arg("params"), py::arg("target"), py::arg("n") = 30, py::arg("x0") = 1.5);
  m.def(
      "max_pointwise_error",
      [](const CircuitParams& p, const py::object& target, std::size_t n, double x0) {
        return max_pointwise_error(p, to_target(target), make_grid(n, x0));
      },
      py::arg("params"), py::arg("target"), py::arg("n") = 30, py::arg("x0") = 1.5);

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("best", &FitResult::best)
      .def_readonly("j_final", &FitResult::j_final)
      .def_readonly("epsilon", &FitResult::epsilon)
      .def_readonly("evals", &FitResult::evals)
      .def_readonly("best_restart", &FitResult::best_restart)
      .def_readonly("seed", &FitResult::seed)
      .def_property_readonly("j_trace", [](const FitResult& r) {
        std::vector<std::pair<std::size_t, double>> out;
        for (const auto& t : r.j_trace) out.emplace_back(t.iteration, t.j);
        return out;
      });

  m.def("random_init", &random_init, py::arg("seed"));
  m.def(
      "optimize",
      [](const py::object& target, std::size_t n, double x0, std::size_t iterations,
         std::size_t restarts, std::uint64_t seed, double sigma0, double sigma_shrink,
         std::size_t fail_streak, std::optional<CircuitParams> init, std::size_t threads) {
        const TargetFunction t = to_target(target);
        const SampleGrid grid = make_grid(n, x0);
        OptimizerConfig cfg;
        cfg.iterations = iterations;
        cfg.restarts = restarts;
        cfg.seed = seed;
        cfg.sigma0 = sigma0;
        cfg.sigma_shrink = sigma_shrink;
        cfg.fail_streak = fail_streak;
        cfg.init = init;
        cfg.threads = threads;
        FitResult r;
        {
          py::gil_scoped_release release;
          r = optimize(t, grid, cfg);
        }
        return r;
      },
      py::arg("target"), py::arg("n") = 30, py::arg("x0") = 1.5, py::arg("iterations") = 5000,
      py::arg("restarts") = 10, py::arg("seed") = 42, py::arg("sigma0") = 0.3,
      py::arg("sigma_shrink") = 0.7, py::arg("fail_streak") = 50, py::arg("init") = py::none(),
      py::arg("threads") = 1);

  m.def("parse_params", &parse_params, py::arg("text"));
  m.def("serialize_params", &serialize_params, py::arg("params"));

  m.def(
      "verify",
      [](std::size_t trials, std::uint64_t seed) {
        py::dict out;
        for (const auto& s : run_verification(trials, seed)) out[py::str(s.name)] = s.passed;
        return out;
      },
      py::arg("trials") = 1000, py::arg("seed") = 1);
}
