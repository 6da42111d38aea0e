#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "mocposite/branches.hpp"
#include "mocposite/continuation.hpp"
#include "mocposite/quadrature.hpp"
#include "mocposite/verify.hpp"

namespace py = pybind11;

namespace {

using namespace mocposite;

PolyPath make_path(const std::vector<Complex>& points, bool closed) {
  PolyPath path;
  path.points = points;
  path.closed = closed;
  return path;
}

StandardDomain standard_from_name(const std::string& name) {
  if (name == "slit_interval") return StandardDomain::slit_interval;
  if (name == "double_ray") return StandardDomain::double_ray;
  if (name == "comb") return StandardDomain::comb;
  if (name == "double_spiral") return StandardDomain::double_spiral;
  if (name == "sine_slits") return StandardDomain::sine_slits;
  throw UsageError("unknown standard domain: " + name);
}

py::dict trace_to_dict(const ContinuationTrace& trace) {
  py::list samples;
  for (const auto& [z, w] : trace.samples) samples.append(py::make_tuple(z, w));
  py::dict d;
  d["samples"] = samples;
  d["terminal"] = trace.terminal;
  d["refinements"] = trace.refinements;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Single-valued branches of many-valued analytic functions: evaluation, "
      "analytic continuation along paths, parity probes, and contour quadrature.";

  // The base is registered first and the derived types after it, so the
  // LIFO translator chain matches derived C++ exceptions before the base;
  // passing the base handle makes them python subclasses of Error too.
  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<GeometryError>(m, "GeometryError", base.ptr());
  py::register_exception<SingularityError>(m, "SingularityError", base.ptr());
  py::register_exception<StepError>(m, "StepError", base.ptr());
  py::register_exception<AmbiguityError>(m, "AmbiguityError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  m.def("eval_f1", &eval_f1, py::arg("z"));
  m.def("eval_f2", &eval_f2, py::arg("z"));
  m.def("eval_f3", &eval_f3, py::arg("z"));
  m.def("eval_log_z2", &eval_log_z2, py::arg("z"));
  m.def("eval_log_sin", &eval_log_sin, py::arg("z"));
  m.def("eval_cos_sqrt", &eval_cos_sqrt, py::arg("z"));
  m.def("joukowski", &joukowski, py::arg("z"));
  m.def("joukowski_inverse_disk", &joukowski_inverse_disk, py::arg("c"));
  m.def(
      "evaluate_branch",
      [](const std::string& branch, Complex z) {
        return evaluate_branch(branch_from_string(branch), z);
      },
      py::arg("branch"), py::arg("z"));

  m.def(
      "estimate_order",
      [](const Evaluator& f, const std::vector<double>& radii) {
        return estimate_order(f, radii);
      },
      py::arg("f"), py::arg("radii"));

  m.def("crack_integral", &crack_integral, py::arg("z"), py::arg("n"));
  m.def("bessel_j0_quadrature", &bessel_j0_quadrature, py::arg("z"), py::arg("n"));
  m.def("bessel_j0_series", &bessel_j0_series, py::arg("z"));

  m.def(
      "continue_sqrt",
      [](const Evaluator& g, const std::vector<Complex>& points, bool closed, Complex w0) {
        return trace_to_dict(continue_sqrt(g, make_path(points, closed), w0));
      },
      py::arg("g"), py::arg("points"), py::arg("closed"), py::arg("w0"));
  m.def(
      "continue_log",
      [](const Evaluator& g, const std::vector<Complex>& points, bool closed, Complex u0) {
        return trace_to_dict(continue_log(g, make_path(points, closed), u0));
      },
      py::arg("g"), py::arg("points"), py::arg("closed"), py::arg("u0"));

  m.def(
      "monodromy_of_loop",
      [](const std::string& equation, const Evaluator& g,
         const std::vector<Complex>& points, Complex seed) {
        Equation eq = equation == "sqrt"  ? Equation::sqrt_of_g
                      : equation == "log" ? Equation::log_of_g
                                          : throw UsageError("equation must be sqrt or log");
        return monodromy_of_loop(eq, g, make_path(points, true), seed);
      },
      py::arg("equation"), py::arg("g"), py::arg("points"), py::arg("seed"));

  m.def(
      "parity_probe",
      [](const std::string& standard, Complex z0, const std::vector<Complex>& points) {
        SlitDomain domain = make_standard_domain(standard_from_name(standard), 10.0);
        return to_string(parity_probe(domain, z0, make_path(points, false)));
      },
      py::arg("standard"), py::arg("z0"), py::arg("points"));

  m.def(
      "run_suite",
      [](const std::string& suite, std::optional<double> tol, std::optional<int> n,
         std::uint64_t seed) {
        SuiteOptions opts;
        opts.tol_override = tol;
        opts.n_override = n;
        opts.seed = seed;
        VerificationReport report = run_suite(suite_from_string(suite), opts);
        py::list records;
        for (const auto& rec : report.records) {
          py::dict d;
          d["name"] = rec.name;
          d["computed"] = rec.computed;
          d["expected"] = rec.expected;
          d["abs_err"] = rec.abs_err;
          d["tol"] = rec.tol;
          d["pass"] = rec.pass;
          records.append(d);
        }
        py::dict out;
        out["records"] = records;
        out["total"] = report.total;
        out["passed"] = report.passed;
        out["wall_time_ms"] = report.wall_time_ms;
        return out;
      },
      py::arg("suite"), py::arg("tol") = py::none(), py::arg("n") = py::none(),
      py::arg("seed") = 0);
}
