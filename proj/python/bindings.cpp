#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chebrate/analysis.hpp"
#include "chebrate/approx.hpp"
#include "chebrate/coeffs.hpp"
#include "chebrate/errors.hpp"
#include "chebrate/remez.hpp"
#include "chebrate/serialize.hpp"
#include "chebrate/tails.hpp"

namespace py = pybind11;
using namespace chebrate;

namespace {

std::vector<double> span_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_chebrate, m) {
  m.doc() = "Chebyshev, Legendre and best approximation of functions with an algebraic singularity";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvalidModel>(m, "InvalidModel", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
  py::register_exception<ToleranceError>(m, "ToleranceError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<SingularSystemError>(m, "SingularSystemError", PyExc_RuntimeError);
  py::register_exception<CertificateError>(m, "CertificateError", PyExc_RuntimeError);

  py::class_<ModelFunction>(m, "ModelFunction")
      .def(py::init<double, double, RealFunction, RealFunction, std::string>(), py::arg("xi"),
           py::arg("alpha"), py::arg("g"), py::arg("g_prime"), py::arg("g_name") = "custom")
      .def_property_readonly("xi", &ModelFunction::xi)
      .def_property_readonly("alpha", &ModelFunction::alpha)
      .def_property_readonly("g_name", &ModelFunction::g_name)
      .def("__call__", &ModelFunction::evaluate)
      .def("derivative", &ModelFunction::derivative);
  m.def("make_model", &make_model, py::arg("xi"), py::arg("alpha"), py::arg("g") = "one");

  py::class_<ChebSeries>(m, "ChebSeries")
      .def_static("from_effective", &ChebSeries::from_effective)
      .def_static("from_prime", &ChebSeries::from_prime)
      .def_static("from_double_prime", &ChebSeries::from_double_prime)
      .def_property_readonly("degree", &ChebSeries::degree)
      .def_property_readonly("coeffs", [](const ChebSeries& s) { return span_vec(s.coeffs()); })
      .def("__call__", &ChebSeries::operator());
  m.def("differentiate_series", &differentiate_series);
  m.def("eval_T", &eval_T);
  m.def("eval_U", &eval_U);
  m.def("eval_P", &eval_P);

  m.def("cheb_coeffs_quad", [](const ModelFunction& f, std::size_t max_k, double tol) {
    return cheb_coeffs_quad(f, max_k, tol).values;
  }, py::arg("model"), py::arg("max_k"), py::arg("tol") = 1e-12);
  m.def("cheb_coeff_asym", &cheb_coeff_asym);

  py::class_<Approximant>(m, "Approximant")
      .def_property_readonly("method", [](const Approximant& a) { return to_string(a.method()); })
      .def_property_readonly("degree", &Approximant::degree)
      .def_property_readonly("coeffs", [](const Approximant& a) { return span_vec(a.coeffs()); })
      .def_property_readonly("provenance", &Approximant::provenance)
      .def("__call__", &Approximant::operator())
      .def("to_json", [](const Approximant& a) { return to_json(a); });
  m.def("approximant_from_json", &approximant_from_json);
  m.def("cheb_projection", &cheb_projection, py::arg("model"), py::arg("n"), py::arg("tol") = 1e-12);
  m.def("legendre_projection", &legendre_projection, py::arg("model"), py::arg("n"),
        py::arg("tol") = 1e-12);
  m.def("interp_first", &interp_first);
  m.def("interp_second", &interp_second);
  m.def("max_error", [](const RealFunction& f, const Approximant& a, const std::vector<double>& grid) {
    return max_error(f, a, grid);
  });
  m.def("measurement_grid", &measurement_grid, py::arg("points") = 10001,
        py::arg("xi") = std::optional<double>{});

  py::class_<RemezResult>(m, "RemezResult")
      .def_readonly("poly", &RemezResult::poly)
      .def_readonly("reference", &RemezResult::reference)
      .def_readonly("levelled_error", &RemezResult::levelled_error)
      .def_readonly("max_error", &RemezResult::max_error)
      .def_readonly("iterations", &RemezResult::iterations)
      .def_readonly("converged", &RemezResult::converged)
      .def_property_readonly("dlvp_lower", [](const RemezResult& r) { return r.certificate.dlvp_lower; })
      .def_property_readonly("defect",
                             [](const RemezResult& r) { return r.certificate.equioscillation_defect; })
      .def("to_json", [](const RemezResult& r) { return to_json(r); });
  m.def("best_approx", [](const RealFunction& f, std::size_t n, std::size_t grid_density,
                          std::size_t max_iter, std::optional<double> defect_tol,
                          const std::vector<double>& singular, std::optional<RealFunction> derivative) {
    RemezOptions o{grid_density, max_iter, defect_tol, {}};
    if (derivative) {
      o.derivative = [&d = *derivative](double x) {
        py::gil_scoped_acquire acquire;
        return d(x);
      };
    }
    py::gil_scoped_release release;
    return best_approx(
        [&f](double x) {
          py::gil_scoped_acquire acquire;
          return f(x);
        },
        n, o, singular);
  }, py::arg("f"), py::arg("n"), py::arg("grid_density") = 30, py::arg("max_iter") = 100,
     py::arg("defect_tol") = std::optional<double>{}, py::arg("singular_points") = std::vector<double>{},
     py::arg("derivative") = std::optional<RealFunction>{});
  m.def("best_approx_model", [](const ModelFunction& f, std::size_t n) { return best_approx(f, n); },
        py::arg("model"), py::arg("n"));

  m.def("psi", [](double x, double nu, std::size_t n, double tol, const std::string& part) {
    if (part != "cos" && part != "sin") throw std::invalid_argument("part must be 'cos' or 'sin'");
    return psi_oracle(PsiQuery(x, nu, n, tol), part == "cos" ? PsiPart::cos : PsiPart::sin).value;
  }, py::arg("x"), py::arg("nu"), py::arg("n"), py::arg("tol") = 1e-12, py::arg("part") = "cos");
  m.def("psi_asym", [](double x, double nu, std::size_t n, const std::string& part) {
    if (part != "cos" && part != "sin") throw std::invalid_argument("part must be 'cos' or 'sin'");
    return psi_asym(PsiQuery(x, nu, n), part == "cos" ? PsiPart::cos : PsiPart::sin);
  }, py::arg("x"), py::arg("nu"), py::arg("n"), py::arg("part") = "cos");
  m.def("hurwitz_zeta", &hurwitz_zeta);

  m.def("predict_pointwise", &predict_pointwise);
  m.def("max_error_limit", &max_error_limit);
  m.def("superconv_interior",
        [](double xi, std::size_t n, double eps) {
          const SuperconvSet s = superconv_interior(xi, n, eps);
          return py::make_tuple(s.points, s.residuals, s.filtered);
        },
        py::arg("xi"), py::arg("n"), py::arg("eps") = 0.1);
  m.def("superconv_endpoint", [](double xi, std::size_t n, double eps) {
    const SuperconvSet s = superconv_endpoint(xi, n, eps);
    return py::make_tuple(s.points, s.residuals, s.filtered);
  });
  m.def("fit_rate", [](const std::vector<double>& ns, const std::vector<double>& errs) {
    const RateFit f = fit_rate(ns, errs);
    return py::make_tuple(f.slope, f.intercept, f.r2);
  });
}
