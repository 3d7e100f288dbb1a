#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "warpcurv/closed_forms.hpp"
#include "warpcurv/cone_geometry.hpp"
#include "warpcurv/curvature_engine.hpp"
#include "warpcurv/deficit.hpp"
#include "warpcurv/errors.hpp"
#include "warpcurv/frame_model.hpp"
#include "warpcurv/plane_bounds.hpp"
#include "warpcurv/warp_profiles.hpp"

namespace py = pybind11;
using namespace warpcurv;

namespace {

py::array_t<double> to_array(const CurvatureTensor& t) {
  const auto d = static_cast<py::ssize_t>(t.dim());
  py::array_t<double> out({d, d, d, d});
  std::copy(t.data().begin(), t.data().end(), out.mutable_data());
  return out;
}

CurvatureTensor from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 4 || a.shape(0) != a.shape(1) || a.shape(0) != a.shape(2) || a.shape(0) != a.shape(3))
    throw InputError("curvature tensor must have shape (d, d, d, d)");
  const auto d = static_cast<std::size_t>(a.shape(0));
  CurvatureTensor t(d);
  const double* p = a.data();
  // only canonical representatives are read; set() fills the symmetric images
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l) t.set(i, j, k, l, p[((i * d + j) * d + k) * d + l]);
  return t;
}

py::array_t<double> connection_array(const ConnectionTable& g) {
  constexpr auto d = static_cast<py::ssize_t>(kFrameDim);
  py::array_t<double> out({d, d, d});
  auto m = out.mutable_unchecked<3>();
  for (py::ssize_t k = 0; k < d; ++k)
    for (py::ssize_t i = 0; i < d; ++i)
      for (py::ssize_t j = 0; j < d; ++j) m(k, i, j) = g.gamma(k, i, j).value;
  return out;
}

py::dict bounds_dict(const CurvatureBounds& b) { return py::dict(py::arg("lower") = b.lower, py::arg("upper") = b.upper); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Curvature of warped complex-hyperbolic metrics";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ArithmeticError);
  py::register_exception<NumericsError>(m, "NumericsError", PyExc_RuntimeError);

  m.def("alpha_max", &alpha_max, py::arg("n"));
  m.def("critical_radius", &critical_radius, py::arg("n"));
  m.def("largest_root", &largest_root, py::arg("alpha"), py::arg("n"));
  m.def("alpha_for_degree", &alpha_for_degree, py::arg("d"), py::arg("n"));
  m.def("alpha_for_cone_angle", &alpha_for_cone_angle, py::arg("c"), py::arg("n"));
  m.def("cone_angle_numeric", &cone_angle_numeric, py::arg("alpha"), py::arg("n"), py::arg("offset") = 1e-6);
  m.def(
      "cone_data",
      [](double alpha, int n) {
        const ConeData c = cone_data(alpha, n);
        return py::dict(py::arg("n") = c.n, py::arg("alpha") = c.alpha, py::arg("v") = c.v,
                        py::arg("alpha_max") = c.alpha_max, py::arg("u_alpha") = c.u_alpha,
                        py::arg("c_alpha") = c.c_alpha, py::arg("cone_angle") = c.cone_angle);
      },
      py::arg("alpha"), py::arg("n"));
  m.def(
      "metric_deviation",
      [](double alpha, int n, double u) {
        const MetricDeviation d = metric_deviation(alpha, n, u);
        return py::make_tuple(d.measured, d.bound);
      },
      py::arg("alpha"), py::arg("n"), py::arg("u"));

  py::class_<EinsteinWarp>(m, "EinsteinWarp")
      .def(py::init<int, double>(), py::arg("n"), py::arg("alpha"))
      .def_property_readonly("n", &EinsteinWarp::n)
      .def_property_readonly("alpha", &EinsteinWarp::alpha)
      .def_property_readonly("u_alpha", &EinsteinWarp::u_alpha)
      .def("evaluate",
           [](const EinsteinWarp& w, double u) {
             const WarpValue v = w.evaluate(u);
             return py::make_tuple(v.v, v.dv, v.d2v);
           })
      .def("ode_residual", [](const EinsteinWarp& w, double u) { return ode_residual(w, w.n(), u); })
      .def("__repr__", &EinsteinWarp::label);

  m.def(
      "solve_einstein_from_condition", &solve_einstein_from_condition, py::arg("n"), py::arg("u0"), py::arg("v0"));
  m.def(
      "radial_profile",
      [](const EinsteinWarp& w, double r_max, double step) {
        const auto path = radial_profile(w, r_max, step);
        py::array_t<double> out({static_cast<py::ssize_t>(path.size()), py::ssize_t{4}});
        auto a = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < path.size(); ++i) {
          const auto k = static_cast<py::ssize_t>(i);
          a(k, 0) = path[i].r;
          a(k, 1) = path[i].f;
          a(k, 2) = path[i].f1;
          a(k, 3) = path[i].f2;
        }
        return out;
      },
      py::arg("profile"), py::arg("r_max") = 5.0, py::arg("step") = 1e-3,
      "Columns r, f, f', f''.");
  m.def("gh_ode_residual", &gh_ode_residual, py::arg("f"), py::arg("f1"), py::arg("f2"), py::arg("n"));

  m.def(
      "riemann_numeric",
      [](double sigma, double u, double alpha) { return to_array(riemann_numeric({sigma, u}, EinsteinWarp(3, alpha))); },
      py::arg("sigma"), py::arg("u"), py::arg("alpha"), "Frame-engine curvature of the n = 3 Einstein metric.");
  m.def(
      "riemann_closed_form",
      [](double u, double alpha, int n) { return to_array(riemann_closed_form(u, EinsteinWarp(n, alpha), n)); },
      py::arg("u"), py::arg("alpha"), py::arg("n"));
  m.def(
      "riemann_alpha", [](double u, double alpha, int n) { return to_array(riemann_alpha(u, alpha, n)); },
      py::arg("u"), py::arg("alpha"), py::arg("n"));
  m.def(
      "koszul_connection",
      [](double sigma, double u, double alpha) { return connection_array(koszul_connection({sigma, u}, EinsteinWarp(3, alpha))); },
      py::arg("sigma"), py::arg("u"), py::arg("alpha"));
  m.def(
      "connection_closed_form",
      [](double sigma, double u, double alpha) {
        return connection_array(connection_closed_form({sigma, u}, EinsteinWarp(3, alpha)));
      },
      py::arg("sigma"), py::arg("u"), py::arg("alpha"));
  m.def(
      "jacobi_residual",
      [](double sigma, double u, double alpha) { return jacobi_residual({sigma, u}, EinsteinWarp(3, alpha)); },
      py::arg("sigma"), py::arg("u"), py::arg("alpha"));
  m.def(
      "ricci_diagonal",
      [](double u, double alpha, int n) {
        const RicciDiagonal r = ricci_diagonal(u, EinsteinWarp(n, alpha), n);
        return py::make_tuple(r.horizontal, r.fiber);
      },
      py::arg("u"), py::arg("alpha"), py::arg("n"));

  m.def(
      "sectional_curvature",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& tensor, std::vector<double> a,
         std::vector<double> b) { return sectional_curvature(from_array(tensor), TwoPlane{std::move(a), std::move(b)}); },
      py::arg("tensor"), py::arg("a"), py::arg("b"));
  m.def(
      "curvature_bounds", [](double alpha, int n, double u) { return bounds_dict(curvature_bounds(alpha, n, u)); },
      py::arg("alpha"), py::arg("n"), py::arg("u"));
  m.def(
      "verify_bounds_by_sampling",
      [](double alpha, int n, double u, std::size_t count, std::uint64_t seed, double tolerance) {
        const BoundsReport r = verify_bounds_by_sampling(alpha, n, u, count, seed, tolerance);
        return py::dict(py::arg("bounds") = bounds_dict(r.bounds), py::arg("sample_min") = r.samples.min,
                        py::arg("sample_max") = r.samples.max, py::arg("count") = r.samples.count,
                        py::arg("upper_extremal") = r.upper_extremal, py::arg("lower_extremal") = r.lower_extremal,
                        py::arg("asserted") = r.asserted, py::arg("pass") = r.pass);
      },
      py::arg("alpha"), py::arg("n"), py::arg("u"), py::arg("count") = 100000, py::arg("seed") = 42,
      py::arg("tolerance") = 1e-9);
  m.def(
      "extreme_curvatures_vs_degree",
      [](int n, const std::vector<int>& degrees) {
        const DegreeTable t = extreme_curvatures_vs_degree(n, degrees);
        py::list rows;
        for (const DegreeRow& r : t.rows)
          rows.append(py::dict(py::arg("d") = r.d, py::arg("alpha") = r.alpha, py::arg("u_alpha") = r.u_alpha,
                               py::arg("lower") = r.bounds.lower, py::arg("upper") = r.bounds.upper));
        return py::dict(py::arg("rows") = rows, py::arg("lower_decreasing") = t.lower_decreasing,
                        py::arg("upper_increasing") = t.upper_increasing);
      },
      py::arg("n"), py::arg("degrees"));

  m.def("chi", py::overload_cast<double>(&chi), py::arg("t"));
  m.def(
      "deficit_diagonal",
      [](double alpha, int n, double eta, double u) {
        const DeficitDiagonal d = deficit_diagonal(InterpolatedWarp(n, alpha, eta), n, u);
        return py::make_tuple(d.horizontal, d.fiber);
      },
      py::arg("alpha"), py::arg("n"), py::arg("eta"), py::arg("u"));
  m.def(
      "deficit_decay",
      [](double alpha, int n, const std::vector<double>& etas, int order, int grid) {
        const DeficitDecay d = deficit_decay(alpha, n, etas, order, grid);
        py::list reports;
        for (const DeficitReport& r : d.reports)
          reports.append(py::dict(py::arg("eta") = r.eta, py::arg("sup_by_order") = r.sup_by_order,
                                  py::arg("sup") = r.sup, py::arg("fitted_constant") = r.fitted_constant,
                                  py::arg("l2_per_volume") = r.l2_per_volume));
        return py::dict(py::arg("reports") = reports, py::arg("log_sup_slope") = d.log_sup_slope,
                        py::arg("constant_ratio") = d.constant_ratio,
                        py::arg("l2_strictly_decreasing") = d.l2_strictly_decreasing);
      },
      py::arg("alpha"), py::arg("n"), py::arg("etas"), py::arg("order") = 2, py::arg("grid") = 400);
  m.def(
      "interpolated_curvature_scan",
      [](double alpha, int n, double eta, int points, std::size_t planes, std::uint64_t seed) {
        const CurvatureScan s = interpolated_curvature_scan(alpha, n, eta, points, planes, seed);
        return py::dict(py::arg("max_curvature") = s.max_curvature, py::arg("min_curvature") = s.min_curvature,
                        py::arg("pass") = s.pass);
      },
      py::arg("alpha"), py::arg("n"), py::arg("eta"), py::arg("points") = 50, py::arg("planes_per_point") = 10000,
      py::arg("seed") = 42);
}
