#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xwell/bound.hpp"
#include "xwell/curve_table.hpp"
#include "xwell/errors.hpp"
#include "xwell/oracle.hpp"
#include "xwell/scatter.hpp"
#include "xwell/semiclassical.hpp"
#include "xwell/specfun.hpp"

#include <sstream>

namespace py = pybind11;
using namespace xwell;

namespace {

std::string table_text(const CurveTable& t, const std::string& format)
{
    std::ostringstream os;
    emit(t, parse_format(format), os);
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact and semiclassical solver for the 1-D exponential open "
              "well and bottomless barrier";

    py::register_exception<Error>(m, "XwellError");

    py::class_<WellParams>(m, "WellParams")
        .def(py::init([](double v0, double a, double c) {
                 WellParams p{v0, a, c};
                 validate(p);
                 return p;
             }),
             py::arg("v0") = 1.0, py::arg("a") = 1.0,
             py::arg("two_mu_over_hbar2") = 1.0)
        .def_readwrite("v0", &WellParams::v0)
        .def_readwrite("a", &WellParams::a)
        .def_readwrite("two_mu_over_hbar2", &WellParams::two_mu_over_hbar2);

    py::class_<BarrierParams>(m, "BarrierParams")
        .def(py::init([](double u0, double a, double c) {
                 BarrierParams p{u0, a, c};
                 validate(p);
                 return p;
             }),
             py::arg("u0") = 5.0, py::arg("a") = 1.0,
             py::arg("two_mu_over_hbar2") = 1.0)
        .def_readwrite("u0", &BarrierParams::u0)
        .def_readwrite("a", &BarrierParams::a)
        .def_readwrite("two_mu_over_hbar2", &BarrierParams::two_mu_over_hbar2);

    py::class_<bound::Eigenstate>(m, "Eigenstate")
        .def_readonly("n", &bound::Eigenstate::n)
        .def_readonly("energy", &bound::Eigenstate::energy)
        .def_readonly("k", &bound::Eigenstate::k)
        .def_readonly("norm_constant", &bound::Eigenstate::norm_constant)
        .def_property_readonly("parity",
                               [](const bound::Eigenstate& s) {
                                   return s.parity == bound::Parity::even ? "even"
                                                                          : "odd";
                               })
        .def("__repr__", [](const bound::Eigenstate& s) {
            std::ostringstream os;
            os << "Eigenstate(n=" << s.n << ", E=" << s.energy << ")";
            return os.str();
        });

    py::class_<scatter::ScatterPoint>(m, "ScatterPoint")
        .def_readonly("energy", &scatter::ScatterPoint::energy)
        .def_readonly("p", &scatter::ScatterPoint::p)
        .def_readonly("r_amp", &scatter::ScatterPoint::r_amp)
        .def_readonly("t_ratio", &scatter::ScatterPoint::t_ratio)
        .def_readonly("r", &scatter::ScatterPoint::r)
        .def_readonly("t", &scatter::ScatterPoint::t);

    py::class_<CurveTable>(m, "CurveTable")
        .def_property_readonly("columns",
                               [](const CurveTable& t) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& c : t.columns)
                                       out.emplace_back(c.name, c.unit);
                                   return out;
                               })
        .def_readonly("rows", &CurveTable::rows)
        .def_readonly("metadata", &CurveTable::metadata)
        .def("to_csv", [](const CurveTable& t) { return table_text(t, "csv"); })
        .def("to_json", [](const CurveTable& t) { return table_text(t, "json"); });

    m.def("potential_value",
          py::overload_cast<const WellParams&, double>(&potential_value),
          py::arg("params"), py::arg("x"));
    m.def("potential_value",
          py::overload_cast<const BarrierParams&, double>(&potential_value),
          py::arg("params"), py::arg("x"));
    m.def("turning_points",
          py::overload_cast<const WellParams&, double>(&turning_points),
          py::arg("params"), py::arg("energy"));
    m.def("turning_points",
          py::overload_cast<const BarrierParams&, double>(&turning_points),
          py::arg("params"), py::arg("energy"));

    m.def("solve_spectrum",
          [](const WellParams& p, int n_max) { return bound::solve_spectrum(p, n_max); },
          py::arg("params"), py::arg("n_max"));
    m.def("eigenfunction", &bound::eigenfunction, py::arg("params"), py::arg("state"),
          py::arg("x"));
    m.def("count_nodes", &bound::count_nodes, py::arg("params"), py::arg("state"),
          py::arg("grid_points") = 4001);
    m.def("normalize", &bound::normalize, py::arg("params"), py::arg("state"),
          py::arg("cap_scale") = 1.0);
    m.def("x_cap", &bound::x_cap, py::arg("params"));

    m.def("action_f",
          [](const WellParams& p, double e) { return semiclassical::action_f(p, e).value; },
          py::arg("params"), py::arg("energy"));
    m.def("wkb_spectrum", &semiclassical::wkb_spectrum, py::arg("params"),
          py::arg("n_max"));
    m.def("barrier_action_F",
          [](const BarrierParams& p, double e) {
              return semiclassical::barrier_action_F(p, e).value;
          },
          py::arg("params"), py::arg("energy"));
    m.def("t_wkb", &semiclassical::t_wkb, py::arg("params"), py::arg("energy"));
    m.def("wkb_pole_condition", &semiclassical::wkb_pole_condition, py::arg("params"),
          py::arg("n"));

    m.def("rt_probabilities", &scatter::rt_probabilities, py::arg("params"),
          py::arg("energy"));
    m.def("sweep",
          [](const BarrierParams& p, double e_min, double e_max, int points,
             int threads) {
              return scatter::sweep(p, {e_min, e_max, points}, threads);
          },
          py::arg("params"), py::arg("e_min"), py::arg("e_max"), py::arg("points"),
          py::arg("threads") = 1);
    m.def("find_crossover", &scatter::find_crossover, py::arg("params"),
          py::arg("e_lo"), py::arg("e_hi"));
    m.def("pole_locate",
          [](const WellParams& p, int n_max) {
              std::vector<std::pair<double, std::string>> out;
              for (const auto& [e, kind] : scatter::pole_locate(p, n_max))
                  out.emplace_back(e, kind == scatter::PoleKind::k_zero ? "K"
                                                                        : "Kprime");
              return out;
          },
          py::arg("params"), py::arg("n_max"));
    m.def("substituted_rt", &scatter::substituted_rt, py::arg("params"),
          py::arg("energy"));

    m.def("gamma_complex", &specfun::gamma_complex, py::arg("z"));
    m.def("bessel_j",
          [](Complex nu, double z) { return specfun::bessel_j(nu, z).value; },
          py::arg("nu"), py::arg("z"));
    m.def("hankel_pair",
          [](Complex nu, double z) {
              auto h = specfun::hankel_pair(nu, z);
              return std::make_pair(h.h1, h.h2);
          },
          py::arg("nu"), py::arg("z"));
    m.def("k_imag_order", &specfun::k_imag_order, py::arg("nu_im"), py::arg("x"));
    m.def("k_imag_order_deriv", &specfun::k_imag_order_deriv, py::arg("nu_im"),
          py::arg("x"));

    m.def("selfcheck", []() {
        std::ostringstream os;
        bool ok = oracle::selfcheck(os);
        return std::make_pair(ok, os.str());
    });
}
