#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spindefect/dynamics.hpp"
#include "spindefect/entanglement.hpp"
#include "spindefect/greens.hpp"
#include "spindefect/model.hpp"
#include "spindefect/numerics.hpp"
#include "spindefect/transport.hpp"

namespace py = pybind11;
using namespace spindefect;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Single-excitation XY ring with a diagonal field defect";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<DefectLattice>(m, "DefectLattice")
      .def(py::init([](double h, double J, double alpha, Site l) {
             return DefectLattice{h, J, alpha, l};
           }),
           py::arg("h") = 1.0, py::arg("J") = 1.0, py::arg("alpha") = -2.0,
           py::arg("defect_site") = 0)
      .def_readwrite("h", &DefectLattice::field_h)
      .def_readwrite("J", &DefectLattice::coupling_J)
      .def_readwrite("alpha", &DefectLattice::alpha)
      .def_readwrite("defect_site", &DefectLattice::defect_site)
      .def_property_readonly("eps", &DefectLattice::defect_eps);

  py::class_<ChainSpec>(m, "ChainSpec")
      .def(py::init([](long n, double h, double J, double alpha, Site l) {
             ChainSpec spec = ChainSpec::with_alpha(n, h, J, alpha, l);
             spec.validate();
             return spec;
           }),
           py::arg("n_sites") = 401, py::arg("h") = 1.0, py::arg("J") = 1.0,
           py::arg("alpha") = -2.0, py::arg("defect_site") = 0)
      .def_readonly("n_sites", &ChainSpec::n_sites)
      .def_readonly("h", &ChainSpec::field_h)
      .def_readonly("J", &ChainSpec::coupling_J)
      .def_readonly("eps", &ChainSpec::defect_eps)
      .def_readonly("defect_site", &ChainSpec::defect_site)
      .def_property_readonly("alpha", &ChainSpec::alpha)
      .def("lattice", &ChainSpec::lattice);

  py::class_<LocalizedState>(m, "LocalizedState")
      .def_readonly("energy", &LocalizedState::energy_loc)
      .def_readonly("xi", &LocalizedState::xi)
      .def_readonly("alpha", &LocalizedState::alpha)
      .def_property_readonly("localization_length", &LocalizedState::localization_length)
      .def("amplitude", &LocalizedState::amplitude, py::arg("n"));

  py::class_<TransportResult>(m, "TransportResult")
      .def_readonly("alpha", &TransportResult::alpha)
      .def_readonly("T", &TransportResult::transmission)
      .def_readonly("R", &TransportResult::reflection)
      .def_readonly("residual", &TransportResult::residual)
      .def_readonly("t_star", &TransportResult::t_star);

  m.def("bessel_j", &bessel_j, py::arg("n"), py::arg("x"));
  m.def("hamiltonian", [](const ChainSpec& spec) { return build_hamiltonian(spec).matrix; });
  m.def(
      "diagonalize",
      [](const ChainSpec& spec) {
        const Spectrum s = diagonalize(build_hamiltonian(spec));
        return py::make_tuple(s.eigenvalues, s.eigenvectors);
      },
      "Eigenvalues (ascending) and eigenvectors as columns");
  m.def("inverse_localization_length", &inverse_localization_length, py::arg("alpha"));
  m.def("localized_state", &localized_state, py::arg("lattice"));
  m.def("localized_concurrence", &localized_concurrence, py::arg("lattice"), py::arg("i"),
        py::arg("j"));
  m.def("transition_amplitude_numeric", &transition_amplitude_numeric, py::arg("spec"),
        py::arg("sender"), py::arg("receiver"), py::arg("t"));
  m.def("transition_amplitude_integral", &transition_amplitude_integral, py::arg("lattice"),
        py::arg("sender"), py::arg("receiver"), py::arg("t"), py::arg("node_count") = 0);
  m.def("asymptotic_concurrence", &asymptotic_concurrence, py::arg("alpha"), py::arg("sender"),
        py::arg("receiver"), py::arg("defect_site"), py::arg("tau"));
  m.def("analytic_transmission_reference", &analytic_transmission_reference, py::arg("alpha"));
  m.def(
      "transport_coefficients",
      [](const ChainSpec& spec, Site sender) { return transport_coefficients(spec, sender); },
      py::arg("spec"), py::arg("sender") = -10);
  m.def(
      "transport_sweep",
      [](const std::vector<double>& alphas, Site sender, const ChainSpec& base) {
        py::gil_scoped_release release;
        return transport_sweep(alphas, sender, base);
      },
      py::arg("alphas"), py::arg("sender"), py::arg("base"));
}
