#include "jtsim/dynamics.hpp"
#include "jtsim/errors.hpp"
#include "jtsim/model.hpp"
#include "jtsim/operators.hpp"
#include "jtsim/version.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace jtsim;

namespace {

PauliAxis axis_from_string(const std::string& axis) {
    if (axis == "x") return PauliAxis::x;
    if (axis == "z") return PauliAxis::z;
    if (axis == "plus" || axis == "+") return PauliAxis::plus;
    if (axis == "minus" || axis == "-") return PauliAxis::minus;
    throw std::invalid_argument("pauli: axis must be one of x, z, plus, minus");
}

SpectrumMethod method_from_string(const std::string& method) {
    if (method == "resolvent") return SpectrumMethod::resolvent;
    if (method == "time-domain" || method == "time_domain") return SpectrumMethod::time_domain;
    throw std::invalid_argument("emission_spectrum: method must be resolvent or time-domain");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-frequency vibronic circuit simulator: composite-space operator "
              "algebra, Hamiltonian forms, parameter maps, Lindblad dynamics and "
              "emission spectra.";
    m.attr("__version__") = JTSIM_VERSION;

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<HilbertSpace>(m, "HilbertSpace")
        .def_readonly("qubit_dim", &HilbertSpace::qubit_dim)
        .def_readonly("mode_dims", &HilbertSpace::mode_dims)
        .def("dim", &HilbertSpace::dim)
        .def("index", &HilbertSpace::index, py::arg("q"), py::arg("n1"), py::arg("n2"))
        .def(py::self == py::self)
        .def("__repr__", [](const HilbertSpace& s) {
            return "HilbertSpace(2, (" + std::to_string(s.mode_dims[0]) + ", " +
                   std::to_string(s.mode_dims[1]) + "))";
        });

    py::class_<Operator>(m, "Operator")
        .def(py::init<HilbertSpace, Matrix>(), py::arg("space"), py::arg("matrix"))
        .def_property_readonly("space", &Operator::space)
        .def_property_readonly("matrix",
                               [](const Operator& o) -> const Matrix& { return o.matrix(); },
                               py::return_value_policy::copy)
        .def("adjoint", &Operator::adjoint)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("__rmul__", [](const Operator& o, Complex s) { return s * o; })
        .def("__neg__", [](const Operator& o) { return -o; });

    m.def("make_space", &make_space, py::arg("d1"), py::arg("d2"));
    m.def("identity", &identity, py::arg("space"));
    m.def("annihilation", &annihilation, py::arg("space"), py::arg("mode"));
    m.def("pauli",
          [](const HilbertSpace& s, const std::string& axis) {
              return pauli(s, axis_from_string(axis));
          },
          py::arg("space"), py::arg("axis"));
    m.def("commutator", &commutator, py::arg("a"), py::arg("b"));

    py::class_<CircuitParams>(m, "CircuitParams")
        .def(py::init([](double Omega, double Omega1, double Omega2, double lambda1,
                         double lambda2, double J) {
                 return CircuitParams{Omega, Omega1, Omega2, lambda1, lambda2, J};
             }),
             py::arg("Omega") = 1.0, py::arg("Omega1") = 1.0, py::arg("Omega2") = 1.0,
             py::arg("lambda1") = 0.0, py::arg("lambda2") = 0.0, py::arg("J") = 0.0)
        .def_readwrite("Omega", &CircuitParams::Omega)
        .def_readwrite("Omega1", &CircuitParams::Omega1)
        .def_readwrite("Omega2", &CircuitParams::Omega2)
        .def_readwrite("lambda1", &CircuitParams::lambda1)
        .def_readwrite("lambda2", &CircuitParams::lambda2)
        .def_readwrite("J", &CircuitParams::J);

    py::class_<ScaledParams>(m, "ScaledParams")
        .def(py::init([](double k_eff, double Delta, double qubit_detuning) {
                 return ScaledParams{k_eff, Delta, qubit_detuning};
             }),
             py::arg("k_eff") = 0.0, py::arg("Delta") = 0.0, py::arg("qubit_detuning") = 0.0)
        .def_readwrite("k_eff", &ScaledParams::k_eff)
        .def_readwrite("Delta", &ScaledParams::Delta)
        .def_readwrite("qubit_detuning", &ScaledParams::qubit_detuning);

    py::class_<JTParams>(m, "JTParams")
        .def(py::init([](double omega1, double omega2, double k1, double k2) {
                 return JTParams{omega1, omega2, k1, k2};
             }),
             py::arg("omega1") = 1.0, py::arg("omega2") = 1.0, py::arg("k1") = 0.0,
             py::arg("k2") = 0.0)
        .def_readwrite("omega1", &JTParams::omega1)
        .def_readwrite("omega2", &JTParams::omega2)
        .def_readwrite("k1", &JTParams::k1)
        .def_readwrite("k2", &JTParams::k2);

    py::class_<EffectiveMode>(m, "EffectiveMode")
        .def_readonly("omega_eff", &EffectiveMode::omega_eff)
        .def_readonly("k_eff", &EffectiveMode::k_eff)
        .def_readonly("omega_prime", &EffectiveMode::omega_prime)
        .def_readonly("c2", &EffectiveMode::c2)
        .def_readonly("rotation", &EffectiveMode::rotation)
        .def_readonly("omega_bar", &EffectiveMode::omega_bar)
        .def_readonly("omega_sq_bar", &EffectiveMode::omega_sq_bar);

    py::class_<HardwareParams>(m, "HardwareParams")
        .def(py::init([](double L1, double L2, double Lc1, double Lc2, double C1, double C2,
                         double Cc) {
                 return HardwareParams{L1, L2, Lc1, Lc2, C1, C2, Cc};
             }),
             py::arg("L1"), py::arg("L2"), py::arg("Lc1"), py::arg("Lc2"), py::arg("C1"),
             py::arg("C2"), py::arg("Cc"))
        .def_readwrite("L1", &HardwareParams::L1)
        .def_readwrite("L2", &HardwareParams::L2)
        .def_readwrite("Lc1", &HardwareParams::Lc1)
        .def_readwrite("Lc2", &HardwareParams::Lc2)
        .def_readwrite("C1", &HardwareParams::C1)
        .def_readwrite("C2", &HardwareParams::C2)
        .def_readwrite("Cc", &HardwareParams::Cc);

    py::class_<HardwareCouplings>(m, "HardwareCouplings")
        .def_readonly("omega1", &HardwareCouplings::omega1)
        .def_readonly("omega2", &HardwareCouplings::omega2)
        .def_readonly("J", &HardwareCouplings::J);

    m.def("build_circuit_hamiltonian", &build_circuit_hamiltonian, py::arg("params"),
          py::arg("space"));
    m.def("build_scaled_hamiltonian", &build_scaled_hamiltonian, py::arg("params"),
          py::arg("space"));
    m.def("build_jt_hamiltonian", &build_jt_hamiltonian, py::arg("params"), py::arg("space"));
    m.def("effective_mode_decomposition", &effective_mode_decomposition, py::arg("params"));
    m.def("jt_to_circuit", &jt_to_circuit, py::arg("params"));
    m.def("circuit_to_jt", &circuit_to_jt, py::arg("params"), py::arg("rel_tol") = 1e-9);
    m.def("jt_from_scaled", &jt_from_scaled, py::arg("params"));
    m.def("frequency_ratio", &frequency_ratio, py::arg("Delta"));
    m.def("consistency_residual", &consistency_residual, py::arg("params"));
    m.def("build_eta", &build_eta, py::arg("params"), py::arg("space"));
    m.def("lowest_eigenvalues", &lowest_eigenvalues, py::arg("H"), py::arg("m"));
    m.def("coupling_from_hardware", &coupling_from_hardware, py::arg("params"));

    py::class_<DissipationParams>(m, "DissipationParams")
        .def(py::init([](double kappa, double gamma, double gamma_phi, double n_th) {
                 return DissipationParams{kappa, gamma, gamma_phi, n_th};
             }),
             py::arg("kappa") = 1e-3, py::arg("gamma") = 1e-3, py::arg("gamma_phi") = 1e-2,
             py::arg("n_th") = 0.1)
        .def_readwrite("kappa", &DissipationParams::kappa)
        .def_readwrite("gamma", &DissipationParams::gamma)
        .def_readwrite("gamma_phi", &DissipationParams::gamma_phi)
        .def_readwrite("n_th", &DissipationParams::n_th);

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init([](const HilbertSpace& space, const Matrix& rho) {
                 return DensityMatrix{space, rho};
             }),
             py::arg("space"), py::arg("rho"))
        .def_readonly("space", &DensityMatrix::space)
        .def_readonly("rho", &DensityMatrix::rho)
        .def("trace_error", &DensityMatrix::trace_error)
        .def("hermiticity_error", &DensityMatrix::hermiticity_error)
        .def("min_eigenvalue", &DensityMatrix::min_eigenvalue);

    py::class_<Liouvillian>(m, "Liouvillian")
        .def_property_readonly("space", &Liouvillian::space)
        .def_property_readonly("matrix",
                               [](const Liouvillian& l) -> const Matrix& { return l.matrix(); },
                               py::return_value_policy::copy)
        .def("apply", &Liouvillian::apply, py::arg("rho"));

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("omegas", &Spectrum::omegas)
        .def_readonly("values", &Spectrum::values)
        .def_property_readonly("method", [](const Spectrum& s) {
            return s.method == SpectrumMethod::resolvent ? "resolvent" : "time-domain";
        });

    m.def("dissipator", &dissipator, py::arg("lop"), py::arg("rho"));
    m.def("build_liouvillian", &build_liouvillian, py::arg("H"), py::arg("dissipation"));
    m.def("steady_state", &steady_state, py::arg("L"));
    m.def("evolve", &evolve, py::arg("L"), py::arg("rho0"), py::arg("t"));
    m.def("correlation", &correlation, py::arg("L"), py::arg("rho_ss"), py::arg("times"));
    m.def("emission_spectrum",
          [](const Liouvillian& L, const DensityMatrix& rho_ss, const std::vector<double>& omegas,
             const std::string& method, double dt, double t_max) {
              return emission_spectrum(L, rho_ss, omegas, method_from_string(method),
                                       TimeDomainOptions{dt, t_max});
          },
          py::arg("L"), py::arg("rho_ss"), py::arg("omegas"), py::arg("method") = "resolvent",
          py::arg("dt") = 0.05, py::arg("t_max") = 0.0);
    m.def("expectation", &expectation, py::arg("op"), py::arg("dm"));
    m.def("liouvillian_eigenvalues", &liouvillian_eigenvalues, py::arg("L"));
}
