#include "jtsim/model.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace jtsim {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0))
        throw std::invalid_argument(std::string(name) + " must be > 0, got " + std::to_string(v));
}

void require_nonnegative(double v, const char* name) {
    if (!(v >= 0.0))
        throw std::invalid_argument(std::string(name) + " must be >= 0, got " + std::to_string(v));
}

CircuitParams circuit_from_scaled(const ScaledParams& p) {
    CircuitParams c;
    c.Omega = 1.0 + p.qubit_detuning;
    c.Omega1 = 1.0;
    c.Omega2 = 1.0;
    c.lambda1 = p.k_eff;
    c.lambda2 = p.k_eff * p.Delta / 2.0;
    c.J = p.Delta / 2.0;
    return c;
}

} // namespace

void CircuitParams::validate() const {
    require_positive(Omega, "Omega");
    require_positive(Omega1, "Omega1");
    require_positive(Omega2, "Omega2");
    require_nonnegative(lambda1, "lambda1");
    // lambda2 and J may be negative together (sign of c2); their relative
    // sign is only constrained by the consistency condition, checked in
    // circuit_to_jt.
}

void ScaledParams::validate() const {
    require_nonnegative(k_eff, "k_eff");
    if (!(std::abs(Delta) < 2.0))
        throw std::invalid_argument("|Delta| must be < 2, got " + std::to_string(Delta));
    if (!(1.0 + qubit_detuning > 0.0))
        throw std::invalid_argument("qubit_detuning must keep the qubit frequency positive");
}

void JTParams::validate() const {
    require_positive(omega1, "omega1");
    require_positive(omega2, "omega2");
    require_nonnegative(k1, "k1");
    require_nonnegative(k2, "k2");
    // k1 = k2 = 0 is a valid (decoupled) Hamiltonian; only the effective-mode
    // decomposition needs a nonzero total coupling.
}

void HardwareParams::validate() const {
    require_positive(L1, "L1");
    require_positive(L2, "L2");
    require_positive(Lc1, "Lc1");
    require_positive(Lc2, "Lc2");
    require_positive(C1, "C1");
    require_positive(C2, "C2");
    require_nonnegative(Cc, "Cc"); // Cc = 0 means uncoupled resonators
}

Operator build_circuit_hamiltonian(const CircuitParams& p, const HilbertSpace& space) {
    p.validate();
    const Operator a1 = annihilation(space, 1);
    const Operator a2 = annihilation(space, 2);
    const Operator sx = pauli(space, PauliAxis::x);
    const Operator sz = pauli(space, PauliAxis::z);

    Operator h = (0.5 * p.Omega) * sz;
    h = h + p.Omega1 * (a1.adjoint() * a1) + p.Omega2 * (a2.adjoint() * a2);
    h = h + (p.lambda1 * (a1.adjoint() + a1) + p.lambda2 * (a2.adjoint() + a2)) * sx;
    h = h + p.J * (a1.adjoint() * a2 + a2.adjoint() * a1);
    return h;
}

Operator build_scaled_hamiltonian(const ScaledParams& p, const HilbertSpace& space) {
    p.validate();
    return build_circuit_hamiltonian(circuit_from_scaled(p), space);
}

Operator build_jt_hamiltonian(const JTParams& p, const HilbertSpace& space) {
    p.validate();
    const Operator a1 = annihilation(space, 1);
    const Operator a2 = annihilation(space, 2);
    const Operator sx = pauli(space, PauliAxis::x);
    const Operator sz = pauli(space, PauliAxis::z);

    Operator h = 0.5 * sz;
    h = h + p.omega1 * (a1.adjoint() * a1) + p.omega2 * (a2.adjoint() * a2);
    h = h + (p.k1 * p.omega1 * (a1.adjoint() + a1) + p.k2 * p.omega2 * (a2.adjoint() + a2)) * sx;
    return h;
}

EffectiveMode effective_mode_decomposition(const JTParams& p) {
    p.validate();
    if (p.k1 == 0.0 && p.k2 == 0.0)
        throw std::invalid_argument(
            "effective_mode_decomposition: zero total coupling (k1 = k2 = 0)");
    EffectiveMode m;
    const double k_sq = p.k1 * p.k1 + p.k2 * p.k2;
    m.k_eff = std::sqrt(k_sq);
    m.omega_eff = (p.omega1 * p.k1 * p.k1 + p.omega2 * p.k2 * p.k2) / k_sq;
    m.omega_prime = (p.omega1 * p.k2 * p.k2 + p.omega2 * p.k1 * p.k1) / k_sq;
    m.c2 = (p.omega1 - p.omega2) * p.k1 * p.k2 / k_sq;
    m.rotation << p.k1 / m.k_eff, p.k2 / m.k_eff,
                  p.k2 / m.k_eff, -p.k1 / m.k_eff;
    m.omega_bar = m.omega_eff;
    m.omega_sq_bar =
        (p.omega1 * p.omega1 * p.k1 * p.k1 + p.omega2 * p.omega2 * p.k2 * p.k2) / k_sq;
    return m;
}

CircuitParams jt_to_circuit(const JTParams& p) {
    const EffectiveMode m = effective_mode_decomposition(p);
    CircuitParams c;
    c.Omega = 1.0;
    c.Omega1 = m.omega_eff;
    c.Omega2 = m.omega_prime;
    c.lambda1 = m.omega_eff * m.k_eff;
    c.lambda2 = m.c2 * m.k_eff;
    c.J = m.c2;
    return c;
}

JTParams circuit_to_jt(const CircuitParams& p, double rel_tol) {
    p.validate();

    if (p.lambda2 == 0.0 && p.J != 0.0)
        throw std::invalid_argument(
            "circuit parameters inconsistent: lambda2 = 0 with J = " + std::to_string(p.J));
    if (p.lambda2 != 0.0) {
        const double residual = p.Omega1 - (p.lambda1 / p.lambda2) * p.J;
        if (std::abs(residual) > rel_tol * std::abs(p.Omega1))
            throw std::invalid_argument(
                "circuit parameters inconsistent: Omega1 - (lambda1/lambda2)*J = " +
                std::to_string(residual));
    }

    const double k_eff = p.lambda1 / p.Omega1;
    if (k_eff == 0.0)
        throw std::invalid_argument("circuit_to_jt: lambda1 = 0 gives zero total coupling");

    const double sum = p.Omega1 + p.Omega2;
    const double diff = p.Omega1 - p.Omega2;
    // The spread recovered from (diff, J) fixes both the frequency gap and the
    // coupling partition angle; J and the gap carry the same sign.
    double gap;
    if (p.J != 0.0)
        gap = std::copysign(std::hypot(diff, 2.0 * p.J), p.J);
    else
        gap = diff;

    JTParams jt;
    jt.omega1 = (sum + gap) / 2.0;
    jt.omega2 = (sum - gap) / 2.0;
    if (!(jt.omega1 > 0.0) || !(jt.omega2 > 0.0))
        throw std::invalid_argument("circuit_to_jt: recovered mode frequencies are not positive");

    if (gap == 0.0) {
        jt.k1 = jt.k2 = k_eff / std::sqrt(2.0);
    } else {
        const double theta = 0.5 * std::atan2(2.0 * p.J / gap, diff / gap);
        jt.k1 = k_eff * std::cos(theta);
        jt.k2 = k_eff * std::sin(theta);
        if (jt.k1 < 0.0 && jt.k1 > -1e-300) jt.k1 = 0.0;
        if (jt.k2 < 0.0 && jt.k2 > -1e-300) jt.k2 = 0.0;
    }
    return jt;
}

JTParams jt_from_scaled(const ScaledParams& p) {
    p.validate();
    JTParams jt;
    jt.omega1 = 1.0 + p.Delta / 2.0;
    jt.omega2 = 1.0 - p.Delta / 2.0;
    jt.k1 = jt.k2 = p.k_eff / std::sqrt(2.0);
    return jt;
}

double frequency_ratio(double Delta) {
    if (!(std::abs(Delta) < 2.0))
        throw std::invalid_argument("|Delta| must be < 2, got " + std::to_string(Delta));
    return (2.0 + Delta) / (2.0 - Delta);
}

double consistency_residual(const CircuitParams& p) {
    if (p.lambda2 == 0.0)
        return p.J == 0.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    return p.Omega1 - (p.lambda1 / p.lambda2) * p.J;
}

Operator build_eta(const JTParams& p, const HilbertSpace& space) {
    p.validate();
    const double k_eff = std::hypot(p.k1, p.k2); // zero coupling gives the bare a1
    return annihilation(space, 1) + k_eff * pauli(space, PauliAxis::x);
}

std::vector<double> lowest_eigenvalues(const Operator& H, int m) {
    const int n = H.space().dim();
    if (m < 1 || m > n)
        throw std::invalid_argument("lowest_eigenvalues: m must be in [1, " + std::to_string(n) + "]");
    const double herm_defect = (H.matrix() - H.matrix().adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > 1e-10)
        throw std::invalid_argument("lowest_eigenvalues: operator is not Hermitian (max|H-H^+| = " +
                                    std::to_string(herm_defect) + ")");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(H.matrix(), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues(); // ascending
    return std::vector<double>(ev.data(), ev.data() + m);
}

HardwareCouplings coupling_from_hardware(const HardwareParams& h) {
    h.validate();
    HardwareCouplings out;
    out.omega1 = 1.0 / std::sqrt((h.L1 + h.Lc1) * h.C1);
    out.omega2 = 1.0 / std::sqrt((h.L2 + h.Lc2) * h.C2);
    out.J = h.Cc * std::sqrt(out.omega1 * out.omega2 / (4.0 * h.C1 * h.C2));
    return out;
}

} // namespace jtsim
