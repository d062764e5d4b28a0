#pragma once

#include "jtsim/operators.hpp"

#include <vector>

namespace jtsim {

// Two-resonator circuit parameters: qubit splitting Omega, resonator
// frequencies Omega1/Omega2, qubit-resonator couplings lambda1/lambda2 and
// photon hopping J, all in units of a common reference frequency. J and
// lambda2 may carry the sign of the mode-coupling spread c2; frequencies and
// lambda1 must be positive resp. nonnegative.
struct CircuitParams {
    double Omega = 1.0;
    double Omega1 = 1.0;
    double Omega2 = 1.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double J = 0.0;

    void validate() const;
};

// Dimensionless two-parameter form: unit-frequency degenerate resonators,
// hopping Delta/2, couplings k_eff and k_eff*Delta/2. |Delta| < 2 keeps both
// simulated vibration frequencies 1 ± Delta/2 positive.
struct ScaledParams {
    double k_eff = 0.0;
    double Delta = 0.0;
    double qubit_detuning = 0.0; // qubit frequency is 1 + qubit_detuning

    void validate() const;
};

// Two-frequency vibronic model: mode frequencies omega1/omega2 (in units of
// the qubit splitting) and dimensionless coupling scale factors k1/k2. The
// electronic coupling operator is fixed to σ_x.
struct JTParams {
    double omega1 = 1.0;
    double omega2 = 1.0;
    double k1 = 0.0;
    double k2 = 0.0;

    void validate() const;
};

// Result of the privileged-mode (effective single-mode) decomposition.
struct EffectiveMode {
    double omega_eff = 0.0;   // coupling-weighted mean frequency
    double k_eff = 0.0;       // sqrt(k1^2 + k2^2)
    double omega_prime = 0.0; // frequency of the disadvantaged mode
    double c2 = 0.0;          // privileged/disadvantaged coupling (spread)
    Eigen::Matrix2d rotation; // orthogonal mode rotation A
    double omega_bar = 0.0;   // first moment of the weighted frequency distribution
    double omega_sq_bar = 0.0; // second moment
};

// Lumped-element hardware values, SI units (henry, farad).
struct HardwareParams {
    double L1, L2;   // resonator inductances
    double Lc1, Lc2; // coupling inductances
    double C1, C2;   // resonator capacitances
    double Cc;       // resonator-resonator coupling capacitance

    void validate() const;
};

struct HardwareCouplings {
    double omega1, omega2; // rad/s
    double J;              // rad/s
};

// H = (Ω/2)σ_z + Ω₁a₁†a₁ + Ω₂a₂†a₂ + [λ₁(a₁†+a₁) + λ₂(a₂†+a₂)]σ_x
//     + J(a₁†a₂ + a₂†a₁)
Operator build_circuit_hamiltonian(const CircuitParams& p, const HilbertSpace& space);

// The (k_eff, Delta) form; identical construction path to the circuit form
// with Ω = 1 + detuning, Ω₁ = Ω₂ = 1, λ₁ = k_eff, λ₂ = k_eff·Δ/2, J = Δ/2.
Operator build_scaled_hamiltonian(const ScaledParams& p, const HilbertSpace& space);

// H = ω₁a₁†a₁ + ω₂a₂†a₂ + ½σ_z + [k₁ω₁(a₁†+a₁) + k₂ω₂(a₂†+a₂)]σ_x
Operator build_jt_hamiltonian(const JTParams& p, const HilbertSpace& space);

// Privileged-mode decomposition (O'Brien construction):
//   k_eff² = k₁²+k₂²,  ω_eff = (ω₁k₁²+ω₂k₂²)/k_eff²,  ω′ = (ω₁k₂²+ω₂k₁²)/k_eff²,
//   c₂ = (ω₁−ω₂)k₁k₂/k_eff²,  A = (1/k_eff)[[k₁,k₂],[k₂,−k₁]].
EffectiveMode effective_mode_decomposition(const JTParams& p);

// Parameter dictionary: Ω₁=ω_eff, Ω₂=ω′, λ₁=ω_eff·k_eff, λ₂=c₂·k_eff, J=c₂.
// A negative c₂ propagates its sign into J and λ₂.
CircuitParams jt_to_circuit(const JTParams& p);

// Inverse dictionary. Requires Ω₁ = (λ₁/λ₂)J within rel_tol (or J = λ₂ = 0);
// throws std::invalid_argument with the residual otherwise. The recovered
// mode labels follow sign(J): J > 0 gives ω₁ > ω₂.
JTParams circuit_to_jt(const CircuitParams& p, double rel_tol = 1e-9);

// Vibronic parameters simulated by the (k_eff, Delta) form:
// ω₁ = 1+Δ/2, ω₂ = 1−Δ/2, k₁ = k₂ = k_eff/√2.
JTParams jt_from_scaled(const ScaledParams& p);

// Simulated frequency ratio ω₁/ω₂ = (2+Δ)/(2−Δ).
double frequency_ratio(double Delta);

// Ω₁ − (λ₁/λ₂)J. Zero when J = λ₂ = 0; NaN when λ₂ = 0 but J ≠ 0.
double consistency_residual(const CircuitParams& p);

// Shifted bosonic quasi-particle a₁ + k_eff·σ_x of the privileged mode.
Operator build_eta(const JTParams& p, const HilbertSpace& space);

// m smallest eigenvalues of a Hermitian operator, ascending. Rejects inputs
// with max|H−H†| > 1e−10.
std::vector<double> lowest_eigenvalues(const Operator& H, int m);

// ω_i = 1/sqrt((L_i+L_ci)·C_i),  J = C_c·sqrt(ω₁ω₂/(4C₁C₂)), in rad/s.
HardwareCouplings coupling_from_hardware(const HardwareParams& h);

} // namespace jtsim
