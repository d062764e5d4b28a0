#pragma once

#include "jtsim/operators.hpp"

#include <vector>

namespace jtsim {

// Dissipation rates in the same units as the Hamiltonian. kappa acts on both
// resonators with thermal occupation n_th; the qubit relaxes at gamma (zero
// temperature) and dephases at gamma_phi.
struct DissipationParams {
    double kappa = 1e-3;
    double gamma = 1e-3;
    double gamma_phi = 1e-2;
    double n_th = 0.1;

    void validate() const;
};

struct DensityMatrix {
    HilbertSpace space;
    Matrix rho;

    double trace_error() const;       // |Tr ρ − 1|
    double hermiticity_error() const; // max|ρ − ρ†|
    double min_eigenvalue() const;    // smallest eigenvalue of (ρ+ρ†)/2
};

// Dense superoperator acting on column-stacked density matrices:
// vec(ρ) stacks the columns of ρ, so vec(AρB) = (Bᵀ ⊗ A)·vec(ρ).
class Liouvillian {
public:
    Liouvillian(HilbertSpace space, Matrix superop);

    const HilbertSpace& space() const { return space_; }
    const Matrix& matrix() const { return matrix_; }

    // unvec(L · vec(rho))
    Matrix apply(const Matrix& rho) const;

private:
    HilbertSpace space_;
    Matrix matrix_; // N² × N²
};

// Lindblad dissipator  D[L]ρ = LρL† − ½{L†L, ρ}  applied to a plain matrix.
Matrix dissipator(const Operator& lop, const Matrix& rho);

// ρ ↦ −i[H,ρ] + Σ_{j=1,2} (1+n_th)κ D[a_j]ρ + n_th κ D[a_j†]ρ
//              + γ D[σ_−]ρ + (γ_φ/2) D[σ_z]ρ
Liouvillian build_liouvillian(const Operator& H, const DissipationParams& d);

// Unique stationary state: L(ρ) = 0, Tr ρ = 1, Hermitized. Throws
// NumericalError if the kernel is not one-dimensional (reports multiplicity)
// or the solve does not reach residual ≤ 1e−10.
DensityMatrix steady_state(const Liouvillian& L);

// ρ(t) = exp(L t)(ρ0), t ≥ 0.
DensityMatrix evolve(const Liouvillian& L, const DensityMatrix& rho0, double t);

// Two-time correlation ⟨a₁†(t)a₁(0)⟩ via the quantum regression theorem:
// C(t) = Tr[a₁† exp(L t)(a₁ ρ_ss)].
std::vector<Complex> correlation(const Liouvillian& L, const DensityMatrix& rho_ss,
                                 const std::vector<double>& times);

enum class SpectrumMethod { resolvent, time_domain };

// Stationary emission spectrum of mode 1. One-sided transform with the
// stationary component projected out of the seed a₁ρ_ss:
//   P(ω) = 2 Re ∫₀^∞ C(t) e^{−iωt} dt = −2 Re Tr[a₁† (L − iω)⁻¹(a₁ρ_ss − offset)].
// No 2π prefactor.
struct Spectrum {
    std::vector<double> omegas;
    std::vector<double> values;
    SpectrumMethod method = SpectrumMethod::resolvent;
};

// Controls for the time-domain route (propagator stepping of C(t) followed by
// Simpson quadrature). t_max = 0 selects the horizon automatically from the
// slowest decaying mode that overlaps the seed.
struct TimeDomainOptions {
    double dt = 0.05;
    double t_max = 0.0;
};

Spectrum emission_spectrum(const Liouvillian& L, const DensityMatrix& rho_ss,
                           const std::vector<double>& omegas,
                           SpectrumMethod method = SpectrumMethod::resolvent,
                           const TimeDomainOptions& td = {});

// Tr[op ρ]
Complex expectation(const Operator& op, const DensityMatrix& dm);

// Full eigenvalue set of the superoperator (diagnostics and tests).
Eigen::VectorXcd liouvillian_eigenvalues(const Liouvillian& L);

} // namespace jtsim
