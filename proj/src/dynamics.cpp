#include "jtsim/dynamics.hpp"

#include "jtsim/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace jtsim {

namespace {

using Vector = Eigen::VectorXcd;

Vector vec(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size()); // Eigen is column-major
}

Matrix unvec(const Vector& v, Eigen::Index n) {
    return Eigen::Map<const Matrix>(v.data(), n, n);
}

// vec(A X) = (I ⊗ A) vec(X)
Matrix spre(const Matrix& a) {
    const Eigen::Index n = a.rows();
    return Eigen::kroneckerProduct(Matrix::Identity(n, n), a).eval();
}

// vec(X B) = (Bᵀ ⊗ I) vec(X)
Matrix spost(const Matrix& b) {
    const Eigen::Index n = b.rows();
    return Eigen::kroneckerProduct(b.transpose().eval(), Matrix::Identity(n, n)).eval();
}

Matrix dissipator_superop(const Matrix& l) {
    const Matrix ldl = (l.adjoint() * l).eval();
    return spre(l) * spost(l.adjoint()) - 0.5 * (spre(ldl) + spost(ldl));
}

// Seed of the regression/spectrum computations with the stationary component
// removed, so the one-sided transform converges: s = vec(a₁ρ_ss) − Tr[a₁ρ_ss]·vec(ρ_ss).
Vector projected_seed(const Liouvillian& L, const DensityMatrix& rho_ss, const Matrix& a1) {
    const Matrix seed = a1 * rho_ss.rho;
    return vec(seed) - seed.trace() * vec(rho_ss.rho);
}

void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* what) {
    if (!(a == b))
        throw std::invalid_argument(std::string(what) + ": space mismatch");
}

} // namespace

void DissipationParams::validate() const {
    if (!(kappa >= 0.0) || !(gamma >= 0.0) || !(gamma_phi >= 0.0) || !(n_th >= 0.0))
        throw std::invalid_argument("dissipation rates and n_th must be >= 0");
}

double DensityMatrix::trace_error() const { return std::abs(rho.trace() - Complex(1.0)); }

double DensityMatrix::hermiticity_error() const {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (rho + rho.adjoint()),
                                                 Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Liouvillian::Liouvillian(HilbertSpace space, Matrix superop)
    : space_(space), matrix_(std::move(superop)) {
    const Eigen::Index n2 = Eigen::Index(space_.dim()) * space_.dim();
    if (matrix_.rows() != n2 || matrix_.cols() != n2)
        throw std::invalid_argument("Liouvillian: superoperator must be N^2 x N^2");
}

Matrix Liouvillian::apply(const Matrix& rho) const {
    const Eigen::Index n = space_.dim();
    if (rho.rows() != n || rho.cols() != n)
        throw std::invalid_argument("Liouvillian::apply: shape mismatch");
    return unvec(matrix_ * vec(rho), n);
}

Matrix dissipator(const Operator& lop, const Matrix& rho) {
    const Matrix& l = lop.matrix();
    if (rho.rows() != l.rows() || rho.cols() != l.cols())
        throw std::invalid_argument("dissipator: shape mismatch");
    const Matrix ldl = l.adjoint() * l;
    return l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl);
}

Liouvillian build_liouvillian(const Operator& H, const DissipationParams& d) {
    d.validate();
    const double herm_defect = (H.matrix() - H.matrix().adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > 1e-10)
        throw std::invalid_argument("build_liouvillian: Hamiltonian is not Hermitian");

    const HilbertSpace& s = H.space();
    const Complex i(0.0, 1.0);

    Matrix lm = -i * (spre(H.matrix()) - spost(H.matrix()));
    for (int mode : {1, 2}) {
        const Matrix a = annihilation(s, mode).matrix();
        lm += (1.0 + d.n_th) * d.kappa * dissipator_superop(a);
        lm += d.n_th * d.kappa * dissipator_superop(a.adjoint());
    }
    lm += d.gamma * dissipator_superop(pauli(s, PauliAxis::minus).matrix());
    lm += 0.5 * d.gamma_phi * dissipator_superop(pauli(s, PauliAxis::z).matrix());
    return Liouvillian(s, std::move(lm));
}

DensityMatrix steady_state(const Liouvillian& L) {
    const Eigen::Index n = L.space().dim();
    const Eigen::Index n2 = n * n;

    // Replace one row with the trace functional; the trace row spans the left
    // kernel of L, so no information is lost when the kernel is simple.
    Matrix m = L.matrix();
    m.row(0).setZero();
    for (Eigen::Index k = 0; k < n; ++k)
        m(0, k * n + k) = 1.0;
    Vector b = Vector::Zero(n2);
    b(0) = 1.0;

    Vector x = m.partialPivLu().solve(b);
    const double residual = (L.matrix() * x).cwiseAbs().maxCoeff();
    if (!x.allFinite() || residual > 1e-10) {
        // Diagnose: count stationary directions.
        Eigen::ComplexEigenSolver<Matrix> solver(L.matrix(), false);
        const auto ev = solver.eigenvalues();
        const Eigen::Index multiplicity =
            (ev.cwiseAbs().array() < 1e-9).count();
        if (multiplicity != 1)
            throw NumericalError("steady_state: stationary kernel has dimension " +
                                 std::to_string(multiplicity) + " (expected 1)");
        throw NumericalError("steady_state: solve did not converge, residual = " +
                             std::to_string(residual));
    }

    DensityMatrix out{L.space(), unvec(x, n)};
    out.rho = 0.5 * (out.rho + out.rho.adjoint()).eval();
    out.rho /= out.rho.trace().real();
    return out;
}

DensityMatrix evolve(const Liouvillian& L, const DensityMatrix& rho0, double t) {
    require_same_space(L.space(), rho0.space, "evolve");
    if (t < 0.0)
        throw std::invalid_argument("evolve: t must be >= 0");
    if (t == 0.0)
        return rho0;

    const Eigen::Index n = L.space().dim();
    const Matrix propagator = (L.matrix() * t).exp();
    DensityMatrix out{L.space(), unvec(propagator * vec(rho0.rho), n)};
    if (std::abs(out.rho.trace() - rho0.rho.trace()) > 1e-9)
        throw NumericalError("evolve: trace not preserved at t = " + std::to_string(t));
    return out;
}

std::vector<Complex> correlation(const Liouvillian& L, const DensityMatrix& rho_ss,
                                 const std::vector<double>& times) {
    require_same_space(L.space(), rho_ss.space, "correlation");
    for (double t : times)
        if (t < 0.0)
            throw std::invalid_argument("correlation: times must be >= 0");

    const Matrix a1 = annihilation(L.space(), 1).matrix();
    const Vector w = vec(a1);
    Vector x = vec(a1 * rho_ss.rho);

    std::vector<Complex> out(times.size());
    if (times.empty())
        return out;

    // Uniform grids step with a single cached propagator; otherwise fall back
    // to one matrix exponential per requested time.
    bool uniform = times.size() >= 2 && times.front() == 0.0;
    const double dt = times.size() >= 2 ? times[1] - times[0] : 0.0;
    if (uniform) {
        for (std::size_t i = 1; i + 1 < times.size() && uniform; ++i)
            if (std::abs(times[i + 1] - times[i] - dt) > 1e-12 * std::max(1.0, std::abs(dt)))
                uniform = false;
        uniform = uniform && dt > 0.0;
    }

    if (uniform) {
        const Matrix p = (L.matrix() * dt).exp();
        for (std::size_t i = 0; i < times.size(); ++i) {
            out[i] = w.dot(x); // Eigen's dot conjugates the left argument
            if (i + 1 < times.size())
                x = p * x;
        }
    } else {
        for (std::size_t i = 0; i < times.size(); ++i) {
            const Matrix p = (L.matrix() * times[i]).exp();
            out[i] = w.dot(p * x);
        }
    }
    return out;
}

namespace {

Spectrum spectrum_resolvent(const Liouvillian& L, const DensityMatrix& rho_ss,
                            const std::vector<double>& omegas) {
    const Matrix a1 = annihilation(L.space(), 1).matrix();
    const Vector w = vec(a1);
    const Vector s = projected_seed(L, rho_ss, a1);
    const Complex i(0.0, 1.0);

    Spectrum out;
    out.omegas = omegas;
    out.values.resize(omegas.size());
    out.method = SpectrumMethod::resolvent;

    // One Schur factorization, then a triangular solve per frequency:
    // (L − iω)⁻¹ s = U (T − iω)⁻¹ U† s.
    const Eigen::ComplexSchur<Matrix> schur(L.matrix());
    if (schur.info() != Eigen::Success)
        throw NumericalError("emission_spectrum: Schur factorization failed");
    const Matrix& t = schur.matrixT();
    const Matrix& u = schur.matrixU();
    const Vector b = u.adjoint() * s;
    const Vector wu = u.adjoint() * w;
    const double scale = std::max(1.0, t.cwiseAbs().maxCoeff());

    Matrix shifted = t;
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        shifted.diagonal() = t.diagonal().array() - i * omegas[k];
        const double pivot = shifted.diagonal().cwiseAbs().minCoeff();
        if (pivot < 1e-12 * scale)
            throw NumericalError("emission_spectrum: singular resolvent at omega = " +
                                 std::to_string(omegas[k]));
        Vector y = shifted.triangularView<Eigen::Upper>().solve(b);
        if (!y.allFinite())
            throw NumericalError("emission_spectrum: resolvent solve failed at omega = " +
                                 std::to_string(omegas[k]));
        out.values[k] = -2.0 * std::real(wu.dot(y));
    }
    return out;
}

Spectrum spectrum_time_domain(const Liouvillian& L, const DensityMatrix& rho_ss,
                              const std::vector<double>& omegas, TimeDomainOptions td) {
    const Matrix a1 = annihilation(L.space(), 1).matrix();
    const Vector w = vec(a1);
    const Vector s = projected_seed(L, rho_ss, a1);
    const Complex i(0.0, 1.0);

    if (!(td.dt > 0.0))
        throw std::invalid_argument("emission_spectrum: dt must be > 0");

    if (td.t_max <= 0.0) {
        // Horizon from the slowest decaying eigenmode that actually overlaps
        // the seed and the observable.
        Eigen::ComplexEigenSolver<Matrix> solver(L.matrix(), true);
        if (solver.info() != Eigen::Success)
            throw NumericalError("emission_spectrum: eigendecomposition failed");
        const Vector y = solver.eigenvectors().partialPivLu().solve(s);
        const Vector z = solver.eigenvectors().adjoint() * w;
        const Eigen::VectorXd amp = (z.array() * y.array()).abs();
        const double amp_floor = 1e-12 * amp.sum();
        double rate = std::numeric_limits<double>::infinity();
        for (Eigen::Index k = 0; k < amp.size(); ++k) {
            const double decay = -solver.eigenvalues()(k).real();
            if (amp(k) > amp_floor && decay > 1e-12)
                rate = std::min(rate, decay);
        }
        if (!std::isfinite(rate))
            throw NumericalError("emission_spectrum: no decaying component in the seed");
        td.t_max = 16.0 / rate;
    }

    // Sample C(t) by repeated application of a fixed-step propagator, then do
    // composite Simpson quadrature of (C(t)) e^{−iωt} per frequency.
    Eigen::Index steps = Eigen::Index(std::ceil(td.t_max / td.dt));
    if (steps % 2 != 0)
        ++steps;
    const Matrix p = (L.matrix() * td.dt).exp();
    Vector x = s;
    std::vector<Complex> c(steps + 1);
    for (Eigen::Index k = 0; k <= steps; ++k) {
        c[k] = w.dot(x);
        if (k < steps)
            x = p * x;
    }

    Spectrum out;
    out.omegas = omegas;
    out.values.resize(omegas.size());
    out.method = SpectrumMethod::time_domain;
    for (std::size_t j = 0; j < omegas.size(); ++j) {
        const Complex phase_step = std::exp(-i * omegas[j] * td.dt);
        Complex phase = 1.0;
        Complex sum = 0.0;
        for (Eigen::Index k = 0; k <= steps; ++k) {
            const Complex term = c[k] * phase;
            if (k == 0 || k == steps)
                sum += term;
            else if (k % 2 == 1)
                sum += 4.0 * term;
            else
                sum += 2.0 * term;
            phase *= phase_step;
        }
        out.values[j] = 2.0 * std::real(sum * td.dt / 3.0);
    }
    return out;
}

} // namespace

Spectrum emission_spectrum(const Liouvillian& L, const DensityMatrix& rho_ss,
                           const std::vector<double>& omegas, SpectrumMethod method,
                           const TimeDomainOptions& td) {
    require_same_space(L.space(), rho_ss.space, "emission_spectrum");
    for (double om : omegas)
        if (!std::isfinite(om))
            throw std::invalid_argument("emission_spectrum: omega grid must be finite");

    if (method == SpectrumMethod::resolvent)
        return spectrum_resolvent(L, rho_ss, omegas);
    return spectrum_time_domain(L, rho_ss, omegas, td);
}

Complex expectation(const Operator& op, const DensityMatrix& dm) {
    require_same_space(op.space(), dm.space, "expectation");
    return (op.matrix() * dm.rho).trace();
}

Eigen::VectorXcd liouvillian_eigenvalues(const Liouvillian& L) {
    Eigen::ComplexEigenSolver<Matrix> solver(L.matrix(), false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("liouvillian_eigenvalues: eigendecomposition failed");
    return solver.eigenvalues();
}

} // namespace jtsim
