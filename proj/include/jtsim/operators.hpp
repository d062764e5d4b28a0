#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace jtsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Composite Hilbert space of one qubit and two truncated bosonic modes,
// ordered qubit ⊗ mode1 ⊗ mode2. The basis index of |q, n1, n2⟩ is
//
//     index = ((q * d1) + n1) * d2 + n2,     q ∈ {0,1}, n_i ∈ {0,…,d_i−1},
//
// where q = 0 is the upper qubit level (σ_z eigenvalue +1). Every operator,
// density matrix and file dump in this project uses this ordering.
struct HilbertSpace {
    int qubit_dim = 2;
    std::array<int, 2> mode_dims{2, 2};

    int dim() const { return qubit_dim * mode_dims[0] * mode_dims[1]; }

    int index(int q, int n1, int n2) const {
        return (q * mode_dims[0] + n1) * mode_dims[1] + n2;
    }

    bool operator==(const HilbertSpace&) const = default;
};

// Builds the composite space for per-mode Fock truncations d1, d2 (each ≥ 2).
HilbertSpace make_space(int d1, int d2);

// Dense complex operator tagged with the space it acts on. Immutable after
// construction; all algebra returns new values, so instances can be shared
// freely across threads.
class Operator {
public:
    Operator(HilbertSpace space, Matrix matrix);

    const HilbertSpace& space() const { return space_; }
    const Matrix& matrix() const { return matrix_; }

    Operator adjoint() const { return Operator(space_, matrix_.adjoint()); }

    Operator operator-() const { return Operator(space_, -matrix_); }

private:
    HilbertSpace space_;
    Matrix matrix_;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex scale, const Operator& a);
Operator operator*(double scale, const Operator& a);

// AB − BA.
Operator commutator(const Operator& a, const Operator& b);

Operator identity(const HilbertSpace& space);

// Truncated lowering operator of the chosen mode (1 or 2), embedded with
// identities on the other factors: ⟨n−1|a|n⟩ = √n.
Operator annihilation(const HilbertSpace& space, int mode);

enum class PauliAxis { x, z, plus, minus };

// Qubit operator embedded with identities on both modes; σ_x = σ_+ + σ_−,
// σ_− lowers the qubit (takes the σ_z = +1 level to the σ_z = −1 level).
Operator pauli(const HilbertSpace& space, PauliAxis axis);

} // namespace jtsim
