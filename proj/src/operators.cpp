#include "jtsim/operators.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>
#include <string>

namespace jtsim {

namespace {

void require_same_space(const Operator& a, const Operator& b, const char* what) {
    if (!(a.space() == b.space()))
        throw std::invalid_argument(std::string(what) + ": operators live on different spaces");
}

Matrix lowering(int d) {
    Matrix a = Matrix::Zero(d, d);
    for (int n = 1; n < d; ++n)
        a(n - 1, n) = std::sqrt(double(n));
    return a;
}

// qubit ⊗ mode1 ⊗ mode2 embedding consistent with HilbertSpace::index.
Matrix embed(const HilbertSpace& s, const Matrix& q, const Matrix& m1, const Matrix& m2) {
    return Eigen::kroneckerProduct(Eigen::kroneckerProduct(q, m1).eval(), m2).eval();
}

} // namespace

HilbertSpace make_space(int d1, int d2) {
    if (d1 < 2 || d2 < 2)
        throw std::invalid_argument("make_space: mode dimensions must be >= 2, got (" +
                                    std::to_string(d1) + ", " + std::to_string(d2) + ")");
    HilbertSpace s;
    s.mode_dims = {d1, d2};
    return s;
}

Operator::Operator(HilbertSpace space, Matrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() != space_.dim())
        throw std::invalid_argument("Operator: matrix is " + std::to_string(matrix_.rows()) +
                                    "x" + std::to_string(matrix_.cols()) +
                                    " but the space has dimension " + std::to_string(space_.dim()));
}

Operator operator+(const Operator& a, const Operator& b) {
    require_same_space(a, b, "operator+");
    return Operator(a.space(), a.matrix() + b.matrix());
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_space(a, b, "operator-");
    return Operator(a.space(), a.matrix() - b.matrix());
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_space(a, b, "operator*");
    return Operator(a.space(), a.matrix() * b.matrix());
}

Operator operator*(Complex scale, const Operator& a) {
    return Operator(a.space(), scale * a.matrix());
}

Operator operator*(double scale, const Operator& a) {
    return Operator(a.space(), scale * a.matrix());
}

Operator commutator(const Operator& a, const Operator& b) {
    require_same_space(a, b, "commutator");
    return Operator(a.space(), a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

Operator identity(const HilbertSpace& space) {
    return Operator(space, Matrix::Identity(space.dim(), space.dim()));
}

Operator annihilation(const HilbertSpace& space, int mode) {
    if (mode != 1 && mode != 2)
        throw std::invalid_argument("annihilation: mode must be 1 or 2, got " + std::to_string(mode));
    const Matrix iq = Matrix::Identity(2, 2);
    const Matrix i1 = Matrix::Identity(space.mode_dims[0], space.mode_dims[0]);
    const Matrix i2 = Matrix::Identity(space.mode_dims[1], space.mode_dims[1]);
    if (mode == 1)
        return Operator(space, embed(space, iq, lowering(space.mode_dims[0]), i2));
    return Operator(space, embed(space, iq, i1, lowering(space.mode_dims[1])));
}

Operator pauli(const HilbertSpace& space, PauliAxis axis) {
    Matrix q = Matrix::Zero(2, 2);
    switch (axis) {
    case PauliAxis::x:
        q(0, 1) = 1.0;
        q(1, 0) = 1.0;
        break;
    case PauliAxis::z:
        q(0, 0) = 1.0;
        q(1, 1) = -1.0;
        break;
    case PauliAxis::plus:
        q(0, 1) = 1.0;
        break;
    case PauliAxis::minus:
        q(1, 0) = 1.0;
        break;
    default:
        throw std::invalid_argument("pauli: invalid axis");
    }
    const Matrix i1 = Matrix::Identity(space.mode_dims[0], space.mode_dims[0]);
    const Matrix i2 = Matrix::Identity(space.mode_dims[1], space.mode_dims[1]);
    return Operator(space, embed(space, q, i1, i2));
}

} // namespace jtsim
