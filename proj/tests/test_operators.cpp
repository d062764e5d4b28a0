#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jtsim/operators.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <vector>

using namespace jtsim;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<double> sorted_real_eigenvalues(const Operator& op) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    std::vector<double> ev(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace

TEST_CASE("make_space dimensions and ordering") {
    CHECK(make_space(2, 2).dim() == 8);
    CHECK(make_space(3, 3).dim() == 18);
    CHECK(make_space(5, 5).dim() == 50);
    CHECK(make_space(3, 2).dim() == 12);

    const HilbertSpace s = make_space(3, 4);
    CHECK(s.index(0, 0, 0) == 0);
    CHECK(s.index(0, 0, 3) == 3);
    CHECK(s.index(0, 1, 0) == 4);
    CHECK(s.index(1, 0, 0) == 12);
    CHECK(s.index(1, 2, 3) == 23);

    CHECK_THROWS_AS(make_space(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_space(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_space(0, 5), std::invalid_argument);
}

TEST_CASE("annihilation matrix elements and truncation identity") {
    const HilbertSpace s = make_space(2, 2);
    const Operator a1 = annihilation(s, 1);

    // <q, n1-1, n2| a1 |q, n1, n2> = sqrt(n1), everything else zero
    Matrix expected = Matrix::Zero(8, 8);
    for (int q = 0; q < 2; ++q)
        for (int n2 = 0; n2 < 2; ++n2)
            expected(s.index(q, 0, n2), s.index(q, 1, n2)) = 1.0;
    CHECK(max_abs(a1.matrix() - expected) == 0.0);

    // d=2 truncation: [a, a+] = diag(1, -1) on the mode-1 factor
    const Operator c = commutator(a1, a1.adjoint());
    for (int q = 0; q < 2; ++q)
        for (int n1 = 0; n1 < 2; ++n1)
            for (int n2 = 0; n2 < 2; ++n2)
                CHECK(c.matrix()(s.index(q, n1, n2), s.index(q, n1, n2)) ==
                      Complex(n1 == 0 ? 1.0 : -1.0));
    CHECK(max_abs(c.matrix() - Matrix(c.matrix().diagonal().asDiagonal())) == 0.0);

    CHECK_THROWS_AS(annihilation(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(annihilation(s, 3), std::invalid_argument);
}

TEST_CASE("vacuum annihilation for several truncations") {
    for (int d : {2, 3, 5}) {
        const HilbertSpace s = make_space(d, d);
        const Operator a1 = annihilation(s, 1);
        Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(s.dim());
        vac(s.index(0, 0, 0)) = 1.0;
        CHECK((a1.matrix() * vac).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("embedding consistency: factors commute exactly") {
    const HilbertSpace s = make_space(3, 4);
    const Operator a1 = annihilation(s, 1);
    const Operator a2 = annihilation(s, 2);
    CHECK(max_abs(commutator(a1, a2.adjoint()).matrix()) == 0.0);
    CHECK(max_abs(commutator(a1, a2).matrix()) == 0.0);
    for (PauliAxis ax : {PauliAxis::x, PauliAxis::z, PauliAxis::plus, PauliAxis::minus}) {
        CHECK(max_abs(commutator(a1, pauli(s, ax)).matrix()) == 0.0);
        CHECK(max_abs(commutator(a2, pauli(s, ax)).matrix()) == 0.0);
    }
}

TEST_CASE("number operator spectrum with multiplicities") {
    const HilbertSpace s = make_space(3, 2);
    const std::vector<double> ev = sorted_real_eigenvalues(annihilation(s, 1).adjoint() *
                                                           annihilation(s, 1));
    // eigenvalues 0,1,2 each with multiplicity 2 * d2 = 4
    REQUIRE(ev.size() == 12);
    for (int n = 0; n < 3; ++n)
        for (int i = 0; i < 4; ++i)
            CHECK(ev[std::size_t(4 * n + i)] == doctest::Approx(n).epsilon(1e-14));
}

TEST_CASE("pauli operators") {
    const HilbertSpace s = make_space(2, 3);
    const Operator sx = pauli(s, PauliAxis::x);
    const Operator sz = pauli(s, PauliAxis::z);
    const Operator sp = pauli(s, PauliAxis::plus);
    const Operator sm = pauli(s, PauliAxis::minus);

    CHECK(max_abs((sx * sx).matrix() - Matrix::Identity(s.dim(), s.dim())) == 0.0);
    CHECK(max_abs((sp + sm).matrix() - sx.matrix()) == 0.0);

    const std::vector<double> ev = sorted_real_eigenvalues(sz);
    REQUIRE(ev.size() == 12);
    for (int i = 0; i < 6; ++i) {
        CHECK(ev[std::size_t(i)] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(ev[std::size_t(6 + i)] == doctest::Approx(1.0).epsilon(1e-14));
    }

    // [sx, sz] = -2i sy on the qubit factor
    const Operator c = commutator(sx, sz);
    Matrix sy = Matrix::Zero(2, 2);
    sy(0, 1) = Complex(0, -1);
    sy(1, 0) = Complex(0, 1);
    for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
            for (int k = 0; k < 6; ++k)
                CHECK(c.matrix()(6 * q1 + k, 6 * q2 + k) == Complex(0, -2) * sy(q1, q2));
}

TEST_CASE("commutator basics and space checks") {
    const HilbertSpace s = make_space(2, 2);
    const Operator sz = pauli(s, PauliAxis::z);
    CHECK(max_abs(commutator(sz, sz).matrix()) == 0.0);

    const HilbertSpace other = make_space(3, 2);
    CHECK_THROWS_AS(commutator(sz, pauli(other, PauliAxis::z)), std::invalid_argument);
    CHECK_THROWS_AS(sz + pauli(other, PauliAxis::z), std::invalid_argument);
    CHECK_THROWS_AS(sz * pauli(other, PauliAxis::z), std::invalid_argument);
}

TEST_CASE("adjoint is an involution and distributes over products") {
    const HilbertSpace s = make_space(3, 2);
    const Operator a1 = annihilation(s, 1);
    const Operator sx = pauli(s, PauliAxis::x);
    const Operator prod = a1 * sx;

    CHECK(max_abs(prod.adjoint().adjoint().matrix() - prod.matrix()) == 0.0);
    CHECK(max_abs(prod.adjoint().matrix() - (sx.adjoint() * a1.adjoint()).matrix()) == 0.0);
}

TEST_CASE("operator construction validates shape") {
    const HilbertSpace s = make_space(2, 2);
    CHECK_THROWS_AS(Operator(s, Matrix::Zero(4, 4)), std::invalid_argument);
    CHECK_THROWS_AS(Operator(s, Matrix::Zero(8, 7)), std::invalid_argument);
}
