#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jtsim/model.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <random>
#include <string>

using namespace jtsim;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Independent construction of the circuit Hamiltonian by explicit loops over
// basis labels, bypassing the operator-algebra module entirely.
Matrix reference_circuit_hamiltonian(const CircuitParams& p, int d1, int d2) {
    const int n = 2 * d1 * d2;
    auto idx = [&](int q, int n1, int n2) { return (q * d1 + n1) * d2 + n2; };
    Matrix h = Matrix::Zero(n, n);
    for (int q = 0; q < 2; ++q)
        for (int n1 = 0; n1 < d1; ++n1)
            for (int n2 = 0; n2 < d2; ++n2) {
                const int row = idx(q, n1, n2);
                h(row, row) += p.Omega * (q == 0 ? 0.5 : -0.5) + p.Omega1 * n1 + p.Omega2 * n2;
                // lambda1 (a1 + a1+) sigma_x : flips q, steps n1
                if (n1 + 1 < d1)
                    h(idx(1 - q, n1 + 1, n2), row) += p.lambda1 * std::sqrt(n1 + 1.0);
                if (n1 > 0)
                    h(idx(1 - q, n1 - 1, n2), row) += p.lambda1 * std::sqrt(double(n1));
                if (n2 + 1 < d2)
                    h(idx(1 - q, n1, n2 + 1), row) += p.lambda2 * std::sqrt(n2 + 1.0);
                if (n2 > 0)
                    h(idx(1 - q, n1, n2 - 1), row) += p.lambda2 * std::sqrt(double(n2));
                // J (a1+ a2 + a2+ a1)
                if (n1 + 1 < d1 && n2 > 0)
                    h(idx(q, n1 + 1, n2 - 1), row) += p.J * std::sqrt((n1 + 1.0) * n2);
                if (n1 > 0 && n2 + 1 < d2)
                    h(idx(q, n1 - 1, n2 + 1), row) += p.J * std::sqrt(n1 * (n2 + 1.0));
            }
    return h;
}

std::vector<double> dense_spectrum(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return std::vector<double>(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
}

} // namespace

TEST_CASE("circuit hamiltonian: decoupled limit spectrum") {
    const HilbertSpace s = make_space(2, 2);
    CircuitParams p;
    p.Omega = p.Omega1 = p.Omega2 = 1.0;
    const std::vector<double> ev = lowest_eigenvalues(build_circuit_hamiltonian(p, s), 8);
    const std::vector<double> expected = {-0.5, 0.5, 0.5, 0.5, 1.5, 1.5, 1.5, 2.5};
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(ev[i] == doctest::Approx(expected[i]).epsilon(1e-13));
}

TEST_CASE("circuit hamiltonian: exactly hermitian and matches loop-built reference") {
    const HilbertSpace s = make_space(3, 2);
    CircuitParams p;
    p.Omega = 0.9;
    p.Omega1 = 1.1;
    p.Omega2 = 0.8;
    p.lambda1 = 0.35;
    p.lambda2 = 0.2;
    p.J = 0.15;
    const Operator h = build_circuit_hamiltonian(p, s);
    CHECK(max_abs(h.matrix() - h.matrix().adjoint()) == 0.0);
    CHECK(max_abs(h.matrix() - reference_circuit_hamiltonian(p, 3, 2)) < 1e-14);
}

TEST_CASE("circuit hamiltonian: weak-coupling doublet") {
    const HilbertSpace s = make_space(2, 2);
    CircuitParams p;
    p.Omega = p.Omega1 = p.Omega2 = 1.0;
    p.lambda1 = 0.05;
    const std::vector<double> ev = lowest_eigenvalues(build_circuit_hamiltonian(p, s), 4);
    CHECK(std::abs(ev[1] - 0.45) < 3e-3);
    CHECK(ev[2] == doctest::Approx(0.5).epsilon(1e-12)); // untouched mode-2 photon
    CHECK(std::abs(ev[3] - 0.55) < 3e-3);
}

TEST_CASE("scaled hamiltonian: limits and equality with the circuit path") {
    const HilbertSpace s = make_space(2, 2);

    CHECK(lowest_eigenvalues(build_scaled_hamiltonian({0.0, 0.0}, s), 1)[0] ==
          doctest::Approx(-0.5).epsilon(1e-14));

    const std::vector<double> ev = lowest_eigenvalues(build_scaled_hamiltonian({0.1, 0.0}, s), 4);
    CHECK(std::abs(ev[1] - 0.4) < 5e-3);
    CHECK(std::abs(ev[2] - 0.5) < 5e-3);
    CHECK(std::abs(ev[3] - 0.6) < 5e-3);

    CircuitParams c;
    c.Omega = 1.0;
    c.Omega1 = c.Omega2 = 1.0;
    c.lambda1 = 0.7;
    c.lambda2 = 0.7 * 0.6 / 2.0;
    c.J = 0.6 / 2.0;
    const Operator via_scaled = build_scaled_hamiltonian({0.7, 0.6}, s);
    const Operator via_circuit = build_circuit_hamiltonian(c, s);
    CHECK(max_abs(via_scaled.matrix() - via_circuit.matrix()) == 0.0);

    CHECK_THROWS_AS(build_scaled_hamiltonian({0.5, 2.0}, s), std::invalid_argument);
    CHECK_THROWS_AS(build_scaled_hamiltonian({-0.1, 0.0}, s), std::invalid_argument);
}

TEST_CASE("jt hamiltonian: decoupled spectrum and degenerate equivalence") {
    const HilbertSpace s = make_space(2, 2);

    const JTParams p{1.5, 0.5, 0.0, 0.0};
    const std::vector<double> ev = lowest_eigenvalues(build_jt_hamiltonian(p, s), 8);
    const std::vector<double> expected = {-0.5, 0.0, 0.5, 1.0, 1.0, 1.5, 2.0, 2.5};
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(ev[i] == doctest::Approx(expected[i]).epsilon(1e-13));

    // omega1 = omega2: coincides with the scaled form at Delta = 0
    const double k = 0.4;
    const std::vector<double> jt_ev =
        lowest_eigenvalues(build_jt_hamiltonian({1.0, 1.0, k, k}, s), 8);
    const std::vector<double> sc_ev =
        lowest_eigenvalues(build_scaled_hamiltonian({std::sqrt(2.0) * k, 0.0}, s), 8);
    for (std::size_t i = 0; i < jt_ev.size(); ++i)
        CHECK(std::abs(jt_ev[i] - sc_ev[i]) < 1e-10);
}

TEST_CASE("scaled and jt forms converge to each other as truncation grows") {
    // The mode rotation linking the two forms is only exactly unitary on the
    // untruncated space, so the ground-energy gap must shrink as dims grow.
    for (auto [k_eff, Delta] : {std::pair{1.0, 0.5}, std::pair{0.5, 1.0}}) {
        const JTParams jt{1.0 + Delta / 2.0, 1.0 - Delta / 2.0, k_eff / std::sqrt(2.0),
                          k_eff / std::sqrt(2.0)};
        double prev = 1e100;
        for (int d : {2, 3, 4, 5}) {
            const HilbertSpace s = make_space(d, d);
            const double e_scaled =
                lowest_eigenvalues(build_scaled_hamiltonian({k_eff, Delta}, s), 1)[0];
            const double e_jt = lowest_eigenvalues(build_jt_hamiltonian(jt, s), 1)[0];
            const double diff = std::abs(e_scaled - e_jt);
            CHECK(diff < prev);
            prev = diff;
        }
    }
}

TEST_CASE("effective mode decomposition: worked examples") {
    {
        const EffectiveMode m = effective_mode_decomposition({1.5, 0.5, 1.0, 1.0});
        CHECK(m.k_eff == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
        CHECK(m.omega_eff == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(m.omega_prime == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(m.c2 == doctest::Approx(0.5).epsilon(1e-14));
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(m.rotation(0, 0) - r) < 1e-15);
        CHECK(std::abs(m.rotation(0, 1) - r) < 1e-15);
        CHECK(std::abs(m.rotation(1, 0) - r) < 1e-15);
        CHECK(std::abs(m.rotation(1, 1) + r) < 1e-15);
    }
    {
        // degenerate modes: no spread regardless of the coupling split
        const EffectiveMode m = effective_mode_decomposition({0.7, 0.7, 1.3, 0.2});
        CHECK(m.c2 == 0.0);
        CHECK(m.omega_eff == doctest::Approx(0.7).epsilon(1e-14));
        CHECK(m.omega_prime == doctest::Approx(0.7).epsilon(1e-14));
    }
    {
        const EffectiveMode m = effective_mode_decomposition({1.0, 2.0, 2.0, 1.0});
        CHECK(m.k_eff == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
        CHECK(m.omega_eff == doctest::Approx(6.0 / 5.0).epsilon(1e-14));
        CHECK(m.omega_prime == doctest::Approx(9.0 / 5.0).epsilon(1e-14));
        CHECK(m.c2 == doctest::Approx(-2.0 / 5.0).epsilon(1e-14));
        CHECK(m.c2 * m.c2 ==
              doctest::Approx(m.omega_sq_bar - m.omega_bar * m.omega_bar).epsilon(1e-13));
    }
    CHECK_THROWS_AS(effective_mode_decomposition({1.0, 2.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("effective mode decomposition: randomized identities") {
    std::mt19937 rng(20240715);
    std::uniform_real_distribution<double> freq(0.1, 3.0);
    std::uniform_real_distribution<double> coup(0.0, 2.0);
    for (int trial = 0; trial < 1000; ++trial) {
        JTParams p{freq(rng), freq(rng), coup(rng), coup(rng)};
        if (p.k1 == 0.0 && p.k2 == 0.0)
            p.k1 = 0.5;
        const EffectiveMode m = effective_mode_decomposition(p);

        CHECK(std::abs(m.k_eff * m.k_eff - (p.k1 * p.k1 + p.k2 * p.k2)) <
              1e-12 * std::max(1.0, p.k1 * p.k1 + p.k2 * p.k2));
        const Eigen::Matrix2d gram = m.rotation.transpose() * m.rotation;
        CHECK((gram - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        const double variance = m.omega_sq_bar - m.omega_bar * m.omega_bar;
        CHECK(std::abs(m.c2 * m.c2 - variance) < 1e-12 * std::max(1.0, std::abs(variance)));
    }
}

TEST_CASE("jt_to_circuit: symmetric-coupling relations") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> freq(0.2, 2.5);
    std::uniform_real_distribution<double> coup(0.05, 1.5);
    for (int trial = 0; trial < 200; ++trial) {
        const double k = coup(rng);
        const double w1 = freq(rng), w2 = freq(rng);
        const CircuitParams c = jt_to_circuit({w1, w2, k, k});
        const double delta = w1 - w2;
        CHECK(c.Omega1 == doctest::Approx((w1 + w2) / 2.0).epsilon(1e-13));
        CHECK(c.Omega2 == doctest::Approx((w1 + w2) / 2.0).epsilon(1e-13));
        CHECK(c.lambda1 == doctest::Approx((w1 + w2) * k / std::sqrt(2.0)).epsilon(1e-13));
        CHECK(std::abs(c.lambda2 - delta * k / std::sqrt(2.0)) < 1e-13 * std::max(1.0, std::abs(delta)));
        CHECK(std::abs(c.J - delta / 2.0) < 1e-13 * std::max(1.0, std::abs(delta)));
        // algebraic identity of the map, at rounding level
        CHECK(std::abs(c.Omega1 * c.lambda2 - c.lambda1 * c.J) <=
              4.0 * std::numeric_limits<double>::epsilon() * std::abs(c.lambda1 * c.J));
    }

    // degenerate limit
    const CircuitParams c = jt_to_circuit({1.2, 1.2, 0.9, 0.4});
    CHECK(c.J == 0.0);
    CHECK(c.lambda2 == 0.0);
}

TEST_CASE("circuit_to_jt: round trips, rejection, degenerate case") {
    {
        const CircuitParams c = jt_to_circuit({1.5, 0.5, 1.0, 1.0});
        const JTParams back = circuit_to_jt(c);
        CHECK(back.omega1 == doctest::Approx(1.5).epsilon(1e-12));
        CHECK(back.omega2 == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(back.k1 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(back.k2 == doctest::Approx(1.0).epsilon(1e-12));
    }
    {
        CircuitParams bad;
        bad.Omega1 = 1.0;
        bad.Omega2 = 1.0;
        bad.lambda1 = 1.0;
        bad.lambda2 = 0.25;
        bad.J = 0.5;
        bool threw = false;
        try {
            circuit_to_jt(bad);
        } catch (const std::invalid_argument& e) {
            threw = true;
            CHECK(std::string(e.what()).find("-1.0") != std::string::npos);
        }
        CHECK(threw);
        CHECK(consistency_residual(bad) == doctest::Approx(-1.0).epsilon(1e-14));
    }
    {
        CircuitParams degen;
        degen.Omega1 = degen.Omega2 = 1.3;
        degen.lambda1 = 0.65;
        const JTParams jt = circuit_to_jt(degen);
        CHECK(jt.omega1 == doctest::Approx(1.3).epsilon(1e-13));
        CHECK(jt.omega2 == doctest::Approx(1.3).epsilon(1e-13));
        CHECK(jt.k1 == doctest::Approx(jt.k2).epsilon(1e-14));
        CHECK(std::hypot(jt.k1, jt.k2) == doctest::Approx(0.65 / 1.3).epsilon(1e-13));
    }
}

TEST_CASE("parameter dictionary: randomized round trips both ways") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> freq(0.2, 2.5);
    std::uniform_real_distribution<double> coup(0.02, 1.5);
    for (int trial = 0; trial < 1000; ++trial) {
        const JTParams jt{freq(rng), freq(rng), coup(rng), coup(rng)};
        const CircuitParams c = jt_to_circuit(jt);
        const JTParams jt2 = circuit_to_jt(c);
        CHECK(std::abs(jt2.omega1 - jt.omega1) < 1e-9 * jt.omega1);
        CHECK(std::abs(jt2.omega2 - jt.omega2) < 1e-9 * jt.omega2);
        CHECK(std::abs(jt2.k1 - jt.k1) < 1e-9 * std::max(1.0, jt.k1));
        CHECK(std::abs(jt2.k2 - jt.k2) < 1e-9 * std::max(1.0, jt.k2));

        const CircuitParams c2 = jt_to_circuit(jt2);
        CHECK(std::abs(c2.Omega1 - c.Omega1) < 1e-9 * c.Omega1);
        CHECK(std::abs(c2.Omega2 - c.Omega2) < 1e-9 * c.Omega2);
        CHECK(std::abs(c2.lambda1 - c.lambda1) < 1e-9 * std::max(1e-6, c.lambda1));
        CHECK(std::abs(c2.lambda2 - c.lambda2) < 1e-9 * std::max(1e-6, std::abs(c.lambda2)));
        CHECK(std::abs(c2.J - c.J) < 1e-9 * std::max(1e-6, std::abs(c.J)));
    }
}

TEST_CASE("eta quasi-particle: interior bosonic commutator and ladder relation") {
    const HilbertSpace s = make_space(4, 3);
    const JTParams p{1.4, 0.6, 0.8, 0.5};
    const EffectiveMode m = effective_mode_decomposition(p);
    const Operator eta = build_eta(p, s);
    const Operator a1 = annihilation(s, 1);

    // [eta, eta+] = identity away from the top mode-1 level
    const Matrix comm = commutator(eta, eta.adjoint()).matrix();
    for (int q = 0; q < 2; ++q)
        for (int n1 = 0; n1 < 3; ++n1)
            for (int n2 = 0; n2 < 3; ++n2)
                for (int q2 = 0; q2 < 2; ++q2)
                    for (int m1 = 0; m1 < 3; ++m1)
                        for (int m2 = 0; m2 < 3; ++m2) {
                            const Complex v = comm(s.index(q, n1, n2), s.index(q2, m1, m2));
                            const Complex want =
                                (q == q2 && n1 == m1 && n2 == m2) ? Complex(1) : Complex(0);
                            CHECK(std::abs(v - want) < 1e-12);
                        }

    // [H_eff, a1] + omega_eff * eta = 0 away from the top mode-1 level, where
    // H_eff is the privileged single-mode model with the decomposed couplings.
    const Operator h_eff =
        0.5 * pauli(s, PauliAxis::z) +
        m.omega_eff * (a1.adjoint() * a1 +
                       m.k_eff * ((a1 + a1.adjoint()) * pauli(s, PauliAxis::x)));
    const Matrix lhs = (commutator(h_eff, a1) + m.omega_eff * eta).matrix();
    for (int q = 0; q < 2; ++q)
        for (int n1 = 0; n1 < 3; ++n1)
            for (int n2 = 0; n2 < 3; ++n2)
                for (int q2 = 0; q2 < 2; ++q2)
                    for (int m1 = 0; m1 < 3; ++m1)
                        for (int m2 = 0; m2 < 3; ++m2)
                            CHECK(std::abs(lhs(s.index(q, n1, n2), s.index(q2, m1, m2))) < 1e-12);

    // vanishing coupling degenerates eta to the bare lowering operator
    const Operator eta0 = build_eta({1.4, 0.6, 0.0, 0.0}, s);
    CHECK((eta0.matrix() - a1.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("lowest_eigenvalues: ordering, validation") {
    const HilbertSpace s = make_space(2, 2);
    Eigen::VectorXd d(8);
    d << 3, 1, 2, 9, 9, 9, 9, 9;
    const Operator h(s, Matrix(d.cast<Complex>().asDiagonal()));
    const std::vector<double> ev = lowest_eigenvalues(h, 3);
    CHECK(ev[0] == 1.0);
    CHECK(ev[1] == 2.0);
    CHECK(ev[2] == 3.0);

    const std::vector<double> free5 = lowest_eigenvalues(build_scaled_hamiltonian({0.0, 0.0}, s), 5);
    const std::vector<double> expected = {-0.5, 0.5, 0.5, 0.5, 1.5};
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(free5[i] == doctest::Approx(expected[i]).epsilon(1e-14));

    Matrix bad = Matrix::Zero(8, 8);
    bad(0, 1) = Complex(0, 1); // not Hermitian
    CHECK_THROWS_AS(lowest_eigenvalues(Operator(s, bad), 2), std::invalid_argument);
    CHECK_THROWS_AS(lowest_eigenvalues(h, 0), std::invalid_argument);
    CHECK_THROWS_AS(lowest_eigenvalues(h, 9), std::invalid_argument);
}

TEST_CASE("hardware couplings") {
    HardwareParams h{0.8e-9, 0.8e-9, 0.2e-9, 0.2e-9, 1e-12, 1e-12, 0.0};
    {
        const HardwareCouplings out = coupling_from_hardware(h);
        CHECK(out.omega1 == doctest::Approx(1e9 * std::sqrt(1000.0)).epsilon(1e-12));
        CHECK(out.omega2 == doctest::Approx(out.omega1).epsilon(1e-14));
        CHECK(out.J == 0.0);
    }
    {
        h.Cc = 0.25e-12;
        const HardwareCouplings out = coupling_from_hardware(h);
        // symmetric circuit: J = Cc * omega / (2 C)
        CHECK(out.J == doctest::Approx(h.Cc * out.omega1 / (2.0 * h.C1)).epsilon(1e-13));

        HardwareParams dbl = h;
        dbl.Cc = 2.0 * h.Cc;
        CHECK(coupling_from_hardware(dbl).J == doctest::Approx(2.0 * out.J).epsilon(1e-14));
    }
    h.L1 = -1.0;
    CHECK_THROWS_AS(coupling_from_hardware(h), std::invalid_argument);
}

TEST_CASE("frequency ratio map") {
    CHECK(frequency_ratio(0.0) == 1.0);
    CHECK(frequency_ratio(1.0) == 3.0);
    CHECK(std::abs(frequency_ratio(2.0 / 3.0) - 2.0) <=
          4.0 * std::numeric_limits<double>::epsilon());
    CHECK_THROWS_AS(frequency_ratio(2.0), std::invalid_argument);

    const JTParams jt = jt_from_scaled({0.3, 1.0});
    CHECK(jt.omega1 == 1.5);
    CHECK(jt.omega2 == 0.5);
    CHECK(jt.k1 == doctest::Approx(0.3 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(jt.k1 == jt.k2);
}
