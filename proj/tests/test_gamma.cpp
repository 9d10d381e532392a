#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zmdirac/gamma.hpp"

using namespace zmdirac;

namespace {

// Independent tensor-product oracle: builds 4x4 matrices directly from the
// 2x2 factors, bypassing the block assembly used by the library.
Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return m;
}

const cplx kI{0.0, 1.0};

}  // namespace

TEST_CASE("gamma matrices match the tensor-product oracle") {
    const GammaSet g = build_gamma_set();
    const Matrix id2 = Matrix::identity(2);
    CHECK(distance(g.gamma[0], kron(pauli(3), id2)) < 1e-15);
    for (int a = 1; a <= 3; ++a)
        CHECK(distance(g.gamma[a], kron(pauli(2), pauli(a)) * kI) < 1e-15);
    CHECK(distance(g.gamma4, kron(pauli(1), id2) * kI) < 1e-15);
    for (int a = 1; a <= 3; ++a)
        CHECK(distance(g.alpha[a - 1], kron(pauli(1), pauli(a))) < 1e-15);
}

TEST_CASE("clifford report on the standard set is clean") {
    const GammaSet g = build_gamma_set();
    SuiteReport r = check_clifford(g, 1e-14);
    CHECK(r.all_ok());
    double worst = 0.0;
    for (const auto& c : r.checks) worst = std::max(worst, c.residual);
    CHECK(worst < 1e-14);
    CHECK(r.checks.size() >= 25);
}

TEST_CASE("clifford report flags degenerate sets") {
    GammaSet bad = build_gamma_set();
    bad.gamma[1] = bad.gamma[2];
    SuiteReport r = check_clifford(bad, 1e-10);
    CHECK_FALSE(r.all_ok());
    bool g1g2_failed = false;
    for (const auto& c : r.checks)
        if (c.name == "anticommutator_g1_g2" && !c.pass()) g1g2_failed = true;
    CHECK(g1g2_failed);

    GammaSet scaled = build_gamma_set();
    for (auto& m : scaled.gamma) m = m * cplx(2.0, 0.0);
    scaled.gamma4 = scaled.gamma4 * cplx(2.0, 0.0);
    SuiteReport r2 = check_clifford(scaled, 1e-10);
    bool g0_failed = false;
    for (const auto& c : r2.checks)
        if (c.name == "anticommutator_g0_g0" && !c.pass()) g0_failed = true;
    CHECK(g0_failed);
}

TEST_CASE("basic square identities") {
    const GammaSet g = build_gamma_set();
    const Matrix id = Matrix::identity(4);
    CHECK(distance(g.gamma[0] * g.gamma[0], id) < 1e-15);
    CHECK(distance(g.gamma[1] * g.gamma[1], -id) < 1e-15);
    CHECK(distance((g.gamma4 * kI) * (g.gamma4 * kI), id) < 1e-15);
}

TEST_CASE("spin generators against the oracle") {
    const Algebra& alg = Algebra::standard();
    const SpinGenerators& s = alg.spin;
    const Matrix id2 = Matrix::identity(2);

    // S[0][1] is the rotation generator about the third axis, etc.
    CHECK(distance(s.S[0][1], kron(id2, pauli(3)) * cplx(0.5, 0.0)) < 1e-15);
    CHECK(distance(s.S[1][2], kron(id2, pauli(1)) * cplx(0.5, 0.0)) < 1e-15);
    CHECK(distance(s.S[2][0], kron(id2, pauli(2)) * cplx(0.5, 0.0)) < 1e-15);
    for (int a = 0; a < 3; ++a) {
        CHECK(distance(s.S4[a], kron(pauli(3), pauli(a + 1)) * cplx(0.5, 0.0)) < 1e-15);
        CHECK(distance(s.Sigma[a], kron(id2, pauli(a + 1))) < 1e-15);
        CHECK(distance(s.S4[a], s.S4[a].adjoint()) < 1e-15);
    }
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            CHECK(distance(s.S[a][b], s.S[a][b].adjoint()) < 1e-15);
            CHECK(distance(s.S[a][b], -s.S[b][a]) < 1e-15);
        }
}

TEST_CASE("rotation generator spectrum and algebra") {
    const Algebra& alg = Algebra::standard();
    const SpinGenerators& s = alg.spin;

    auto eig = hermitian_eigen(s.S[0][1]);
    CHECK(eig[0].value == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(eig[1].value == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(eig[2].value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(eig[3].value == doctest::Approx(0.5).epsilon(1e-12));

    // Structure constant with the computed sign: [S_12, S_23] = +i S_31.
    const Matrix lhs = bracket(s.S[0][1], s.S[1][2], BracketSign::commutator);
    CHECK(distance(lhs, s.S[2][0] * kI) < 1e-14);
    CHECK(distance(lhs, -(s.S[0][2] * kI)) < 1e-14);

    // Rotation and gamma4-mixing generators commute with gamma0.
    const Matrix g0 = alg.g.gamma[0];
    for (int a = 0; a < 3; ++a) {
        CHECK(bracket(s.S4[a], g0, BracketSign::commutator).fnorm() < 1e-15);
        for (int b = 0; b < 3; ++b)
            CHECK(bracket(s.S[a][b], g0, BracketSign::commutator).fnorm() < 1e-15);
    }
}

TEST_CASE("spin generator construction rejects broken input") {
    GammaSet bad = build_gamma_set();
    bad.gamma[1] = bad.gamma[1] * cplx(2.0, 0.0);
    CHECK_THROWS_AS(spin_generators(bad), std::invalid_argument);
}

TEST_CASE("shared algebra bundle is self-consistent") {
    const Algebra& alg = Algebra::standard();
    CHECK(distance(alg.i_gamma4, alg.g.gamma4 * kI) == 0.0);
    CHECK(distance(alg.i_gamma4, -kron(pauli(1), Matrix::identity(2))) < 1e-15);
    CHECK(&Algebra::standard() == &Algebra::standard());
}
