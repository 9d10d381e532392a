#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "zmdirac/gamma.hpp"
#include "zmdirac/matrix.hpp"
#include "zmdirac/momentum.hpp"
#include "zmdirac/sampling.hpp"
#include "zmdirac/so4.hpp"

using namespace zmdirac;

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

Matrix half_block(int sign, const Matrix& inner) {
    const Matrix half = 0.5 * (Matrix::identity(2) + static_cast<double>(sign) * pauli(3));
    return kron(half, inner);
}

std::vector<Momentum3> sample() { return momentum_sample(424242, "so4-test", 12, 1e-2, 1e2); }

}  // namespace

TEST_CASE("momentum-independent triples have the block-diagonal tensor form") {
    const Algebra& alg = Algebra::standard();
    const InternalGenerators g = internal_local(alg);
    for (int a = 0; a < 3; ++a) {
        CHECK(distance(g.s[a], 0.5 * half_block(+1, pauli(a + 1))) < 1e-14);
        CHECK(distance(g.tau[a], 0.5 * half_block(-1, pauli(a + 1))) < 1e-14);
        CHECK(distance(g.s[a], g.s[a].adjoint()) < 1e-14);
        CHECK(distance(g.tau[a], g.tau[a].adjoint()) < 1e-14);
        CHECK(distance(g.s[a] + g.tau[a], 0.5 * alg.spin.Sigma[a]) < 1e-14);
    }
    CHECK(closure_residual(g) < 1e-14);
    CHECK(distance(triple_casimir(g.s), 0.75 * half_block(+1, Matrix::identity(2))) < 1e-14);
    CHECK(distance(triple_casimir(g.tau), 0.75 * half_block(-1, Matrix::identity(2))) < 1e-14);
}

TEST_CASE("momentum-independent direction components fail to be conserved") {
    const Algebra& alg = Algebra::standard();
    const InternalGenerators g = internal_local(alg);
    for (const auto& p : sample()) {
        const double e = energy(p);
        const Matrix h = hamiltonian(alg, p);
        const Matrix l1 = direction_component(g.s, p);
        const Matrix l2 = direction_component(g.tau, p);
        CHECK(std::abs((h * l1 - l1 * h).fnorm() - e) < 1e-11 * e);
        CHECK(std::abs((h * l2 - l2 * h).fnorm() - e) < 1e-11 * e);
        CHECK(distance(l1 + l2, -0.5 * helicity_matrix(alg, p)) < 1e-13);
    }
}

TEST_CASE("flat-band conjugation preserves closure and restores conservation") {
    const Algebra& alg = Algebra::standard();
    for (const auto& p : sample()) {
        const double e = energy(p);
        const InternalGenerators g = internal_rotated(alg, p);
        CHECK(closure_residual(g) < 1e-13);
        const Matrix h = hamiltonian(alg, p);
        const Matrix l1 = direction_component(g.s, p);
        const Matrix l2 = direction_component(g.tau, p);
        CHECK((h * l1 - l1 * h).fnorm() < 1e-12 * e);
        CHECK((h * l2 - l2 * h).fnorm() < 1e-12 * e);
        CHECK(distance(l1 + l2, -0.5 * helicity_matrix(alg, p)) < 1e-12);
        CHECK(distance(triple_casimir(g.s), 0.75 * projector(alg, 3, +1, p)) < 1e-12);
        CHECK(distance(triple_casimir(g.tau), 0.75 * projector(alg, 3, -1, p)) < 1e-12);
        CHECK(distance(l1 * l1, 0.25 * projector(alg, 3, +1, p)) < 1e-12);
        CHECK(distance(l2 * l2, 0.25 * projector(alg, 3, -1, p)) < 1e-12);
    }
}

TEST_CASE("conjugating only the four-direction half breaks the closure") {
    const Algebra& alg = Algebra::standard();
    CHECK(closure_residual(internal_mixed(alg, Momentum3::axis(3))) > 0.1);
    int broken = 0;
    const auto momenta = sample();
    for (const auto& p : momenta)
        if (closure_residual(internal_mixed(alg, p)) > 0.1) ++broken;
    CHECK(broken == static_cast<int>(momenta.size()));
}

TEST_CASE("each half advances the energy-sign subspace of matching sign") {
    const Algebra& alg = Algebra::standard();
    for (const auto& p : sample()) {
        const auto lines = branch_lines(alg, p);
        REQUIRE(lines.size() == 4);
        CHECK(lines[0].eps == -1);
        CHECK(lines[0].m_s == 0.0);
        CHECK(lines[0].m_tau == -0.5);
        CHECK(lines[1].eps == -1);
        CHECK(lines[1].m_s == 0.0);
        CHECK(lines[1].m_tau == 0.5);
        CHECK(lines[2].eps == 1);
        CHECK(lines[2].m_s == -0.5);
        CHECK(lines[2].m_tau == 0.0);
        CHECK(lines[3].eps == 1);
        CHECK(lines[3].m_s == 0.5);
        CHECK(lines[3].m_tau == 0.0);
    }
}
