#include "zmdirac/gamma.hpp"

#include <stdexcept>
#include <string>

namespace zmdirac {

namespace {

const cplx kI{0.0, 1.0};

// Assemble a 4x4 matrix from four 2x2 blocks.
Matrix blocks(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br) {
    Matrix m(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m(i, j) = tl(i, j);
            m(i, j + 2) = tr(i, j);
            m(i + 2, j) = bl(i, j);
            m(i + 2, j + 2) = br(i, j);
        }
    return m;
}

}  // namespace

Matrix pauli(int a) {
    Matrix s(2);
    switch (a) {
        case 1:
            s(0, 1) = 1.0;
            s(1, 0) = 1.0;
            break;
        case 2:
            s(0, 1) = -kI;
            s(1, 0) = kI;
            break;
        case 3:
            s(0, 0) = 1.0;
            s(1, 1) = -1.0;
            break;
        default:
            throw std::invalid_argument("pauli index must be 1..3, got " + std::to_string(a));
    }
    return s;
}

GammaSet build_gamma_set() {
    GammaSet g;
    const Matrix id2 = Matrix::identity(2);
    const Matrix z2 = Matrix::zero(2);
    g.gamma[0] = blocks(id2, z2, z2, -id2);
    for (int a = 1; a <= 3; ++a) {
        const Matrix s = pauli(a);
        g.gamma[a] = blocks(z2, s, -s, z2);
    }
    g.gamma4 = -(g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3]);
    for (int a = 0; a < 3; ++a) g.alpha[a] = g.gamma[0] * g.gamma[a + 1];
    return g;
}

SuiteReport check_clifford(const GammaSet& g, double tol) {
    SuiteReport r;
    r.suite = "clifford";
    const Matrix id = Matrix::identity(4);
    const double metric[4] = {1.0, -1.0, -1.0, -1.0};

    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
            const double target = (mu == nu) ? 2.0 * metric[mu] : 0.0;
            const Matrix lhs =
                bracket(g.gamma[mu], g.gamma[nu], BracketSign::anticommutator);
            r.add("anticommutator_g" + std::to_string(mu) + "_g" + std::to_string(nu),
                  "Eq. (1)", distance(lhs, id * cplx(target, 0.0)), tol);
        }

    r.add("gamma4_matches_negated_product", "Eq. (2)",
          distance(g.gamma4, -(g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3])), tol);
    for (int mu = 0; mu < 4; ++mu)
        r.add("gamma4_anticommutes_g" + std::to_string(mu), "Eq. (2)",
              bracket(g.gamma4, g.gamma[mu], BracketSign::anticommutator).fnorm(), tol);
    r.add("gamma4_squared_minus_identity", "Eq. (2)",
          distance(g.gamma4 * g.gamma4, -id), tol);
    r.add("chirality_involution_squared", "Eq. (2)",
          distance((g.gamma4 * kI) * (g.gamma4 * kI), id), tol);

    r.add("g0_hermitian", "Eq. (1)", distance(g.gamma[0], g.gamma[0].adjoint()), tol);
    for (int a = 1; a <= 3; ++a)
        r.add("g" + std::to_string(a) + "_antihermitian", "Eq. (1)",
              (g.gamma[a] + g.gamma[a].adjoint()).fnorm(), tol);
    r.add("gamma4_antihermitian", "Eq. (2)",
          (g.gamma4 + g.gamma4.adjoint()).fnorm(), tol);
    for (int a = 0; a < 3; ++a) {
        r.add("alpha" + std::to_string(a + 1) + "_hermitian", "Eq. (1)",
              distance(g.alpha[a], g.alpha[a].adjoint()), tol);
        r.add("alpha" + std::to_string(a + 1) + "_matches_g0_product", "Eq. (1)",
              distance(g.alpha[a], g.gamma[0] * g.gamma[a + 1]), tol);
        r.add("gamma4_commutes_alpha" + std::to_string(a + 1), "Eq. (2)",
              bracket(g.gamma4, g.alpha[a], BracketSign::commutator).fnorm(), tol);
    }
    return r;
}

SpinGenerators spin_generators(const GammaSet& g) {
    SuiteReport validation = check_clifford(g, 1e-12);
    if (!validation.all_ok())
        throw std::invalid_argument(
            "spin_generators: gamma set fails Clifford validation (" +
            std::to_string(validation.failed_count()) + " checks)");

    SpinGenerators s;
    const cplx quarter_i = kI * cplx(0.25, 0.0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            s.S[a][b] =
                bracket(g.gamma[a + 1], g.gamma[b + 1], BracketSign::commutator) * quarter_i;
    for (int a = 0; a < 3; ++a)
        s.S4[a] = bracket(g.gamma4, g.gamma[a + 1], BracketSign::commutator) * quarter_i;
    s.Sigma[0] = s.S[1][2] * cplx(2.0, 0.0);
    s.Sigma[1] = s.S[2][0] * cplx(2.0, 0.0);
    s.Sigma[2] = s.S[0][1] * cplx(2.0, 0.0);
    return s;
}

const Algebra& Algebra::standard() {
    static const Algebra instance = [] {
        Algebra a;
        a.g = build_gamma_set();
        a.spin = spin_generators(a.g);
        a.i_gamma4 = a.g.gamma4 * kI;
        return a;
    }();
    return instance;
}

}  // namespace zmdirac
