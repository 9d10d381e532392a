#include "zmdirac/poincare.hpp"

#include <algorithm>

namespace zmdirac {

namespace {

const cplx kI{0.0, 1.0};

Matrix rotation_obstruction(const Algebra& alg, const Matrix& q, const Matrix& dqa,
                            const Matrix& dqb, const Momentum3& p, int a, int b) {
    const Matrix spin_part = bracket(alg.spin.S[a][b], q, BracketSign::commutator);
    const Matrix orbital_part = (dqa * cplx(p.p[b], 0.0) - dqb * cplx(p.p[a], 0.0)) * kI;
    return spin_part + orbital_part;
}

Matrix boost_obstruction(const Algebra& alg, const Matrix& q, const Matrix& dqa,
                         const Momentum3& p, int a) {
    const Matrix h = hamiltonian(alg, p);
    return bracket(alg.g.alpha[a], q, BracketSign::commutator) + h * dqa * cplx(2.0, 0.0);
}

}  // namespace

Matrix central_difference(const OperatorField& field, int a, const Momentum3& p, double h) {
    const Matrix plus = field.eval(p.shifted(a, h));
    const Matrix minus = field.eval(p.shifted(a, -h));
    return (plus - minus) * cplx(1.0 / (2.0 * h), 0.0);
}

double translation_residual(const Algebra& alg, const OperatorField& field, const Momentum3& p) {
    return op_norm(bracket(hamiltonian(alg, p), field.eval(p), BracketSign::commutator));
}

double rotation_residual(const Algebra& alg, const OperatorField& field, const Momentum3& p,
                         int a, int b) {
    const Matrix q = field.eval(p);
    return rotation_obstruction(alg, q, field.deriv(a, p), field.deriv(b, p), p, a, b).fnorm();
}

double rotation_residual_fd(const Algebra& alg, const OperatorField& field, const Momentum3& p,
                            int a, int b, double h) {
    const Matrix q = field.eval(p);
    return rotation_obstruction(alg, q, central_difference(field, a, p, h),
                                central_difference(field, b, p, h), p, a, b)
        .fnorm();
}

double boost_residual(const Algebra& alg, const OperatorField& field, const Momentum3& p, int a) {
    return boost_obstruction(alg, field.eval(p), field.deriv(a, p), p, a).fnorm();
}

double boost_residual_fd(const Algebra& alg, const OperatorField& field, const Momentum3& p,
                         int a, double h) {
    return boost_obstruction(alg, field.eval(p), central_difference(field, a, p, h), p, a)
        .fnorm();
}

double rotation_residual_max(const Algebra& alg, const OperatorField& field, const Momentum3& p) {
    double worst = 0.0;
    const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (const auto& ab : pairs)
        worst = std::max(worst, rotation_residual(alg, field, p, ab[0], ab[1]));
    return worst;
}

double rotation_residual_fd_max(const Algebra& alg, const OperatorField& field,
                                const Momentum3& p, double h) {
    double worst = 0.0;
    const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (const auto& ab : pairs)
        worst = std::max(worst, rotation_residual_fd(alg, field, p, ab[0], ab[1], h));
    return worst;
}

double boost_residual_max(const Algebra& alg, const OperatorField& field, const Momentum3& p) {
    double worst = 0.0;
    for (int a = 0; a < 3; ++a) worst = std::max(worst, boost_residual(alg, field, p, a));
    return worst;
}

double boost_residual_fd_max(const Algebra& alg, const OperatorField& field, const Momentum3& p,
                             double h) {
    double worst = 0.0;
    for (int a = 0; a < 3; ++a) worst = std::max(worst, boost_residual_fd(alg, field, p, a, h));
    return worst;
}

double step_ratio_violation(double coarse, double fine, double floor_value) {
    if (fine < floor_value) return 0.0;
    const double ratio = coarse / fine;
    if (ratio < 3.0) return 3.0 - ratio;
    if (ratio > 5.0) return ratio - 5.0;
    return 0.0;
}

}  // namespace zmdirac
