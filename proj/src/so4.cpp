#include "zmdirac/so4.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zmdirac {

namespace {

InternalGenerators combine(const Algebra& alg,
                           const std::array<Matrix, 3>& four_part) {
    InternalGenerators g;
    for (int a = 0; a < 3; ++a) {
        const Matrix cyc = alg.spin.S[(a + 1) % 3][(a + 2) % 3];
        g.s[a] = 0.5 * (cyc + four_part[a]);
        g.tau[a] = 0.5 * (cyc - four_part[a]);
    }
    return g;
}

double su2_defect(const std::array<Matrix, 3>& t) {
    double worst = 0.0;
    for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3;
        const int c = (a + 2) % 3;
        const Matrix lhs = t[a] * t[b] - t[b] * t[a];
        worst = std::max(worst, distance(lhs, cplx(0.0, 1.0) * t[c]));
    }
    return worst;
}

}  // namespace

InternalGenerators internal_local(const Algebra& alg) {
    return combine(alg, {alg.spin.S4[0], alg.spin.S4[1], alg.spin.S4[2]});
}

InternalGenerators internal_rotated(const Algebra& alg, const Momentum3& p) {
    const Matrix w = fw_rotation(alg, p);
    const Matrix wd = w.adjoint();
    InternalGenerators g = internal_local(alg);
    for (int a = 0; a < 3; ++a) {
        g.s[a] = wd * g.s[a] * w;
        g.tau[a] = wd * g.tau[a] * w;
    }
    return g;
}

InternalGenerators internal_mixed(const Algebra& alg, const Momentum3& p) {
    const Matrix w = fw_rotation(alg, p);
    const Matrix wd = w.adjoint();
    std::array<Matrix, 3> four_part;
    for (int a = 0; a < 3; ++a) four_part[a] = wd * alg.spin.S4[a] * w;
    return combine(alg, four_part);
}

double closure_residual(const InternalGenerators& g) {
    double worst = std::max(su2_defect(g.s), su2_defect(g.tau));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            worst = std::max(worst, (g.s[a] * g.tau[b] - g.tau[b] * g.s[a]).fnorm());
    return worst;
}

Matrix direction_component(const std::array<Matrix, 3>& triple, const Momentum3& p) {
    const double e = energy(p);
    Matrix out = Matrix::zero(triple[0].dim());
    for (int a = 0; a < 3; ++a) out = out + (p[a] / e) * triple[a];
    return out;
}

Matrix triple_casimir(const std::array<Matrix, 3>& triple) {
    Matrix out = Matrix::zero(triple[0].dim());
    for (int a = 0; a < 3; ++a) out = out + triple[a] * triple[a];
    return out;
}

std::vector<BranchLine> branch_lines(const Algebra& alg, const Momentum3& p) {
    const InternalGenerators g = internal_rotated(alg, p);
    const JointEigen joint = joint_eigenbasis(
        {energy_sign(alg, p), direction_component(g.s, p), direction_component(g.tau, p)});
    std::vector<BranchLine> lines;
    for (const auto& values : joint.values) {
        BranchLine line;
        line.eps = static_cast<int>(std::lround(values[0]));
        line.m_s = std::round(2.0 * values[1]) / 2.0;
        line.m_tau = std::round(2.0 * values[2]) / 2.0;
        if (std::abs(values[0] - line.eps) > 1e-6 || std::abs(values[1] - line.m_s) > 1e-6 ||
            std::abs(values[2] - line.m_tau) > 1e-6)
            throw std::runtime_error("joint line label off the half-integer grid");
        lines.push_back(line);
    }
    std::sort(lines.begin(), lines.end(), [](const BranchLine& a, const BranchLine& b) {
        if (a.eps != b.eps) return a.eps < b.eps;
        if (a.m_s != b.m_s) return a.m_s < b.m_s;
        return a.m_tau < b.m_tau;
    });
    return lines;
}

}  // namespace zmdirac
