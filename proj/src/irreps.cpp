#include "zmdirac/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace zmdirac {

namespace {

std::string fmt_resid(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", r);
    return buf;
}

int round_label(double x, double tol, const char* what) {
    const int nearest = x >= 0.0 ? 1 : -1;
    if (std::abs(x - nearest) > tol)
        throw std::runtime_error(std::string(what) + " eigenvalue " + fmt_resid(x) +
                                 " is not near +1 or -1");
    return nearest;
}

}  // namespace

std::vector<IrrepComponent> decompose(const Algebra& alg, const Momentum3& p) {
    const Matrix es = energy_sign(alg, p);
    const Matrix hel = helicity_matrix(alg, p);
    const JointEigen joint = joint_eigenbasis({es, hel});
    std::vector<IrrepComponent> out;
    for (std::size_t k = 0; k < joint.vectors.size(); ++k) {
        IrrepComponent c;
        c.eps = round_label(joint.values[k][0], 1e-6, "energy-sign");
        c.lam = round_label(joint.values[k][1], 1e-6, "helicity");
        c.vector = joint.vectors[k];
        out.push_back(c);
    }
    std::stable_sort(out.begin(), out.end(), [](const IrrepComponent& a, const IrrepComponent& b) {
        if (a.eps != b.eps) return a.eps < b.eps;
        return a.lam < b.lam;
    });
    if (out.size() != 4) throw std::runtime_error("joint decomposition did not yield four lines");
    return out;
}

ConstraintClass classify_constraint(const Algebra& alg, const Matrix& q, const Momentum3& p,
                                    double tol) {
    const double idem = distance(q * q, q);
    if (idem > tol)
        throw std::invalid_argument("constraint is not idempotent (residual " + fmt_resid(idem) +
                                    ")");
    const double herm = distance(q, q.adjoint());
    if (herm > tol)
        throw std::invalid_argument("constraint is not Hermitian (residual " + fmt_resid(herm) +
                                    ")");
    const Matrix es = energy_sign(alg, p);
    const double ces = bracket(q, es, BracketSign::commutator).fnorm();
    if (ces > tol)
        throw std::invalid_argument(
            "constraint does not commute with the energy-sign grading (residual " +
            fmt_resid(ces) + ")");
    const Matrix hel = helicity_matrix(alg, p);
    const double chel = bracket(q, hel, BracketSign::commutator).fnorm();
    if (chel > tol)
        throw std::invalid_argument(
            "constraint does not commute with the helicity grading (residual " + fmt_resid(chel) +
            ")");

    ConstraintClass out;
    for (const auto& comp : decompose(alg, p)) {
        const Vec image = q * comp.vector;
        const double weight = std::real(dot(comp.vector, image));
        const double off = (image - comp.vector * cplx(weight, 0.0)).norm();
        if (off > tol)
            throw std::runtime_error("constraint does not act as a scalar on the (" +
                                     std::to_string(comp.eps) + "," + std::to_string(comp.lam) +
                                     ") line (residual " + fmt_resid(off) + ")");
        const auto label = std::make_pair(comp.eps, comp.lam);
        if (std::abs(weight) <= tol) {
            out.kernel_labels.push_back(label);
        } else if (std::abs(weight - 1.0) <= tol) {
            out.range_labels.push_back(label);
        } else {
            throw std::runtime_error("constraint eigenvalue " + fmt_resid(weight) +
                                     " on a joint line is neither 0 nor 1");
        }
    }
    return out;
}

Matrix spin_combination(const Algebra& alg, const Momentum3& p, bool use_rot_slot) {
    const double e = energy(p);
    const Matrix& s12 = alg.spin.S[0][1];
    const Matrix& s23 = alg.spin.S[1][2];
    const Matrix s31 = alg.spin.S[2][0];
    const Matrix s01 =
        bracket(alg.g.gamma[0], alg.g.gamma[1], BracketSign::commutator) * cplx(0.0, 0.25);
    const Matrix& slot = use_rot_slot ? s31 : s01;
    return (s12 * cplx(p.p[2], 0.0) + s23 * cplx(p.p[0], 0.0) + slot * cplx(p.p[1], 0.0)) *
           cplx(2.0 / e, 0.0);
}

}  // namespace zmdirac
