#include "zmdirac/modes.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace zmdirac {

namespace {

void check_family(int family) {
    if (family < 1 || family > 3)
        throw std::invalid_argument("projector family must be 1, 2, or 3");
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("projector sign must be +1 or -1");
}

Matrix free_hamiltonian(const Algebra& alg, const Momentum3& p) {
    return hamiltonian(alg, p);
}

Matrix pauli_dot(const Momentum3& p) {
    Matrix m = Matrix::zero(2);
    for (int a = 0; a < 3; ++a) m = m + p[a] * pauli(a + 1);
    return m;
}

}  // namespace

Matrix mode_hamiltonian(const Algebra& alg, int family, int sign, double kappa,
                        const Momentum3& p) {
    check_family(family);
    check_sign(sign);
    const Matrix block = projector(alg, family, -sign, p);
    return free_hamiltonian(alg, p) + (sign * kappa) * (alg.g.gamma[0] * block);
}

Subspace mode_range(const Algebra& alg, int family, int sign, const Momentum3& p) {
    check_family(family);
    check_sign(sign);
    return kernel_basis(projector(alg, family, -sign, p));
}

ModeResiduals check_mode(const Algebra& alg, int family, int sign, double kappa,
                         const Momentum3& p) {
    const double e = energy(p);
    const double unit = e * (1.0 + std::abs(kappa));
    const Matrix hm = mode_hamiltonian(alg, family, sign, kappa, p);
    const Matrix on = projector(alg, family, sign, p);
    const Matrix off = projector(alg, family, -sign, p);

    ModeResiduals r;
    r.preservation = (off * hm * on).fnorm() / unit;
    r.restriction = ((hm - free_hamiltonian(alg, p)) * on).fnorm() / unit;

    const Subspace range = mode_range(alg, family, sign, p);
    if (range.dim() != 2)
        throw std::runtime_error("projector range is not two dimensional");
    Matrix rest(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            rest(i, j) = dot(range.basis()[i], hm * range.basis()[j]);
    r.hermiticity = distance(rest, rest.adjoint()) / e;

    const Matrix herm = 0.5 * (rest + rest.adjoint());
    const auto eig = hermitian_eigen(herm);
    const double lo = family == 3 ? sign * e : -e;
    const double hi = family == 3 ? sign * e : e;
    r.spectrum = std::max(std::abs(eig[0].value - lo), std::abs(eig[1].value - hi)) / e;
    return r;
}

WeylReducer::WeylReducer(const Algebra& alg, int chirality_sign)
    : chirality_(chirality_sign), alpha_{alg.g.alpha[0], alg.g.alpha[1], alg.g.alpha[2]} {
    check_sign(chirality_sign);
    const Momentum3 ref = Momentum3::axis(3);
    const Subspace half = kernel_basis(projector(alg, 1, -chirality_, ref));
    if (half.dim() != 2)
        throw std::runtime_error("chirality half is not two dimensional");
    basis_ = {half.basis()[0], half.basis()[1]};

    const auto eig_rest = hermitian_eigen(restriction(ref));
    const auto eig_target = hermitian_eigen(reduced_target(ref));
    if (eig_rest[1].value - eig_rest[0].value < 1e-8 ||
        eig_target[1].value - eig_target[0].value < 1e-8)
        throw std::runtime_error("degenerate restriction at the reference momentum");
    Matrix u0 = outer(eig_rest[0].vector, eig_target[0].vector) +
                outer(eig_rest[1].vector, eig_target[1].vector);

    const Momentum3 probe = Momentum3::axis(1);
    const Matrix n = u0.adjoint() * restriction(probe) * u0;
    const cplx n12 = n(0, 1);
    if (std::abs(n12) <= 1e-8)
        throw std::runtime_error("cannot fix the relative phase at the probe momentum");
    const cplx want = reduced_target(probe)(0, 1);
    const cplx ratio = want / n12;
    const cplx phase = ratio / std::abs(ratio);
    Matrix twist = Matrix::identity(2);
    twist(1, 1) = phase;
    u_ = u0 * twist;
}

Matrix WeylReducer::restriction(const Momentum3& p) const {
    Matrix h = Matrix::zero(4);
    for (int a = 0; a < 3; ++a) h = h + p[a] * alpha_[a];
    Matrix rest(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            rest(i, j) = dot(basis_[i], h * basis_[j]);
    return rest;
}

Matrix WeylReducer::reduced_target(const Momentum3& p) const {
    return static_cast<double>(reduced_sign()) * pauli_dot(p);
}

double WeylReducer::reduction_residual(const Momentum3& p) const {
    const Matrix got = u_.adjoint() * restriction(p) * u_;
    return distance(got, reduced_target(p)) / energy(p);
}

Matrix dirac_symbol(const Algebra& alg, double p0, const Momentum3& p) {
    Matrix d = p0 * alg.g.gamma[0];
    for (int a = 0; a < 3; ++a) d = d - p[a] * alg.g.gamma[a + 1];
    return d;
}

Subspace reduced_three_component_space(const Algebra& alg, const Matrix& q, double kbar0,
                                       double p0, const Momentum3& p) {
    const double e2 = energy(p) * energy(p);
    const Matrix a = dirac_symbol(alg, p0, p) + kbar0 * q;
    return kernel_basis((1.0 / e2) * (a.adjoint() * a) + q.adjoint() * q);
}

Subspace reduced_one_component_space(const Algebra& alg, const Matrix& q, const Matrix& r,
                                     double p0, const Momentum3& p) {
    const double e2 = energy(p) * energy(p);
    const Matrix s = dirac_symbol(alg, p0, p) + r;
    const Matrix off = Matrix::identity(q.dim()) - q;
    return kernel_basis((1.0 / e2) * (s.adjoint() * s) + off.adjoint() * off);
}

Matrix off_range_perturbation(const Algebra& alg, int eps, int lam,
                              const std::array<double, 3>& kbar, const Momentum3& p) {
    return kbar[0] * minimal_projector(alg, -eps, lam, p) +
           kbar[1] * minimal_projector(alg, eps, -lam, p) +
           kbar[2] * minimal_projector(alg, -eps, -lam, p);
}

std::vector<CensusEntry> enumerate_subsidiary_conditions() {
    const std::pair<int, int> all[4] = {{-1, -1}, {-1, +1}, {+1, -1}, {+1, +1}};
    std::vector<CensusEntry> out;
    for (int rank = 1; rank <= 3; ++rank)
        for (int mask = 1; mask < 15; ++mask) {
            CensusEntry e;
            for (int bit = 0; bit < 4; ++bit)
                if (mask & (1 << bit)) e.labels.push_back(all[bit]);
            e.rank = static_cast<int>(e.labels.size());
            if (e.rank == rank) out.push_back(std::move(e));
        }
    return out;
}

Matrix census_projector(const Algebra& alg, const CensusEntry& entry, const Momentum3& p) {
    Matrix sum = Matrix::zero(4);
    for (const auto& [eps, lam] : entry.labels)
        sum = sum + minimal_projector(alg, eps, lam, p);
    return sum;
}

OperatorField census_field(const Algebra& alg, const CensusEntry& entry) {
    std::vector<OperatorField> parts;
    std::string name;
    for (const auto& [eps, lam] : entry.labels) {
        parts.push_back(minimal_projector_field(alg, eps, lam));
        if (!name.empty()) name += "+";
        name += parts.back().name;
    }
    OperatorField f;
    f.name = name;
    f.eval = [parts](const Momentum3& p) {
        Matrix sum = Matrix::zero(4);
        for (const auto& part : parts) sum = sum + part.eval(p);
        return sum;
    };
    f.deriv = [parts](int a, const Momentum3& p) {
        Matrix sum = Matrix::zero(4);
        for (const auto& part : parts) sum = sum + part.deriv(a, p);
        return sum;
    };
    return f;
}

}  // namespace zmdirac
