#include "zmdirac/equivalence.hpp"

#include <cmath>
#include <stdexcept>

namespace zmdirac {

namespace {

NilpotentPair assemble(const Matrix& h_free, const Matrix& lambda, double e) {
    const Matrix x = (0.5 / (e * e)) * (h_free * lambda);
    NilpotentPair n;
    n.lambda = lambda;
    n.v = Matrix::identity(lambda.dim()) - x;
    n.v_inv = Matrix::identity(lambda.dim()) + x;
    return n;
}

// Quadratic levels <v, A^+ A v> / E^2, ascending.  Working with the form
// itself (no square root) keeps an exact zero at rounding level.
std::vector<double> quad_levels(const Matrix& a, double e) {
    const auto eig = hermitian_eigen((1.0 / (e * e)) * (a.adjoint() * a));
    std::vector<double> out;
    for (const auto& pair : eig) out.push_back(std::max(pair.value, 0.0));
    return out;
}

}  // namespace

Momentum3 transverse_direction(const Momentum3& p) {
    const double e = energy(p);
    const Momentum3 n(p[0] / e, p[1] / e, p[2] / e);
    int k = 0;
    for (int a = 1; a < 3; ++a)
        if (std::abs(n[a]) < std::abs(n[k])) k = a;
    Momentum3 u(-n[k] * n[0], -n[k] * n[1], -n[k] * n[2]);
    u[k] += 1.0;
    const double len = u.magnitude();
    return Momentum3(u[0] / len, u[1] / len, u[2] / len);
}

NilpotentPair nilpotent_dim4(const Algebra& alg, int sign, double kappa, const Momentum3& p) {
    const Matrix lambda = kappa * (alg.g.gamma[0] * projector(alg, 3, sign, p));
    return assemble(hamiltonian(alg, p), lambda, energy(p));
}

NilpotentPair nilpotent_dim2(int sign, double kappa, const Momentum3& p) {
    const double e = energy(p);
    const Momentum3 u = transverse_direction(p);
    Matrix su = Matrix::zero(2);
    Matrix sn = Matrix::zero(2);
    for (int a = 0; a < 3; ++a) {
        su = su + u[a] * pauli(a + 1);
        sn = sn + (p[a] / e) * pauli(a + 1);
    }
    const Matrix half = 0.5 * (Matrix::identity(2) + static_cast<double>(sign) * sn);
    return assemble(pauli_hamiltonian(p), kappa * (su * half), e);
}

Matrix pauli_hamiltonian(const Momentum3& p) {
    Matrix h = Matrix::zero(2);
    for (int a = 0; a < 3; ++a) h = h + p[a] * pauli(a + 1);
    return h;
}

Matrix deformed_hamiltonian(const Matrix& h_free, const NilpotentPair& n) {
    return h_free + n.lambda;
}

Matrix metric(const NilpotentPair& n) { return n.v_inv.adjoint() * n.v_inv; }

EquivalenceResiduals check_equivalence(const Matrix& h_free, const NilpotentPair& n,
                                       int multiplicity, double e) {
    const int dim = h_free.dim();
    if (multiplicity < 1 || 2 * multiplicity != dim)
        throw std::invalid_argument("kernel multiplicity must fill half the space");
    const double lam_norm = n.lambda.fnorm();
    const double lam_scale = std::max(lam_norm, 1e-300);

    EquivalenceResiduals r;
    r.nilpotent = (n.lambda * n.lambda).fnorm() / (lam_scale * lam_scale);
    r.anticommute = (h_free * n.lambda + n.lambda * h_free).fnorm() / (e * lam_scale);
    r.inverse = distance(n.v * n.v_inv, Matrix::identity(dim));

    const Matrix deformed = deformed_hamiltonian(h_free, n);
    r.similarity = distance(n.v * h_free * n.v_inv, deformed) / (e + lam_norm);

    const Matrix m = metric(n);
    r.pseudo_hermitian = distance(m * deformed, deformed.adjoint() * m) / (e * m.fnorm());
    const auto m_eig = hermitian_eigen(m);
    const double ratio = m_eig.front().value / std::max(m_eig.back().value, 1e-300);
    r.positivity = std::max(0.0, 1e-14 - ratio) / 1e-14;

    r.spectral_gap = 1e300;
    for (int omega : {+1, -1}) {
        const Matrix shift = deformed - (omega * e) * Matrix::identity(dim);
        const auto sv = quad_levels(shift, e);
        r.spectrum = std::max(r.spectrum, sv[multiplicity - 1]);
        r.spectral_gap = std::min(r.spectral_gap, sv[multiplicity]);

        const Matrix free_shift = h_free - (omega * e) * Matrix::identity(dim);
        const Subspace free_sol =
            kernel_basis((1.0 / (e * e)) * (free_shift.adjoint() * free_shift));
        std::vector<Vec> moved;
        for (const auto& b : free_sol.basis()) moved.push_back(n.v * b);
        const Subspace transported = Subspace::span(dim, moved);
        const Subspace direct = kernel_basis((1.0 / (e * e)) * (shift.adjoint() * shift));
        r.solution_transport =
            std::max(r.solution_transport,
                     distance(transported.projector(), direct.projector()));
    }
    return r;
}

EquivalenceResiduals check_equivalence_dim4(const Algebra& alg, int sign, double kappa,
                                            const Momentum3& p) {
    return check_equivalence(hamiltonian(alg, p), nilpotent_dim4(alg, sign, kappa, p), 2,
                             energy(p));
}

EquivalenceResiduals check_equivalence_dim2(int sign, double kappa, const Momentum3& p) {
    return check_equivalence(pauli_hamiltonian(p), nilpotent_dim2(sign, kappa, p), 1, energy(p));
}

SystemVerdict classify_deformed_system(const Algebra& alg, const EquationSystem& sys,
                                       const std::vector<SymmetryOp>& ops, int sign, double kappa,
                                       const std::vector<Momentum3>& momenta, double tol) {
    SystemVerdict out;
    out.system = sys.name;
    for (const auto& op : ops) out.verdicts.push_back({op.name, false, 0, 0});

    for (const auto& p : momenta) {
        const NilpotentPair here = nilpotent_dim4(alg, sign, kappa, p);
        const NilpotentPair there = nilpotent_dim4(alg, sign, kappa, p.flipped());
        for (size_t i = 0; i < ops.size(); ++i) {
            const SymmetryOp& op = ops[i];
            const NilpotentPair& src_pair = op.momentum_sign < 0 ? there : here;
            const Momentum3 src_p = op.momentum_sign < 0 ? p.flipped() : p;
            bool ok = true;
            for (int omega : {+1, -1}) {
                const Subspace plain_target = solution_space(alg, sys, p, omega);
                std::vector<Vec> target_vecs;
                for (const auto& b : plain_target.basis()) target_vecs.push_back(here.v * b);
                const Subspace target = Subspace::span(4, target_vecs);

                const Subspace plain_src =
                    solution_space(alg, sys, src_p, omega * op.frequency_sign);
                std::vector<Vec> src_vecs;
                for (const auto& b : plain_src.basis()) src_vecs.push_back(src_pair.v * b);
                const Subspace src = Subspace::span(4, src_vecs);

                const Matrix inv_back =
                    op.conjugates ? src_pair.v_inv.conjugate() : src_pair.v_inv;
                SymmetryOp local = op;
                local.matrix = here.v * op.matrix * inv_back;
                if (!subspace_equal(transform_subspace(local, src), target, tol)) ok = false;
            }
            ++out.verdicts[i].checked;
            if (!ok) ++out.verdicts[i].violations;
        }
    }
    for (auto& v : out.verdicts) v.invariant = v.violations == 0;
    return out;
}

}  // namespace zmdirac
