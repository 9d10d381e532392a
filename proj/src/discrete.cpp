#include "zmdirac/discrete.hpp"

#include <stdexcept>

namespace zmdirac {

namespace {

const cplx kI{0.0, 1.0};

Matrix maybe_conjugate(const SymmetryOp& op, const Matrix& m) {
    return op.conjugates ? m.conjugate() : m;
}

Momentum3 source_momentum(const SymmetryOp& op, const Momentum3& p) {
    return op.momentum_sign < 0 ? p.flipped() : p;
}

}  // namespace

StandardOps standard_ops(const Algebra& alg) {
    StandardOps ops;
    ops.parity = {"P(1)", alg.g.gamma[0], false, -1, +1};
    ops.time_reversal_conj = {"T(2)", alg.g.gamma[1] * alg.g.gamma[3], true, -1, +1};
    ops.charge = {"C", alg.g.gamma[2] * kI, true, -1, -1};
    ops.time_reversal_linear = {"T(1)", alg.g.gamma[0] * alg.g.gamma4, false, +1, -1};
    return ops;
}

SymmetryOp compose(const SymmetryOp& a, const SymmetryOp& b, const std::string& name) {
    SymmetryOp out;
    out.name = name;
    out.matrix = a.matrix * maybe_conjugate(a, b.matrix);
    out.conjugates = a.conjugates != b.conjugates;
    out.momentum_sign = a.momentum_sign * b.momentum_sign;
    out.frequency_sign = a.frequency_sign * b.frequency_sign;
    return out;
}

double relation_residual(const SymmetryOp& op, const OperatorField& in, const OperatorField& out,
                         const Momentum3& p) {
    const Matrix lhs = op.matrix * maybe_conjugate(op, in.eval(source_momentum(op, p)));
    const Matrix rhs = out.eval(p) * op.matrix;
    return distance(lhs, rhs);
}

double field_bracket_residual(const SymmetryOp& op, const OperatorField& field, BracketSign sign,
                              const Momentum3& p) {
    const Matrix lhs = op.matrix * maybe_conjugate(op, field.eval(source_momentum(op, p)));
    const Matrix rhs = field.eval(p) * op.matrix;
    return sign == BracketSign::commutator ? distance(lhs, rhs) : (lhs + rhs).fnorm();
}

std::vector<EquationSystem> standard_systems(const Algebra& alg) {
    std::vector<EquationSystem> out;
    out.push_back({"(1)", std::nullopt});
    out.push_back({"(1)+(2)", projector_field(alg, 1, +1)});
    out.push_back({"(1)+(3)", projector_field(alg, 2, +1)});
    out.push_back({"(1)+(4)", projector_field(alg, 3, +1)});
    return out;
}

Subspace solution_space(const Algebra& alg, const EquationSystem& sys, const Momentum3& p,
                        int omega) {
    if (omega != 1 && omega != -1)
        throw std::invalid_argument("frequency sign must be +1 or -1");
    const Matrix shifted = energy_sign(alg, p) - Matrix::identity(4) * cplx(omega, 0.0);
    Matrix normal = shifted.adjoint() * shifted;
    if (sys.constraint) {
        const Matrix q = sys.constraint->eval(p);
        normal += q.adjoint() * q;
    }
    return kernel_basis(normal);
}

Subspace transform_subspace(const SymmetryOp& op, const Subspace& s) {
    std::vector<Vec> mapped;
    mapped.reserve(s.basis().size());
    for (const Vec& v : s.basis()) {
        Vec w = v;
        if (op.conjugates)
            for (int i = 0; i < w.dim; ++i) w[i] = std::conj(w[i]);
        mapped.push_back(op.matrix * w);
    }
    return Subspace::span(s.ambient(), mapped);
}

bool preserves_solutions(const Algebra& alg, const EquationSystem& sys, const SymmetryOp& op,
                         const Momentum3& p, double tol) {
    for (int omega : {-1, +1}) {
        const Subspace source =
            solution_space(alg, sys, source_momentum(op, p), op.frequency_sign * omega);
        const Subspace image = transform_subspace(op, source);
        const Subspace target = solution_space(alg, sys, p, omega);
        if (!subspace_equal(image, target, tol)) return false;
    }
    return true;
}

SystemVerdict classify_system(const Algebra& alg, const EquationSystem& sys,
                              const std::vector<SymmetryOp>& ops,
                              const std::vector<Momentum3>& momenta, double tol) {
    SystemVerdict out;
    out.system = sys.name;
    for (const auto& op : ops) {
        OpVerdict v;
        v.op = op.name;
        v.checked = static_cast<int>(momenta.size());
        for (const auto& p : momenta)
            if (!preserves_solutions(alg, sys, op, p, tol)) ++v.violations;
        v.invariant = v.violations == 0;
        out.verdicts.push_back(v);
    }
    return out;
}

std::vector<SymmetryOp> classification_ops(const Algebra& alg) {
    const StandardOps ops = standard_ops(alg);
    std::vector<SymmetryOp> out = {ops.parity, ops.time_reversal_conj, ops.time_reversal_linear,
                                   ops.charge};
    const SymmetryOp cp = compose(ops.charge, ops.parity, "CP(1)");
    out.push_back(cp);
    out.push_back(compose(cp, ops.time_reversal_conj, "CP(1)T(2)"));
    out.push_back(compose(cp, ops.time_reversal_linear, "CP(1)T(1)"));
    return out;
}

}  // namespace zmdirac
