#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zmdirac/gamma.hpp"
#include "zmdirac/matrix.hpp"
#include "zmdirac/momentum.hpp"

namespace zmdirac {

// A momentum-space (anti)unitary symmetry candidate acting as
//   psi(p) -> M conj?(psi(s_p p)),
// with s_omega recording how the frequency of a stationary solution moves.
struct SymmetryOp {
    std::string name;
    Matrix matrix;
    bool conjugates = false;
    int momentum_sign = +1;
    int frequency_sign = +1;
};

struct StandardOps {
    SymmetryOp parity;
    SymmetryOp time_reversal_conj;    // antiunitary flavor (Wigner)
    SymmetryOp charge;
    SymmetryOp time_reversal_linear;  // unitary flavor, flips frequency
};

StandardOps standard_ops(const Algebra& alg);

// compose(a, b) acts as a after b: (a.b) psi = a(b(psi)).
SymmetryOp compose(const SymmetryOp& a, const SymmetryOp& b, const std::string& name);

// Residual of the intertwining relation  op . in = out . op  on operator
// fields: || M conj?(Q_in(s_p p)) - Q_out(p) M ||_F at p.
double relation_residual(const SymmetryOp& op, const OperatorField& in, const OperatorField& out,
                         const Momentum3& p);

// Residual of [op, field] = 0 (commutator) or {op, field} = 0
// (anticommutator) in the same field sense.
double field_bracket_residual(const SymmetryOp& op, const OperatorField& field, BracketSign sign,
                              const Momentum3& p);

// Free evolution plus an optional algebraic constraint  Q psi = 0.
struct EquationSystem {
    std::string name;
    std::optional<OperatorField> constraint;
};

// The free system and the three constrained ones, in report order.
std::vector<EquationSystem> standard_systems(const Algebra& alg);

// {v : energy_sign(p) v = omega v, Q(p) v = 0}; omega is +1 or -1.
Subspace solution_space(const Algebra& alg, const EquationSystem& sys, const Momentum3& p,
                        int omega);

// Image of a subspace under the op's matrix (conjugating the basis first for
// antiunitary ops).
Subspace transform_subspace(const SymmetryOp& op, const Subspace& s);

// True iff the op maps the solution spaces it should onto the ones at p for
// both frequency signs.
bool preserves_solutions(const Algebra& alg, const EquationSystem& sys, const SymmetryOp& op,
                         const Momentum3& p, double tol = 1e-8);

struct OpVerdict {
    std::string op;
    bool invariant = false;
    int checked = 0;
    int violations = 0;
};

struct SystemVerdict {
    std::string system;
    std::vector<OpVerdict> verdicts;
};

// Verdict per op over a momentum sweep; `invariant` means preservation held
// at every sampled momentum.
SystemVerdict classify_system(const Algebra& alg, const EquationSystem& sys,
                              const std::vector<SymmetryOp>& ops,
                              const std::vector<Momentum3>& momenta, double tol = 1e-8);

// The seven column operators of the classification table, in report order.
std::vector<SymmetryOp> classification_ops(const Algebra& alg);

}  // namespace zmdirac
