#pragma once

#include <vector>

#include "zmdirac/discrete.hpp"
#include "zmdirac/gamma.hpp"
#include "zmdirac/matrix.hpp"
#include "zmdirac/momentum.hpp"

namespace zmdirac {

// Deterministic unit vector orthogonal to p: the least-aligned coordinate
// axis projected off the direction (ties -> smallest index).
Momentum3 transverse_direction(const Momentum3& p);

// A square-zero addition anticommuting with the free evolution together with
// the similarity that absorbs it: V = 1 - X, V^-1 = 1 + X,
// X = (1/2) (H/E^2) Lambda.
struct NilpotentPair {
    Matrix lambda;
    Matrix v;
    Matrix v_inv;
};

// kappa * gamma0 * (energy-sign half) on the four-component space.
NilpotentPair nilpotent_dim4(const Algebra& alg, int sign, double kappa, const Momentum3& p);

// kappa * (sigma.u) * (helicity half) on the two-component space, with u the
// deterministic transverse direction.
NilpotentPair nilpotent_dim2(int sign, double kappa, const Momentum3& p);

// The two-component free evolution sigma.p.
Matrix pauli_hamiltonian(const Momentum3& p);

Matrix deformed_hamiltonian(const Matrix& h_free, const NilpotentPair& n);

// Scalar-product weight (V^-1)^+ V^-1 making the deformed evolution
// self-adjoint.
Matrix metric(const NilpotentPair& n);

struct EquivalenceResiduals {
    double nilpotent = 0.0;        // || Lambda^2 || over its natural scale
    double anticommute = 0.0;      // || {H, Lambda} || over E ||Lambda||
    double inverse = 0.0;          // || V V^-1 - 1 ||
    double similarity = 0.0;       // || V H V^-1 - (H + Lambda) || over the energy scale
    double pseudo_hermitian = 0.0; // || M H' - H'^+ M || over E ||M||
    double positivity = 0.0;       // metric positive-definiteness margin violation
    double spectrum = 0.0;         // worst expected-zero quadratic level of H' -+ E
    double spectral_gap = 0.0;     // smallest quadratic level outside the expected kernels
    double solution_transport = 0.0;  // deformed solution spaces vs V . free ones
};

// multiplicity: expected kernel dimension of H' -+ E (2 on the
// four-component space, 1 on the two-component one).
EquivalenceResiduals check_equivalence(const Matrix& h_free, const NilpotentPair& n,
                                       int multiplicity, double e);

EquivalenceResiduals check_equivalence_dim4(const Algebra& alg, int sign, double kappa,
                                            const Momentum3& p);
EquivalenceResiduals check_equivalence_dim2(int sign, double kappa, const Momentum3& p);

// Invariance table in the deformed picture: solution subspaces transported by
// V at every momentum, operator matrices conjugated in place.
SystemVerdict classify_deformed_system(const Algebra& alg, const EquationSystem& sys,
                                       const std::vector<SymmetryOp>& ops, int sign, double kappa,
                                       const std::vector<Momentum3>& momenta, double tol = 1e-8);

}  // namespace zmdirac
