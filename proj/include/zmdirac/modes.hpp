#pragma once

#include <array>
#include <utility>
#include <vector>

#include "zmdirac/gamma.hpp"
#include "zmdirac/matrix.hpp"
#include "zmdirac/momentum.hpp"

namespace zmdirac {

// Generator of the projected-component equation: H + sign * kappa * gamma0
// P_family^{-sign}.  The added term vanishes on the constrained subspace, so
// one equation family covers every coupling strength.
Matrix mode_hamiltonian(const Algebra& alg, int family, int sign, double kappa,
                        const Momentum3& p);

// Orthonormal basis of the range of the (family, sign) projector at p.
Subspace mode_range(const Algebra& alg, int family, int sign, const Momentum3& p);

struct ModeResiduals {
    double preservation = 0.0;  // leakage into the complementary range
    double restriction = 0.0;   // difference from the free generator on the range
    double hermiticity = 0.0;   // anti-Hermitian part of the restricted generator
    double spectrum = 0.0;      // worst deviation from the expected eigenvalue pair
};

// Families 1 and 2 restrict to eigenvalues {-E, +E}; family 3 restricts to
// the doubly degenerate {sign * E, sign * E}.
ModeResiduals check_mode(const Algebra& alg, int family, int sign, double kappa,
                         const Momentum3& p);

// Two-component reduction of the free evolution on a chirality half.  The
// basis of the half and the 2x2 intertwiner are built once and are momentum
// independent; the restricted generator then equals
// (-chirality) * sigma.p in the rotated frame for every momentum.
class WeylReducer {
public:
    WeylReducer(const Algebra& alg, int chirality_sign);

    int chirality() const { return chirality_; }
    int reduced_sign() const { return -chirality_; }

    Matrix restriction(const Momentum3& p) const;     // 2x2 in the fixed basis
    Matrix reduced_target(const Momentum3& p) const;  // reduced_sign * sigma.p
    const Matrix& intertwiner() const { return u_; }
    const std::array<Vec, 2>& half_basis() const { return basis_; }

    // || U^+ restriction U - target ||_F / E.
    double reduction_residual(const Momentum3& p) const;

private:
    int chirality_;
    std::array<Matrix, 3> alpha_;
    std::array<Vec, 2> basis_;
    Matrix u_;
};

// Four-momentum symbol gamma0 p0 - gamma1 p1 - gamma2 p2 - gamma3 p3; its
// kernel at (p0, p) is the p0-frequency solution space of the free equation.
Matrix dirac_symbol(const Algebra& alg, double p0, const Momentum3& p);

// Solutions of the constrained system (D + kbar0 Q) v = 0, Q v = 0, computed
// as the kernel of the scale-balanced positive form.
Subspace reduced_three_component_space(const Algebra& alg, const Matrix& q, double kbar0,
                                       double p0, const Momentum3& p);

// Solutions of (D + R) v = 0, v = Q v, for a perturbation R supported off
// the range of Q.
Subspace reduced_one_component_space(const Algebra& alg, const Matrix& q, const Matrix& r,
                                     double p0, const Momentum3& p);

// kbar-weighted sum of the three rank-one projectors complementary to
// (eps, lam), the canonical off-range perturbation of the one-component
// system.
Matrix off_range_perturbation(const Algebra& alg, int eps, int lam,
                              const std::array<double, 3>& kbar, const Momentum3& p);

// One subsidiary condition: annihilate the subset of joint labels.
struct CensusEntry {
    std::vector<std::pair<int, int>> labels;  // ascending (eps, lam)
    int rank = 0;
};

// All 14 nontrivial subset constraints, ordered by rank then labels.
std::vector<CensusEntry> enumerate_subsidiary_conditions();

Matrix census_projector(const Algebra& alg, const CensusEntry& entry, const Momentum3& p);
OperatorField census_field(const Algebra& alg, const CensusEntry& entry);

}  // namespace zmdirac
