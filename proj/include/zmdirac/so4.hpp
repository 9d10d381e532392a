#pragma once

#include <array>
#include <vector>

#include "zmdirac/gamma.hpp"
#include "zmdirac/matrix.hpp"
#include "zmdirac/momentum.hpp"

namespace zmdirac {

// Two commuting spin triples built from the tensor generators: s_a from the
// sum of the rotation and four-direction parts, tau_a from their difference.
struct InternalGenerators {
    std::array<Matrix, 3> s;
    std::array<Matrix, 3> tau;
};

// Momentum-independent combination; closes but does not commute with the
// evolution.
InternalGenerators internal_local(const Algebra& alg);

// Both halves conjugated into the flat-band frame; closes and the direction
// components commute with the evolution.
InternalGenerators internal_rotated(const Algebra& alg, const Momentum3& p);

// Only the four-direction half conjugated.  Kept as a negative control: the
// mixed frame breaks the closure of the algebra.
InternalGenerators internal_mixed(const Algebra& alg, const Momentum3& p);

// Worst Frobenius defect over [s_a, s_b] = i eps_abc s_c,
// [tau_a, tau_b] = i eps_abc tau_c, and [s_a, tau_b] = 0.
double closure_residual(const InternalGenerators& g);

// triple . p / |p|.
Matrix direction_component(const std::array<Matrix, 3>& triple, const Momentum3& p);

// Sum of squares of the triple.
Matrix triple_casimir(const std::array<Matrix, 3>& triple);

// One joint line labelled by energy sign and the two direction components of
// the rotated triples.
struct BranchLine {
    int eps = 0;
    double m_s = 0.0;
    double m_tau = 0.0;
};

// All four lines, ascending by (eps, m_s, m_tau).  Labels are snapped to the
// nearest half integer; a line off the grid by more than 1e-6 throws.
std::vector<BranchLine> branch_lines(const Algebra& alg, const Momentum3& p);

}  // namespace zmdirac
