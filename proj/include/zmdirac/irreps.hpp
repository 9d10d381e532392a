#pragma once

#include <utility>
#include <vector>

#include "zmdirac/gamma.hpp"
#include "zmdirac/matrix.hpp"
#include "zmdirac/momentum.hpp"

namespace zmdirac {

// One simultaneous eigenline of the energy-sign and helicity gradings.
struct IrrepComponent {
    int eps = 0;
    int lam = 0;
    Vec vector;
};

// Splits C^4 at momentum p into the four joint eigenlines, ordered by
// (eps, lam) ascending.
std::vector<IrrepComponent> decompose(const Algebra& alg, const Momentum3& p);

// Joint labels sorted ascending; a constraint annihilates the kernel labels
// and acts as the identity on the range labels.
struct ConstraintClass {
    std::vector<std::pair<int, int>> kernel_labels;
    std::vector<std::pair<int, int>> range_labels;
};

// Classifies an idempotent Hermitian constraint that commutes with both
// gradings; throws std::invalid_argument naming the violated precondition.
ConstraintClass classify_constraint(const Algebra& alg, const Matrix& q, const Momentum3& p,
                                    double tol = 1e-8);

// 2 (S_12 p_3 + S_23 p_1 + X p_2) / E with X = S_31 when use_rot_slot is
// true and X = S_01 (the boost component) otherwise.
Matrix spin_combination(const Algebra& alg, const Momentum3& p, bool use_rot_slot);

}  // namespace zmdirac
