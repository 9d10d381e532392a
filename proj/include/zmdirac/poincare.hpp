#pragma once

#include "zmdirac/gamma.hpp"
#include "zmdirac/matrix.hpp"
#include "zmdirac/momentum.hpp"

namespace zmdirac {

// Central difference of a field along component a at absolute step h.
Matrix central_difference(const OperatorField& field, int a, const Momentum3& p, double h);

// Spectral norm of [H, Q](p): the obstruction to conservation in time.
double translation_residual(const Algebra& alg, const OperatorField& field, const Momentum3& p);

// Frobenius norm of [S_ab, Q] + i(p_b dQ/dp_a - p_a dQ/dp_b) for the plane
// spanned by axes a and b (0-based).  Vanishes iff Q is rotation invariant.
double rotation_residual(const Algebra& alg, const OperatorField& field, const Momentum3& p,
                         int a, int b);
double rotation_residual_fd(const Algebra& alg, const OperatorField& field, const Momentum3& p,
                            int a, int b, double h);

// Frobenius norm of [alpha_a, Q] + 2 H dQ/dp_a, the boost obstruction for
// operators that already commute with H.
double boost_residual(const Algebra& alg, const OperatorField& field, const Momentum3& p, int a);
double boost_residual_fd(const Algebra& alg, const OperatorField& field, const Momentum3& p,
                         int a, double h);

// Worst rotation residual over the three independent planes.
double rotation_residual_max(const Algebra& alg, const OperatorField& field, const Momentum3& p);
double rotation_residual_fd_max(const Algebra& alg, const OperatorField& field,
                                const Momentum3& p, double h);

// Worst boost residual over the three axes.
double boost_residual_max(const Algebra& alg, const OperatorField& field, const Momentum3& p);
double boost_residual_fd_max(const Algebra& alg, const OperatorField& field, const Momentum3& p,
                             double h);

// Order-of-accuracy violation for a halved-step pair of residuals: zero when
// the fine residual sits below `floor` (already converged) or the coarse to
// fine ratio lies in [3, 5] as second-order differencing predicts; otherwise
// the distance of the ratio from that band.
double step_ratio_violation(double coarse, double fine, double floor_value = 1e-10);

}  // namespace zmdirac
