#pragma once

#include <array>

#include "zmdirac/matrix.hpp"
#include "zmdirac/report.hpp"

namespace zmdirac {

// 2x2 Pauli matrix, index a in {1,2,3}.
Matrix pauli(int a);

// Fixed 4x4 representation: gamma[0] diagonal with blocks (+I, -I), the
// spatial gamma[1..3] built from off-diagonal Pauli blocks, gamma4 the
// negated product of all four, alpha[a] = gamma[0]*gamma[a+1].
struct GammaSet {
    std::array<Matrix, 4> gamma;
    Matrix gamma4;
    std::array<Matrix, 3> alpha;
};

GammaSet build_gamma_set();

// Verifies the full relation set: pairwise anticommutators against the
// (+,-,-,-) metric, gamma4 algebra, and the Hermiticity pattern.  Failures
// are report entries, never exceptions.
SuiteReport check_clifford(const GammaSet& g, double tol);

struct SpinGenerators {
    // Spatial rotation generators, zero-based axes: S[a][b] for axes a+1,b+1.
    std::array<std::array<Matrix, 3>, 3> S;
    // Generators mixing gamma4 with the spatial axes.
    std::array<Matrix, 3> S4;
    // Doubled cyclic combinations with eigenvalues ±1 (Sigma[c] = 2 S[a][b],
    // (a,b,c) cyclic).
    std::array<Matrix, 3> Sigma;
};

// Derives all generators from the gamma set; throws std::invalid_argument
// if the set fails Clifford validation first.
SpinGenerators spin_generators(const GammaSet& g);

// Shared bundle: the fixed representation plus derived generators.
struct Algebra {
    GammaSet g;
    SpinGenerators spin;
    Matrix i_gamma4;

    static const Algebra& standard();
};

}  // namespace zmdirac
