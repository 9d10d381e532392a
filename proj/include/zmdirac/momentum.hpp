#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "zmdirac/gamma.hpp"
#include "zmdirac/matrix.hpp"

namespace zmdirac {

// Spatial momentum. Components are 0-indexed; axis() uses 1..3 to match the
// usual coordinate labels.
struct Momentum3 {
    double p[3]{0.0, 0.0, 0.0};

    Momentum3() = default;
    Momentum3(double p1, double p2, double p3);

    static Momentum3 axis(int k);

    double operator[](int a) const;
    double& operator[](int a);

    double magnitude() const;
    Momentum3 scaled(double factor) const;
    Momentum3 flipped() const;
    Momentum3 shifted(int a, double h) const;
};

// |p|; the massless dispersion law. Throws on zero momentum, where the
// propagation direction (and everything built from it) is undefined.
double energy(const Momentum3& p);

// A momentum-dependent matrix together with its analytic partial derivatives.
// Both closures own their captured matrices, so a field stays valid after the
// algebra object it was built from goes away.
struct OperatorField {
    std::string name;
    std::function<Matrix(const Momentum3&)> eval;
    std::function<Matrix(int, const Momentum3&)> deriv;

    bool has_deriv() const { return static_cast<bool>(deriv); }
};

Matrix hamiltonian(const Algebra& alg, const Momentum3& p);
Matrix energy_sign(const Algebra& alg, const Momentum3& p);
Matrix helicity_matrix(const Algebra& alg, const Momentum3& p);

// family 1: chirality halves, momentum independent.
// family 2: helicity halves.
// family 3: energy-sign halves.
Matrix projector(const Algebra& alg, int family, int sign, const Momentum3& p);

// Rank-one projector onto the simultaneous (energy sign, helicity) eigenspace.
Matrix minimal_projector(const Algebra& alg, int eps, int lam, const Momentum3& p);

// Unitary W with W H W^+ = gamma0 E and W^+ gamma0 W = H/E.
Matrix fw_rotation(const Algebra& alg, const Momentum3& p);

OperatorField hamiltonian_field(const Algebra& alg);
OperatorField energy_sign_field(const Algebra& alg);
OperatorField helicity_field(const Algebra& alg);
OperatorField projector_field(const Algebra& alg, int family, int sign);
OperatorField minimal_projector_field(const Algebra& alg, int eps, int lam);
OperatorField constant_field(std::string name, const Matrix& value);

}  // namespace zmdirac
