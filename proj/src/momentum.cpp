#include "zmdirac/momentum.hpp"

#include <cmath>
#include <utility>

namespace zmdirac {

namespace {

void check_component(int a) {
    if (a < 0 || a > 2) throw std::invalid_argument("momentum component index must be 0..2");
}

void check_pm(int s, const char* what) {
    if (s != 1 && s != -1)
        throw std::invalid_argument(std::string(what) + " must be +1 or -1");
}

std::string sign_tag(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

Momentum3::Momentum3(double p1, double p2, double p3) : p{p1, p2, p3} {}

Momentum3 Momentum3::axis(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("axis label must be 1..3");
    Momentum3 m;
    m.p[k - 1] = 1.0;
    return m;
}

double Momentum3::operator[](int a) const {
    check_component(a);
    return p[a];
}

double& Momentum3::operator[](int a) {
    check_component(a);
    return p[a];
}

double Momentum3::magnitude() const {
    return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

Momentum3 Momentum3::scaled(double factor) const {
    return {p[0] * factor, p[1] * factor, p[2] * factor};
}

Momentum3 Momentum3::flipped() const { return scaled(-1.0); }

Momentum3 Momentum3::shifted(int a, double h) const {
    check_component(a);
    Momentum3 m = *this;
    m.p[a] += h;
    return m;
}

double energy(const Momentum3& p) {
    const double e = p.magnitude();
    if (e == 0.0) throw std::domain_error("zero momentum: direction-dependent operators are undefined");
    return e;
}

Matrix hamiltonian(const Algebra& alg, const Momentum3& p) {
    Matrix h = Matrix::zero(4);
    for (int a = 0; a < 3; ++a) h += alg.g.alpha[a] * cplx(p.p[a], 0.0);
    return h;
}

Matrix energy_sign(const Algebra& alg, const Momentum3& p) {
    return hamiltonian(alg, p) * cplx(1.0 / energy(p), 0.0);
}

Matrix helicity_matrix(const Algebra& alg, const Momentum3& p) {
    return alg.i_gamma4 * energy_sign(alg, p);
}

Matrix projector(const Algebra& alg, int family, int sign, const Momentum3& p) {
    if (family < 1 || family > 3) throw std::invalid_argument("projector family must be 1..3");
    check_pm(sign, "projector sign");
    Matrix core;
    switch (family) {
        case 1: core = alg.i_gamma4; break;
        case 2: core = helicity_matrix(alg, p); break;
        default: core = energy_sign(alg, p); break;
    }
    return (Matrix::identity(4) + core * cplx(sign, 0.0)) * cplx(0.5, 0.0);
}

Matrix minimal_projector(const Algebra& alg, int eps, int lam, const Momentum3& p) {
    check_pm(eps, "energy sign label");
    check_pm(lam, "helicity label");
    const Matrix es = energy_sign(alg, p);
    const Matrix hel = alg.i_gamma4 * es;
    return (Matrix::identity(4) + es * cplx(eps, 0.0) + hel * cplx(lam, 0.0) +
            alg.i_gamma4 * cplx(eps * lam, 0.0)) *
           cplx(0.25, 0.0);
}

Matrix fw_rotation(const Algebra& alg, const Momentum3& p) {
    const double e = energy(p);
    Matrix gp = Matrix::zero(4);
    for (int a = 0; a < 3; ++a) gp += alg.g.gamma[a + 1] * cplx(p.p[a], 0.0);
    return (Matrix::identity(4) * cplx(e, 0.0) + gp) * cplx(1.0 / (std::sqrt(2.0) * e), 0.0);
}

OperatorField hamiltonian_field(const Algebra& alg) {
    const auto alpha = alg.g.alpha;
    auto value = [alpha](const Momentum3& p) {
        Matrix h = Matrix::zero(4);
        for (int a = 0; a < 3; ++a) h += alpha[a] * cplx(p.p[a], 0.0);
        return h;
    };
    auto slope = [alpha](int a, const Momentum3&) {
        check_component(a);
        return alpha[a];
    };
    return {"H", std::move(value), std::move(slope)};
}

OperatorField energy_sign_field(const Algebra& alg) {
    const auto alpha = alg.g.alpha;
    auto value = [alpha](const Momentum3& p) {
        const double e = energy(p);
        Matrix h = Matrix::zero(4);
        for (int a = 0; a < 3; ++a) h += alpha[a] * cplx(p.p[a], 0.0);
        return h * cplx(1.0 / e, 0.0);
    };
    auto slope = [alpha](int a, const Momentum3& p) {
        check_component(a);
        const double e = energy(p);
        Matrix h = Matrix::zero(4);
        for (int b = 0; b < 3; ++b) h += alpha[b] * cplx(p.p[b], 0.0);
        return alpha[a] * cplx(1.0 / e, 0.0) - h * cplx(p.p[a] / (e * e * e), 0.0);
    };
    return {"energy_sign", std::move(value), std::move(slope)};
}

OperatorField helicity_field(const Algebra& alg) {
    OperatorField es = energy_sign_field(alg);
    const Matrix chi = alg.i_gamma4;
    auto value = [chi, inner = es.eval](const Momentum3& p) { return chi * inner(p); };
    auto slope = [chi, inner = es.deriv](int a, const Momentum3& p) { return chi * inner(a, p); };
    return {"helicity", std::move(value), std::move(slope)};
}

OperatorField projector_field(const Algebra& alg, int family, int sign) {
    if (family < 1 || family > 3) throw std::invalid_argument("projector family must be 1..3");
    check_pm(sign, "projector sign");
    const std::string name = "P" + std::to_string(family) + sign_tag(sign);
    if (family == 1) {
        const Matrix value =
            (Matrix::identity(4) + alg.i_gamma4 * cplx(sign, 0.0)) * cplx(0.5, 0.0);
        return constant_field(name, value);
    }
    OperatorField core = family == 2 ? helicity_field(alg) : energy_sign_field(alg);
    const cplx half_sign(0.5 * sign, 0.0);
    auto value = [inner = core.eval, half_sign](const Momentum3& p) {
        return Matrix::identity(4) * cplx(0.5, 0.0) + inner(p) * half_sign;
    };
    auto slope = [inner = core.deriv, half_sign](int a, const Momentum3& p) {
        return inner(a, p) * half_sign;
    };
    return {name, std::move(value), std::move(slope)};
}

OperatorField minimal_projector_field(const Algebra& alg, int eps, int lam) {
    check_pm(eps, "energy sign label");
    check_pm(lam, "helicity label");
    const std::string name = "Q(" + sign_tag(eps) + "1," + sign_tag(lam) + "1)";
    OperatorField es = energy_sign_field(alg);
    const Matrix chi = alg.i_gamma4;
    const Matrix offset =
        (Matrix::identity(4) + chi * cplx(eps * lam, 0.0)) * cplx(0.25, 0.0);
    const cplx ce(0.25 * eps, 0.0);
    const cplx cl(0.25 * lam, 0.0);
    auto value = [inner = es.eval, chi, offset, ce, cl](const Momentum3& p) {
        const Matrix s = inner(p);
        return offset + s * ce + chi * s * cl;
    };
    auto slope = [inner = es.deriv, chi, ce, cl](int a, const Momentum3& p) {
        const Matrix ds = inner(a, p);
        return ds * ce + chi * ds * cl;
    };
    return {name, std::move(value), std::move(slope)};
}

OperatorField constant_field(std::string name, const Matrix& value) {
    const Matrix zero = Matrix::zero(value.dim());
    auto eval = [value](const Momentum3&) { return value; };
    auto slope = [zero](int a, const Momentum3&) {
        check_component(a);
        return zero;
    };
    return {std::move(name), std::move(eval), std::move(slope)};
}

}  // namespace zmdirac
