#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "zmdirac/discrete.hpp"
#include "zmdirac/sampling.hpp"

using namespace zmdirac;

namespace {

std::vector<Momentum3> probe_momenta(int n) {
    auto out = momentum_sample(777001, "discrete-test", n, 0.1, 10.0);
    out.push_back(Momentum3::axis(1));
    out.push_back(Momentum3::axis(3));
    out.push_back({0.5, -1.5, 0.7});
    return out;
}

}  // namespace

TEST_CASE("standard operators have the expected matrices and flags") {
    const Algebra& alg = Algebra::standard();
    const StandardOps ops = standard_ops(alg);

    CHECK(distance(ops.parity.matrix, alg.g.gamma[0]) == 0.0);
    CHECK_FALSE(ops.parity.conjugates);
    CHECK(ops.parity.momentum_sign == -1);
    CHECK(ops.parity.frequency_sign == +1);

    Matrix t2(4);
    t2(0, 1) = 1.0;
    t2(1, 0) = -1.0;
    t2(2, 3) = 1.0;
    t2(3, 2) = -1.0;
    CHECK(distance(ops.time_reversal_conj.matrix, t2) < 1e-15);
    CHECK(ops.time_reversal_conj.conjugates);
    CHECK(ops.time_reversal_conj.momentum_sign == -1);
    CHECK(ops.time_reversal_conj.frequency_sign == +1);

    Matrix c(4);
    c(0, 3) = 1.0;
    c(1, 2) = -1.0;
    c(2, 1) = -1.0;
    c(3, 0) = 1.0;
    CHECK(distance(ops.charge.matrix, c) < 1e-15);
    CHECK(ops.charge.conjugates);
    CHECK(ops.charge.momentum_sign == -1);
    CHECK(ops.charge.frequency_sign == -1);

    Matrix t1(4);
    t1(0, 2) = cplx(0, 1);
    t1(1, 3) = cplx(0, 1);
    t1(2, 0) = cplx(0, -1);
    t1(3, 1) = cplx(0, -1);
    CHECK(distance(ops.time_reversal_linear.matrix, t1) < 1e-15);
    CHECK_FALSE(ops.time_reversal_linear.conjugates);
    CHECK(ops.time_reversal_linear.momentum_sign == +1);
    CHECK(ops.time_reversal_linear.frequency_sign == -1);

    for (const auto* op : {&ops.parity, &ops.time_reversal_conj, &ops.charge,
                           &ops.time_reversal_linear})
        CHECK(distance(op->matrix * op->matrix.adjoint(), Matrix::identity(4)) < 1e-14);
}

TEST_CASE("squares and the combined inversion") {
    const Algebra& alg = Algebra::standard();
    const StandardOps ops = standard_ops(alg);
    const Matrix id = Matrix::identity(4);

    const SymmetryOp p2 = compose(ops.parity, ops.parity, "PP");
    CHECK(distance(p2.matrix, id) < 1e-15);
    CHECK_FALSE(p2.conjugates);
    CHECK(p2.momentum_sign == +1);
    CHECK(p2.frequency_sign == +1);

    const SymmetryOp t2sq = compose(ops.time_reversal_conj, ops.time_reversal_conj, "TT");
    CHECK(distance(t2sq.matrix, -id) < 1e-15);
    CHECK_FALSE(t2sq.conjugates);

    const SymmetryOp c2 = compose(ops.charge, ops.charge, "CC");
    CHECK(distance(c2.matrix, id) < 1e-15);
    CHECK_FALSE(c2.conjugates);

    const SymmetryOp cpt =
        compose(compose(ops.charge, ops.parity, "CP"), ops.time_reversal_conj, "CPT");
    CHECK(distance(cpt.matrix, -alg.i_gamma4) < 1e-15);
    CHECK_FALSE(cpt.conjugates);
    CHECK(cpt.momentum_sign == -1);
    CHECK(cpt.frequency_sign == -1);
}

TEST_CASE("the six grading relations hold with the stated signs") {
    const Algebra& alg = Algebra::standard();
    const StandardOps ops = standard_ops(alg);
    const OperatorField hel = helicity_field(alg);
    const OperatorField es = energy_sign_field(alg);
    for (const auto& p : probe_momenta(10)) {
        CHECK(field_bracket_residual(ops.parity, hel, BracketSign::anticommutator, p) < 1e-12);
        CHECK(field_bracket_residual(ops.parity, es, BracketSign::commutator, p) < 1e-12);
        CHECK(field_bracket_residual(ops.time_reversal_conj, hel, BracketSign::commutator, p) <
              1e-12);
        CHECK(field_bracket_residual(ops.time_reversal_conj, es, BracketSign::commutator, p) <
              1e-12);
        CHECK(field_bracket_residual(ops.charge, hel, BracketSign::commutator, p) < 1e-12);
        CHECK(field_bracket_residual(ops.charge, es, BracketSign::anticommutator, p) < 1e-12);

        // Opposite-sign controls stay visibly nonzero.
        CHECK(field_bracket_residual(ops.parity, hel, BracketSign::commutator, p) > 1.0);
        CHECK(field_bracket_residual(ops.parity, es, BracketSign::anticommutator, p) > 1.0);
        CHECK(field_bracket_residual(ops.charge, es, BracketSign::commutator, p) > 1.0);
    }
}

TEST_CASE("projector intertwining relations") {
    const Algebra& alg = Algebra::standard();
    const StandardOps ops = standard_ops(alg);
    auto field = [&](int family, int sign) { return projector_field(alg, family, sign); };
    for (const auto& p : probe_momenta(10)) {
        for (int sign : {-1, +1}) {
            // Parity swaps the signs of families 1 and 2 and fixes family 3.
            CHECK(relation_residual(ops.parity, field(1, sign), field(1, -sign), p) < 1e-12);
            CHECK(relation_residual(ops.parity, field(2, sign), field(2, -sign), p) < 1e-12);
            CHECK(relation_residual(ops.parity, field(3, sign), field(3, sign), p) < 1e-12);
            // The antiunitary reversal fixes every family.
            for (int family = 1; family <= 3; ++family)
                CHECK(relation_residual(ops.time_reversal_conj, field(family, sign),
                                        field(family, sign), p) < 1e-12);
            // Conjugation swaps family 1, fixes family 2, and swaps family 3.
            CHECK(relation_residual(ops.charge, field(1, sign), field(1, -sign), p) < 1e-12);
            CHECK(relation_residual(ops.charge, field(2, sign), field(2, sign), p) < 1e-12);
            CHECK(relation_residual(ops.charge, field(3, sign), field(3, -sign), p) < 1e-12);
            // The same-sign variant for family 3 is visibly violated.
            CHECK(relation_residual(ops.charge, field(3, sign), field(3, sign), p) > 1.0);
        }
    }
}

TEST_CASE("solution space dimensions per system") {
    const Algebra& alg = Algebra::standard();
    const auto systems = standard_systems(alg);
    REQUIRE(systems.size() == 4);
    CHECK(systems[0].name == "(1)");
    CHECK_FALSE(systems[0].constraint.has_value());
    for (const auto& p : probe_momenta(6)) {
        CHECK(solution_space(alg, systems[0], p, +1).dim() == 2);
        CHECK(solution_space(alg, systems[0], p, -1).dim() == 2);
        CHECK(solution_space(alg, systems[1], p, +1).dim() == 1);
        CHECK(solution_space(alg, systems[1], p, -1).dim() == 1);
        CHECK(solution_space(alg, systems[2], p, +1).dim() == 1);
        CHECK(solution_space(alg, systems[2], p, -1).dim() == 1);
        CHECK(solution_space(alg, systems[3], p, +1).dim() == 0);
        CHECK(solution_space(alg, systems[3], p, -1).dim() == 2);
    }
    CHECK_THROWS_AS(solution_space(alg, systems[0], Momentum3::axis(1), 0),
                    std::invalid_argument);
}

TEST_CASE("subspace transport under antiunitary maps") {
    const Algebra& alg = Algebra::standard();
    const StandardOps ops = standard_ops(alg);
    Vec v(4);
    v[0] = cplx(0.6, 0.0);
    v[1] = cplx(0.0, 0.8);
    const Subspace line(4, {v});
    const Subspace image = transform_subspace(ops.time_reversal_conj, line);
    CHECK(image.dim() == 1);
    Vec expect(4);
    // conj(v) = (0.6, -0.8i); multiplying by the block rotation sends
    // (x0, x1, x2, x3) to (x1, -x0, x3, -x2).
    expect[0] = cplx(0.0, -0.8);
    expect[1] = cplx(-0.6, 0.0);
    const Matrix diff = image.projector() - outer(expect, expect);
    CHECK(diff.fnorm() < 1e-12);
}

TEST_CASE("free system is invariant under all seven operators") {
    const Algebra& alg = Algebra::standard();
    const auto ops = classification_ops(alg);
    REQUIRE(ops.size() == 7);
    const EquationSystem free_sys = standard_systems(alg)[0];
    for (const auto& p : probe_momenta(6))
        for (const auto& op : ops) CHECK(preserves_solutions(alg, free_sys, op, p));
}

TEST_CASE("classification table matches the recorded verdicts") {
    const Algebra& alg = Algebra::standard();
    const auto ops = classification_ops(alg);
    const auto momenta = probe_momenta(22);
    // Expected rows over columns P(1), T(2), T(1), C, CP(1), CP(1)T(2), CP(1)T(1).
    const std::map<std::string, std::vector<bool>> expected = {
        {"(1)", {true, true, true, true, true, true, true}},
        {"(1)+(2)", {false, true, false, false, true, true, false}},
        {"(1)+(3)", {false, true, true, true, false, false, false}},
        {"(1)+(4)", {true, true, false, false, false, false, true}},
    };
    CHECK(ops[0].name == "P(1)");
    CHECK(ops[1].name == "T(2)");
    CHECK(ops[2].name == "T(1)");
    CHECK(ops[3].name == "C");
    CHECK(ops[4].name == "CP(1)");
    CHECK(ops[5].name == "CP(1)T(2)");
    CHECK(ops[6].name == "CP(1)T(1)");
    for (const auto& sys : standard_systems(alg)) {
        const SystemVerdict verdict = classify_system(alg, sys, ops, momenta);
        const auto& row = expected.at(sys.name);
        REQUIRE(verdict.verdicts.size() == row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            CHECK(verdict.verdicts[k].invariant == row[k]);
            const int viol = verdict.verdicts[k].violations;
            const int checked = verdict.verdicts[k].checked;
            // Verdicts are unanimous: preservation holds everywhere or
            // fails everywhere in the sample.
            const bool unanimous = viol == 0 || viol == checked;
            CHECK(unanimous);
        }
    }
}
