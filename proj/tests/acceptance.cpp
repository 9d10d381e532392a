// Acceptance gate: every release criterion checked at its pinned tolerance,
// one line per criterion.  Tolerances are fixed here on purpose: they must
// not drift with runtime configuration.
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "zmdirac/config.hpp"
#include "zmdirac/discrete.hpp"
#include "zmdirac/emit.hpp"
#include "zmdirac/equivalence.hpp"
#include "zmdirac/gamma.hpp"
#include "zmdirac/irreps.hpp"
#include "zmdirac/matrix.hpp"
#include "zmdirac/modes.hpp"
#include "zmdirac/momentum.hpp"
#include "zmdirac/poincare.hpp"
#include "zmdirac/sampling.hpp"
#include "zmdirac/so4.hpp"
#include "zmdirac/suites.hpp"

using namespace zmdirac;

namespace {

constexpr double kTolClifford = 1e-12;
constexpr double kTolExact = 1e-10;
constexpr double kTolFd = 1e-6;
constexpr double kFdStep = 1e-4;
constexpr double kControlFloor = 0.1;
constexpr std::uint64_t kSeed = 1973;

int g_failures = 0;

void criterion(const char* id, bool ok, const std::string& detail) {
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    if (!ok) ++g_failures;
}

std::vector<OperatorField> projector_fields(const Algebra& alg) {
    std::vector<OperatorField> out;
    for (int family = 1; family <= 3; ++family)
        for (int sign : {+1, -1}) out.push_back(projector_field(alg, family, sign));
    for (int eps : {+1, -1})
        for (int lam : {+1, -1}) out.push_back(minimal_projector_field(alg, eps, lam));
    return out;
}

const std::array<std::pair<int, int>, 4> kLabels = {
    std::pair<int, int>{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};

// ---------------------------------------------------------------------------

void c1_clifford() {
    const Algebra& alg = Algebra::standard();
    const SuiteReport rel = check_clifford(alg.g, kTolClifford);
    double worst = 0.0;
    for (const auto& p : momentum_sample(kSeed, "acceptance-c1", 200, 1e-3, 1e3)) {
        const double e = energy(p);
        const Matrix h = hamiltonian(alg, p);
        worst = std::max(worst, distance(h * h, (e * e) * Matrix::identity(4)) / (e * e));
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "anticommutation relations and dispersion on 200 momenta, worst %.2e (tol %.0e)",
                  worst, kTolClifford);
    criterion("C1", rel.all_ok() && worst <= kTolClifford, buf);
}

void c2_projectors() {
    const Algebra& alg = Algebra::standard();
    double worst = 0.0;
    for (const auto& p : momentum_sample(kSeed, "acceptance-c2", 200, 1e-3, 1e3)) {
        const double e = energy(p);
        const Matrix i4 = Matrix::identity(4);
        for (const auto& f : projector_fields(alg)) {
            const Matrix q = f.eval(p);
            const double rank = q.trace().real();
            worst = std::max({worst, distance(q * q, q), distance(q, q.adjoint()),
                              std::abs(rank - std::round(rank)),
                              translation_residual(alg, f, p) / e});
        }
        for (int family = 1; family <= 3; ++family)
            worst = std::max(worst, distance(projector(alg, family, +1, p) +
                                                 projector(alg, family, -1, p),
                                             i4));
        Matrix sum = Matrix::zero(4);
        for (const auto& [eps, lam] : kLabels) sum += minimal_projector(alg, eps, lam, p);
        worst = std::max(worst, distance(sum, i4));
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "ten projectors: idempotent, Hermitian, ranked, conserved, complete; worst %.2e",
                  worst);
    criterion("C2", worst <= kTolExact, buf);
}

void c3_generators() {
    const Algebra& alg = Algebra::standard();
    double worst_fd = 0.0;
    double worst_ratio = 0.0;
    double control_min = 1e300;
    const OperatorField g0 = constant_field("g0", alg.g.gamma[0]);
    const OperatorField spin3 = constant_field("spin3_half", 0.5 * alg.spin.Sigma[2]);
    for (const auto& p : momentum_sample(kSeed, "acceptance-c3", 200, 0.5, 2.0)) {
        const double h = kFdStep * energy(p);
        for (const auto& f : projector_fields(alg)) {
            const double rot_fine = rotation_residual_fd_max(alg, f, p, h);
            const double boost_fine = boost_residual_fd_max(alg, f, p, h);
            worst_fd = std::max({worst_fd, rot_fine, boost_fine});
            worst_ratio = std::max(
                {worst_ratio,
                 step_ratio_violation(rotation_residual_fd_max(alg, f, p, 2.0 * h), rot_fine),
                 step_ratio_violation(boost_residual_fd_max(alg, f, p, 2.0 * h), boost_fine)});
        }
        control_min = std::min({control_min, translation_residual(alg, g0, p) / energy(p),
                                boost_residual_fd_max(alg, spin3, p, h)});
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "finite-difference invariance: worst %.2e (tol %.0e), step-ratio violation %.2e, "
                  "controls >= %.2f",
                  worst_fd, kTolFd, worst_ratio, control_min);
    criterion("C3", worst_fd <= kTolFd && worst_ratio == 0.0 && control_min > kControlFloor, buf);
}

void c4_irreps() {
    const Algebra& alg = Algebra::standard();
    bool ok = true;
    double worst = 0.0;
    for (const auto& p : momentum_sample(kSeed, "acceptance-c4", 200, 1e-3, 1e3)) {
        const auto lines = decompose(alg, p);
        if (lines.size() != 4) ok = false;
        const Matrix es = energy_sign(alg, p);
        const Matrix hel = helicity_matrix(alg, p);
        for (const auto& line : lines) {
            worst = std::max(worst, (es * line.vector - line.vector * cplx(line.eps, 0.0)).norm());
            worst = std::max(worst, (hel * line.vector - line.vector * cplx(line.lam, 0.0)).norm());
        }
        for (int family = 1; family <= 3; ++family)
            for (int sign : {+1, -1}) {
                const auto cls = classify_constraint(alg, projector(alg, family, sign, p), p);
                if (cls.kernel_labels.size() != 2 || cls.range_labels.size() != 2) ok = false;
                for (const auto& [eps, lam] : cls.range_labels) {
                    const bool member = family == 1   ? lam * eps == sign
                                        : family == 2 ? lam == sign
                                                      : eps == sign;
                    if (!member) ok = false;
                }
            }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "four one-dimensional joint lines with momentum-independent patterns, worst %.2e",
                  worst);
    criterion("C4", ok && worst <= kTolExact, buf);
}

void c5_discrete_relations() {
    const Algebra& alg = Algebra::standard();
    const StandardOps ops = standard_ops(alg);
    const OperatorField eps_f = energy_sign_field(alg);
    const OperatorField lam_f = helicity_field(alg);
    double worst = 0.0;
    for (const auto& p : momentum_sample(kSeed, "acceptance-c5", 50, 1e-3, 1e3)) {
        worst = std::max(
            {worst,
             field_bracket_residual(ops.parity, lam_f, BracketSign::anticommutator, p),
             field_bracket_residual(ops.parity, eps_f, BracketSign::commutator, p),
             field_bracket_residual(ops.time_reversal_conj, lam_f, BracketSign::commutator, p),
             field_bracket_residual(ops.time_reversal_conj, eps_f, BracketSign::commutator, p),
             field_bracket_residual(ops.charge, lam_f, BracketSign::commutator, p),
             field_bracket_residual(ops.charge, eps_f, BracketSign::anticommutator, p)});
        for (int s : {+1, -1}) {
            const auto pf = [&](int family, int sign) { return projector_field(alg, family, sign); };
            worst = std::max({worst,
                              relation_residual(ops.parity, pf(1, s), pf(1, -s), p),
                              relation_residual(ops.parity, pf(2, s), pf(2, -s), p),
                              relation_residual(ops.parity, pf(3, s), pf(3, s), p),
                              relation_residual(ops.time_reversal_conj, pf(1, s), pf(1, s), p),
                              relation_residual(ops.time_reversal_conj, pf(2, s), pf(2, s), p),
                              relation_residual(ops.time_reversal_conj, pf(3, s), pf(3, s), p),
                              relation_residual(ops.charge, pf(1, s), pf(1, -s), p),
                              relation_residual(ops.charge, pf(2, s), pf(2, s), p),
                              relation_residual(ops.charge, pf(3, s), pf(3, -s), p)});
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "six grading relations and the projector intertwinings, worst %.2e (tol %.0e)",
                  worst, kTolExact);
    criterion("C5", worst <= kTolExact, buf);
}

void c6_classification() {
    const Algebra& alg = Algebra::standard();
    const std::map<std::string, std::array<bool, 7>> expected = {
        {"(1)", {true, true, true, true, true, true, true}},
        {"(1)+(2)", {false, true, false, false, true, true, false}},
        {"(1)+(3)", {false, true, true, true, false, false, false}},
        {"(1)+(4)", {true, true, false, false, false, false, true}},
    };
    const auto momenta = momentum_sample(kSeed, "acceptance-c6", 24, 1e-3, 1e3);
    const auto ops = classification_ops(alg);
    bool ok = true;
    for (const auto& sys : standard_systems(alg)) {
        const SystemVerdict verdict = classify_system(alg, sys, ops, momenta);
        const auto& want = expected.at(sys.name);
        for (std::size_t k = 0; k < verdict.verdicts.size(); ++k) {
            if (verdict.verdicts[k].invariant != want[k]) ok = false;
            if (verdict.verdicts[k].checked != static_cast<int>(momenta.size())) ok = false;
        }
    }
    criterion("C6", ok, "invariance table matches the expected pattern for all four systems");
}

void c7_modes() {
    const Algebra& alg = Algebra::standard();
    double worst = 0.0;
    for (const auto& p : momentum_sample(kSeed, "acceptance-c7", 50, 1e-3, 1e3)) {
        for (int family = 1; family <= 3; ++family)
            for (int sign : {+1, -1})
                for (double kappa : {0.0, 1.0, -2.5}) {
                    const ModeResiduals r = check_mode(alg, family, sign, kappa, p);
                    worst = std::max({worst, r.preservation, r.restriction, r.hermiticity,
                                      r.spectrum});
                }
    }
    double worst_weyl = 0.0;
    const auto weyl_momenta = momentum_sample(kSeed, "acceptance-c7-weyl", 200, 1e-3, 1e3);
    for (int chi : {+1, -1}) {
        const WeylReducer red(alg, chi);
        for (const auto& p : weyl_momenta)
            worst_weyl = std::max(worst_weyl, red.reduction_residual(p));
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "projected evolution preserved for every family, sign, coupling (worst %.2e); "
                  "fixed two-component reduction worst %.2e",
                  worst, worst_weyl);
    criterion("C7", worst <= kTolExact && worst_weyl <= kTolExact, buf);
}

void c8_reduced_systems() {
    const Algebra& alg = Algebra::standard();
    bool ok = true;
    for (const auto& p : momentum_sample(kSeed, "acceptance-c8", 50, 0.5, 2.0)) {
        const double e = energy(p);
        for (const auto& [eps, lam] : kLabels) {
            const Matrix q = minimal_projector(alg, eps, lam, p);
            int sum3 = 0;
            for (int s : {+1, -1}) {
                const Subspace base = reduced_three_component_space(alg, q, 0.0, s * e, p);
                sum3 += base.dim();
                if (base.dim() != (s == eps ? 1 : 2)) ok = false;
                for (double kb : {1.0, 10.0}) {
                    if (!subspace_equal(base,
                                        reduced_three_component_space(alg, q, kb, s * e, p)))
                        ok = false;
                }
            }
            if (sum3 != 3) ok = false;
            int sum1 = 0;
            for (int s : {+1, -1}) {
                const std::array<double, 3> kb0{0.0, 0.0, 0.0};
                const std::array<double, 3> kb1{1.0, 2.0, 3.0};
                const Subspace base = reduced_one_component_space(
                    alg, q, off_range_perturbation(alg, eps, lam, kb0, p), s * e, p);
                sum1 += base.dim();
                if (base.dim() != (s == eps ? 1 : 0)) ok = false;
                const Subspace other = reduced_one_component_space(
                    alg, q, off_range_perturbation(alg, eps, lam, kb1, p), s * e, p);
                if (other.dim() != base.dim()) ok = false;
                if (base.dim() > 0 && !subspace_equal(base, other)) ok = false;
            }
            if (sum1 != 1) ok = false;
        }
    }
    const auto census = enumerate_subsidiary_conditions();
    std::array<int, 5> by_rank{};
    for (const auto& entry : census) by_rank[static_cast<std::size_t>(entry.rank)] += 1;
    const bool counts_ok = census.size() == 14 && by_rank[3] == 4 && by_rank[2] == 6 &&
                           by_rank[1] == 4;
    double worst_inv = 0.0;
    for (const auto& p : momentum_sample(kSeed, "acceptance-c8-inv", 20, 0.5, 2.0)) {
        for (const auto& entry : census) {
            const OperatorField f = census_field(alg, entry);
            worst_inv = std::max({worst_inv, translation_residual(alg, f, p) / energy(p),
                                  rotation_residual_max(alg, f, p), boost_residual_max(alg, f, p)});
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "reduced solution contents 3 and 1, coupling-independent; census 4+6+4 = 14 "
                  "(15 with the free system), invariance worst %.2e",
                  worst_inv);
    criterion("C8", ok && counts_ok && worst_inv <= kTolExact, buf);
}

void c9_internal_algebra() {
    const Algebra& alg = Algebra::standard();
    double worst = 0.0;
    double control_min = 1e300;
    bool branch_ok = true;
    const std::vector<std::array<double, 3>> want = {
        {-1.0, 0.0, -0.5}, {-1.0, 0.0, 0.5}, {1.0, -0.5, 0.0}, {1.0, 0.5, 0.0}};
    for (const auto& p : momentum_sample(kSeed, "acceptance-c9", 200, 1e-3, 1e3)) {
        const double e = energy(p);
        const Matrix h = hamiltonian(alg, p);
        const InternalGenerators rot = internal_rotated(alg, p);
        const Matrix l1 = direction_component(rot.s, p);
        const Matrix l2 = direction_component(rot.tau, p);
        worst = std::max({worst, closure_residual(rot),
                          op_norm(bracket(h, l1, BracketSign::commutator)) / e,
                          op_norm(bracket(h, l2, BracketSign::commutator)) / e,
                          distance(triple_casimir(rot.s), 0.75 * projector(alg, 3, +1, p)),
                          distance(triple_casimir(rot.tau), 0.75 * projector(alg, 3, -1, p))});
        const InternalGenerators loc = internal_local(alg);
        control_min = std::min(
            {control_min, closure_residual(internal_mixed(alg, p)),
             op_norm(bracket(h, direction_component(loc.s, p), BracketSign::commutator)) / e});
        const auto lines = branch_lines(alg, p);
        if (lines.size() != 4) {
            branch_ok = false;
        } else {
            for (std::size_t k = 0; k < 4; ++k) {
                if (lines[k].eps != static_cast<int>(want[k][0]) ||
                    std::abs(lines[k].m_s - want[k][1]) > 0.0 ||
                    std::abs(lines[k].m_tau - want[k][2]) > 0.0)
                    branch_ok = false;
            }
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "commuting spin pair closes and is conserved (worst %.2e); branching labels "
                  "fixed; local and mixed variants fail as expected (min defect %.2f)",
                  worst, control_min);
    criterion("C9", worst <= kTolExact && control_min > kControlFloor && branch_ok, buf);
}

void c10_equivalence() {
    const Algebra& alg = Algebra::standard();
    double worst = 0.0;
    for (const auto& p : momentum_sample(kSeed, "acceptance-c10", 100, 0.5, 2.0)) {
        for (int sign : {+1, -1})
            for (double kappa : {1.0, -3.0}) {
                for (const EquivalenceResiduals& r :
                     {check_equivalence_dim4(alg, sign, kappa, p),
                      check_equivalence_dim2(sign, kappa, p)}) {
                    worst = std::max({worst, r.nilpotent, r.anticommute, r.inverse, r.similarity,
                                      r.pseudo_hermitian, r.positivity, r.spectrum,
                                      r.solution_transport});
                }
            }
    }
    const auto momenta = momentum_sample(kSeed, "acceptance-c10-table", 10, 0.5, 2.0);
    const auto ops = classification_ops(alg);
    bool tables_ok = true;
    for (const auto& sys : standard_systems(alg)) {
        const SystemVerdict plain = classify_system(alg, sys, ops, momenta);
        for (double kappa : {1.0, 5.0}) {
            const SystemVerdict deformed =
                classify_deformed_system(alg, sys, ops, +1, kappa, momenta);
            for (std::size_t k = 0; k < plain.verdicts.size(); ++k) {
                if (plain.verdicts[k].invariant != deformed.verdicts[k].invariant)
                    tables_ok = false;
            }
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "nilpotent deformations exactly equivalent on both spaces (worst %.2e); "
                  "deformed invariance tables unchanged",
                  worst);
    criterion("C10", worst <= kTolExact && tables_ok, buf);
}

void c11_determinism() {
    RunConfig cfg;
    cfg.samples = 12;
    const std::string a = report_json(cfg, run_suites(cfg));
    const std::string b = report_json(cfg, run_suites(cfg));
    RunConfig serial = cfg;
    serial.exec = ExecMode::serial;
    const std::string c = report_json(serial, run_suites(serial));
    criterion("C11", a == b && a == c,
              "byte-identical reports across repeated runs and execution modes");
}

}  // namespace

int main() {
    c1_clifford();
    c2_projectors();
    c3_generators();
    c4_irreps();
    c5_discrete_relations();
    c6_classification();
    c7_modes();
    c8_reduced_systems();
    c9_internal_algebra();
    c10_equivalence();
    c11_determinism();
    std::printf("acceptance: %d criterion failure(s)\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
