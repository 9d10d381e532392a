#include "zmdirac/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zmdirac/discrete.hpp"
#include "zmdirac/equivalence.hpp"
#include "zmdirac/gamma.hpp"
#include "zmdirac/irreps.hpp"
#include "zmdirac/matrix.hpp"
#include "zmdirac/modes.hpp"
#include "zmdirac/momentum.hpp"
#include "zmdirac/poincare.hpp"
#include "zmdirac/sampling.hpp"
#include "zmdirac/so4.hpp"
#include "zmdirac/sweep.hpp"

namespace zmdirac {
namespace {

// Magnitude window for checks whose residuals are eigenvector based: a
// coupling or step far from the energy scale squares into ill conditioned
// forms, so those suites sample near unit magnitude.
constexpr double kUnitLo = 0.5;
constexpr double kUnitHi = 2.0;

std::vector<Momentum3> draw(const RunConfig& cfg, const std::string& stream, int count,
                            bool unit_window) {
    const double lo = unit_window ? kUnitLo : cfg.scale_min;
    const double hi = unit_window ? kUnitHi : cfg.scale_max;
    return momentum_sample(cfg.seed, stream, count, lo, hi);
}

// Per-momentum rows filled index-parallel, aggregated serially afterwards so
// serial and parallel execution produce identical reports.
template <std::size_t K, typename F>
std::vector<std::array<double, K>> sweep_rows(const RunConfig& cfg,
                                              const std::vector<Momentum3>& momenta, F&& fn) {
    std::vector<std::array<double, K>> rows(momenta.size());
    for_each_index(static_cast<int>(momenta.size()), cfg.exec,
                   [&](int i) { rows[static_cast<std::size_t>(i)] = fn(momenta[static_cast<std::size_t>(i)]); });
    return rows;
}

template <std::size_t K>
double col_max(const std::vector<std::array<double, K>>& rows, std::size_t k) {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r[k]);
    return m;
}

template <std::size_t K>
double col_min(const std::vector<std::array<double, K>>& rows, std::size_t k) {
    double m = rows.empty() ? 0.0 : rows[0][k];
    for (const auto& r : rows) m = std::min(m, r[k]);
    return m;
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

std::string family_name(int family, int sign) {
    return "P" + std::to_string(family) + sign_str(sign);
}

std::string minimal_name(int eps, int lam) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "Q(%+d,%+d)", eps, lam);
    return buf;
}

std::string family_anchor(int family) {
    switch (family) {
        case 1: return "Eq. (2)";
        case 2: return "Eq. (3)";
        default: return "Eq. (4)";
    }
}

struct LabeledField {
    OperatorField field;
    std::string anchor;
    double rank;  // trace of the projector; 0 marks a non-projector field
};

// The ten commuting constraints plus the two gradings, in report order.
std::vector<LabeledField> conserved_fields(const Algebra& alg) {
    std::vector<LabeledField> out;
    out.push_back({energy_sign_field(alg), "Eq. (3)", 0.0});
    out.push_back({helicity_field(alg), "Eq. (3)", 0.0});
    for (int family = 1; family <= 3; ++family)
        for (int sign : {+1, -1})
            out.push_back({projector_field(alg, family, sign), family_anchor(family), 2.0});
    for (int eps : {+1, -1})
        for (int lam : {+1, -1})
            out.push_back({minimal_projector_field(alg, eps, lam), "Eq. (16)", 1.0});
    return out;
}

const std::array<std::pair<int, int>, 4> kMinimalLabels = {
    std::pair<int, int>{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};

// Expected invariance pattern, op columns in classification_ops order.
const std::map<std::string, std::array<bool, 7>> kExpectedClassification = {
    {"(1)", {true, true, true, true, true, true, true}},
    {"(1)+(2)", {false, true, false, false, true, true, false}},
    {"(1)+(3)", {false, true, true, true, false, false, false}},
    {"(1)+(4)", {true, true, false, false, false, false, true}},
};

std::string classification_anchor(const std::string& system) {
    if (system == "(1)+(2)") return "Eq. (10)";
    if (system == "(1)+(3)") return "Eq. (11)";
    if (system == "(1)+(4)") return "Eq. (12)";
    return "Eq. (13)";
}

// ---------------------------------------------------------------------------

SuiteReport run_clifford(const RunConfig& cfg) {
    const Algebra& alg = Algebra::standard();
    SuiteReport rep;
    rep.suite = "clifford";
    rep.merge(check_clifford(alg.g, cfg.tol_exact));
    rep.suite = "clifford";

    const auto momenta = draw(cfg, "clifford", cfg.samples, false);
    const auto rows = sweep_rows<3>(cfg, momenta, [&](const Momentum3& p) {
        const double e = energy(p);
        const Matrix h = hamiltonian(alg, p);
        const Matrix i4 = Matrix::identity(4);
        std::array<double, 3> r{};
        r[0] = distance(h * h, (e * e) * i4) / (e * e);
        const Matrix es = energy_sign(alg, p);
        const Matrix hel = helicity_matrix(alg, p);
        r[1] = std::max(distance(es * es, i4), distance(es, es.adjoint()));
        r[2] = std::max(distance(hel * hel, i4), distance(hel, hel.adjoint()));
        return r;
    });
    rep.add("dispersion", "Eq. (1)", col_max(rows, 0), cfg.tol_exact);
    rep.add("energy_sign_involution", "Eq. (3)", col_max(rows, 1), cfg.tol_exact);
    rep.add("helicity_involution", "Eq. (3)", col_max(rows, 2), cfg.tol_exact);
    rep.annotate("sample", std::to_string(momenta.size()) + " momenta, magnitudes log-uniform in [" +
                               std::to_string(cfg.scale_min) + ", " + std::to_string(cfg.scale_max) + "]");
    return rep;
}

SuiteReport run_projectors(const RunConfig& cfg) {
    const Algebra& alg = Algebra::standard();
    SuiteReport rep;
    rep.suite = "projectors";
    const auto momenta = draw(cfg, "projectors", cfg.samples, false);
    const auto fields = conserved_fields(alg);

    for (const auto& lf : fields) {
        if (lf.rank == 0.0) continue;  // the gradings are covered by the clifford suite
        const auto rows = sweep_rows<4>(cfg, momenta, [&](const Momentum3& p) {
            const Matrix q = lf.field.eval(p);
            std::array<double, 4> r{};
            r[0] = distance(q * q, q);
            r[1] = distance(q, q.adjoint());
            r[2] = std::abs(q.trace().real() - lf.rank);
            r[3] = translation_residual(alg, lf.field, p) / energy(p);
            return r;
        });
        rep.add(lf.field.name + "_idempotent", lf.anchor, col_max(rows, 0), cfg.tol_exact);
        rep.add(lf.field.name + "_hermitian", lf.anchor, col_max(rows, 1), cfg.tol_exact);
        rep.add(lf.field.name + "_rank", lf.anchor, col_max(rows, 2), cfg.tol_exact);
        rep.add(lf.field.name + "_conserved", lf.anchor, col_max(rows, 3), cfg.tol_exact);
    }

    const auto comb = sweep_rows<6>(cfg, momenta, [&](const Momentum3& p) {
        const Matrix i4 = Matrix::identity(4);
        std::array<double, 6> r{};
        for (int family = 1; family <= 3; ++family) {
            const Matrix plus = projector(alg, family, +1, p);
            const Matrix minus = projector(alg, family, -1, p);
            r[static_cast<std::size_t>(family - 1)] = distance(plus + minus, i4);
            r[3] = std::max(r[3], distance(plus * minus, Matrix::zero(4)));
        }
        Matrix sum = Matrix::zero(4);
        for (const auto& [eps, lam] : kMinimalLabels) {
            const Matrix q = minimal_projector(alg, eps, lam, p);
            sum = sum + q;
            r[5] = std::max(r[5], distance(q, projector(alg, 2, lam, p) * projector(alg, 3, eps, p)));
        }
        r[4] = distance(sum, i4);
        return r;
    });
    rep.add("family1_complete", "Eq. (2)", col_max(comb, 0), cfg.tol_exact);
    rep.add("family2_complete", "Eq. (3)", col_max(comb, 1), cfg.tol_exact);
    rep.add("family3_complete", "Eq. (4)", col_max(comb, 2), cfg.tol_exact);
    rep.add("family_orthogonal", "Eqs. (2)-(4)", col_max(comb, 3), cfg.tol_exact);
    rep.add("minimal_complete", "Eq. (16)", col_max(comb, 4), cfg.tol_exact);
    rep.add("minimal_factorization", "Eq. (16)", col_max(comb, 5), cfg.tol_exact);
    return rep;
}

SuiteReport run_poincare(const RunConfig& cfg) {
    const Algebra& alg = Algebra::standard();
    SuiteReport rep;
    rep.suite = "poincare";
    const auto momenta = draw(cfg, "poincare", cfg.samples, true);

    for (const auto& lf : conserved_fields(alg)) {
        const auto rows = sweep_rows<7>(cfg, momenta, [&](const Momentum3& p) {
            const double h = cfg.fd_step * energy(p);
            std::array<double, 7> r{};
            r[0] = translation_residual(alg, lf.field, p) / energy(p);
            r[1] = rotation_residual_max(alg, lf.field, p);
            r[2] = boost_residual_max(alg, lf.field, p);
            const double rot_fine = rotation_residual_fd_max(alg, lf.field, p, h);
            const double rot_coarse = rotation_residual_fd_max(alg, lf.field, p, 2.0 * h);
            const double boost_fine = boost_residual_fd_max(alg, lf.field, p, h);
            const double boost_coarse = boost_residual_fd_max(alg, lf.field, p, 2.0 * h);
            r[3] = rot_fine;
            r[4] = boost_fine;
            r[5] = step_ratio_violation(rot_coarse, rot_fine);
            r[6] = step_ratio_violation(boost_coarse, boost_fine);
            return r;
        });
        rep.add(lf.field.name + "_translation", "Eq. (5)", col_max(rows, 0), cfg.tol_exact);
        rep.add(lf.field.name + "_rotation", "Eq. (5)", col_max(rows, 1), cfg.tol_exact);
        rep.add(lf.field.name + "_boost", "Eq. (5)", col_max(rows, 2), cfg.tol_exact);
        rep.add(lf.field.name + "_rotation_fd", "Eq. (5)", col_max(rows, 3), cfg.tol_fd);
        rep.add(lf.field.name + "_boost_fd", "Eq. (5)", col_max(rows, 4), cfg.tol_fd);
        rep.add(lf.field.name + "_rotation_ratio", "Eq. (5)", col_max(rows, 5), 0.0);
        rep.add(lf.field.name + "_boost_ratio", "Eq. (5)", col_max(rows, 6), 0.0);
    }

    const OperatorField g0 = constant_field("g0", alg.g.gamma[0]);
    OperatorField g1p1;
    g1p1.name = "g1p1";
    {
        const Matrix g1 = alg.g.gamma[1];
        g1p1.eval = [g1](const Momentum3& p) { return p[0] * g1; };
        g1p1.deriv = [g1](int a, const Momentum3&) {
            return a == 0 ? g1 : Matrix::zero(4);
        };
    }
    const OperatorField spin3 = constant_field("spin3_half", 0.5 * alg.spin.Sigma[2]);
    const auto ctl = sweep_rows<5>(cfg, momenta, [&](const Momentum3& p) {
        const double h = cfg.fd_step * energy(p);
        std::array<double, 5> r{};
        r[0] = translation_residual(alg, g0, p) / energy(p);
        r[1] = rotation_residual_max(alg, g1p1, p);
        r[2] = rotation_residual_fd_max(alg, g1p1, p, h);
        r[3] = boost_residual_max(alg, spin3, p);
        r[4] = boost_residual_fd_max(alg, spin3, p, h);
        return r;
    });
    rep.add("control_g0_translation", "Eq. (5)", col_min(ctl, 0), 0.1, false);
    rep.add("control_g1p1_rotation", "Eq. (5)", col_min(ctl, 1), 0.1, false);
    rep.add("control_g1p1_rotation_fd", "Eq. (5)", col_min(ctl, 2), 0.1, false);
    rep.add("control_spin3_boost", "Eq. (5)", col_min(ctl, 3), 0.1, false);
    rep.add("control_spin3_boost_fd", "Eq. (5)", col_min(ctl, 4), 0.1, false);

    rep.annotate("translations",
                 "space translations act diagonally in momentum space, so time evolution is the "
                 "only nontrivial translation check");
    rep.annotate("window",
                 "momentum magnitudes held near unity so finite-difference steps stay well "
                 "conditioned");
    return rep;
}

SuiteReport run_irreps(const RunConfig& cfg) {
    const Algebra& alg = Algebra::standard();
    SuiteReport rep;
    rep.suite = "irreps";
    const auto momenta = draw(cfg, "irreps", cfg.samples, false);

    const auto rows = sweep_rows<4>(cfg, momenta, [&](const Momentum3& p) {
        std::array<double, 4> r{};
        const auto lines = decompose(alg, p);
        r[0] = std::abs(static_cast<double>(lines.size()) - 4.0);
        std::vector<std::pair<int, int>> labels;
        for (const auto& line : lines) labels.emplace_back(line.eps, line.lam);
        std::vector<std::pair<int, int>> want(kMinimalLabels.begin(), kMinimalLabels.end());
        std::sort(labels.begin(), labels.end());
        std::sort(want.begin(), want.end());
        r[1] = labels == want ? 0.0 : 1.0;
        const Matrix es = energy_sign(alg, p);
        const Matrix hel = helicity_matrix(alg, p);
        for (const auto& line : lines) {
            const Vec& v = line.vector;
            r[2] = std::max(r[2], (es * v - v * cplx(line.eps, 0.0)).norm());
            r[2] = std::max(r[2], (hel * v - v * cplx(line.lam, 0.0)).norm());
            r[3] = std::max(r[3], distance(outer(v, v), minimal_projector(alg, line.eps, line.lam, p)));
        }
        return r;
    });
    rep.add("line_count", "Eq. (8)", col_max(rows, 0), 0.0);
    rep.add("line_labels", "Eq. (8)", col_max(rows, 1), 0.0);
    rep.add("line_eigen", "Eq. (8)", col_max(rows, 2), cfg.tol_exact);
    rep.add("line_projectors", "Eq. (16)", col_max(rows, 3), cfg.tol_exact);

    // Annihilated joint labels of each constraint half, ascending.
    const auto kernel_pattern = [](int family, int sign) {
        std::vector<std::pair<int, int>> out;
        for (const auto& [eps, lam] : kMinimalLabels) {
            const bool killed = family == 1   ? lam * eps == -sign
                                : family == 2 ? lam == -sign
                                              : eps == -sign;
            if (killed) out.emplace_back(eps, lam);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    for (int family = 1; family <= 3; ++family) {
        for (int sign : {+1, -1}) {
            const auto want = kernel_pattern(family, sign);
            const auto pat = sweep_rows<1>(cfg, momenta, [&](const Momentum3& p) {
                const auto cls = classify_constraint(alg, projector(alg, family, sign, p), p);
                return std::array<double, 1>{cls.kernel_labels == want ? 0.0 : 1.0};
            });
            rep.add("pattern_" + family_name(family, sign), family_anchor(family),
                    col_max(pat, 0), 0.0);
        }
    }

    const auto hel_rows = sweep_rows<3>(cfg, momenta, [&](const Momentum3& p) {
        const Matrix hel = helicity_matrix(alg, p);
        const Matrix combo = spin_combination(alg, p, true);
        std::array<double, 3> r{};
        r[0] = distance(cplx(-1.0, 0.0) * combo, hel);
        r[1] = distance(combo, hel);
        r[2] = distance(spin_combination(alg, p, false), hel);
        return r;
    });
    rep.add("helicity_identity", "Eq. (9)", col_max(hel_rows, 0), cfg.tol_exact);
    rep.add("control_helicity_sign", "Eq. (9)", col_min(hel_rows, 1), 0.1, false);
    rep.add("control_helicity_slot", "Eq. (9)", col_min(hel_rows, 2), 0.1, false);
    rep.annotate("helicity",
                 "the rotation-generator combination reproduces the helicity grading after fixing "
                 "the overall sign and using the rotation component for the middle axis; both "
                 "unfixed variants are kept as failing controls");
    return rep;
}

SuiteReport run_cpt(const RunConfig& cfg) {
    const Algebra& alg = Algebra::standard();
    SuiteReport rep;
    rep.suite = "cpt";
    const int n = std::min(cfg.samples, 50);
    const auto momenta = draw(cfg, "cpt", n, false);
    const StandardOps ops = standard_ops(alg);
    const OperatorField eps_f = energy_sign_field(alg);
    const OperatorField lam_f = helicity_field(alg);

    struct GradingCheck {
        std::string name;
        const SymmetryOp* op;
        const OperatorField* field;
        BracketSign sign;
        bool expect_pass;
    };
    const std::vector<GradingCheck> gradings = {
        {"parity_helicity_anticommute", &ops.parity, &lam_f, BracketSign::anticommutator, true},
        {"parity_energy_sign_commute", &ops.parity, &eps_f, BracketSign::commutator, true},
        {"timerev_helicity_commute", &ops.time_reversal_conj, &lam_f, BracketSign::commutator, true},
        {"timerev_energy_sign_commute", &ops.time_reversal_conj, &eps_f, BracketSign::commutator, true},
        {"charge_helicity_commute", &ops.charge, &lam_f, BracketSign::commutator, true},
        {"charge_energy_sign_anticommute", &ops.charge, &eps_f, BracketSign::anticommutator, true},
        {"control_parity_helicity_commute", &ops.parity, &lam_f, BracketSign::commutator, false},
        {"control_parity_energy_sign_anticommute", &ops.parity, &eps_f,
         BracketSign::anticommutator, false},
        {"control_charge_energy_sign_commute", &ops.charge, &eps_f, BracketSign::commutator, false},
    };
    for (const auto& gc : gradings) {
        const auto rows = sweep_rows<1>(cfg, momenta, [&](const Momentum3& p) {
            return std::array<double, 1>{field_bracket_residual(*gc.op, *gc.field, gc.sign, p)};
        });
        rep.add(gc.name, "Eq. (13)", gc.expect_pass ? col_max(rows, 0) : col_min(rows, 0),
                gc.expect_pass ? cfg.tol_exact : 0.1, gc.expect_pass);
    }

    const Matrix i4 = Matrix::identity(4);
    rep.add("parity_squared", "plumbing",
            distance(compose(ops.parity, ops.parity, "PP").matrix, i4), cfg.tol_exact);
    rep.add("timerev_squared_kramers", "plumbing",
            distance(compose(ops.time_reversal_conj, ops.time_reversal_conj, "TT").matrix,
                     cplx(-1.0, 0.0) * i4),
            cfg.tol_exact);
    rep.add("charge_squared", "plumbing",
            distance(compose(ops.charge, ops.charge, "CC").matrix, i4), cfg.tol_exact);
    const SymmetryOp cpt =
        compose(compose(ops.charge, ops.parity, "CP"), ops.time_reversal_conj, "CPT");
    rep.add("cpt_matrix", "plumbing", distance(cpt.matrix, cplx(-1.0, 0.0) * alg.i_gamma4),
            cfg.tol_exact);
    rep.add("cpt_linear", "plumbing", cpt.conjugates ? 1.0 : 0.0, 0.0);

    struct Intertwine {
        std::string name;
        const SymmetryOp* op;
        int family;
        int out_sign_factor;  // out sign = factor * in sign
        std::string anchor;
        bool expect_pass;
    };
    const std::vector<Intertwine> twines = {
        {"parity_family1_swap", &ops.parity, 1, -1, "Eq. (14)", true},
        {"parity_family2_swap", &ops.parity, 2, -1, "Eq. (14)", true},
        {"parity_family3_fix", &ops.parity, 3, +1, "Eq. (14)", true},
        {"timerev_family1_fix", &ops.time_reversal_conj, 1, +1, "Eq. (14)", true},
        {"timerev_family2_fix", &ops.time_reversal_conj, 2, +1, "Eq. (14)", true},
        {"timerev_family3_fix", &ops.time_reversal_conj, 3, +1, "Eq. (14)", true},
        {"charge_family1_swap", &ops.charge, 1, -1, "Eq. (15)", true},
        {"charge_family2_fix", &ops.charge, 2, +1, "Eq. (15)", true},
        {"charge_family3_swap", &ops.charge, 3, -1, "Eq. (15)", true},
        {"control_charge_family3_fix", &ops.charge, 3, +1, "Eq. (15)", false},
    };
    for (const auto& tw : twines) {
        const auto rows = sweep_rows<1>(cfg, momenta, [&](const Momentum3& p) {
            double worst_hi = 0.0;
            double worst_lo = 1e300;
            for (int s : {+1, -1}) {
                const OperatorField in = projector_field(alg, tw.family, s);
                const OperatorField out = projector_field(alg, tw.family, tw.out_sign_factor * s);
                const double r = relation_residual(*tw.op, in, out, p);
                worst_hi = std::max(worst_hi, r);
                worst_lo = std::min(worst_lo, r);
            }
            return std::array<double, 1>{tw.expect_pass ? worst_hi : worst_lo};
        });
        rep.add(tw.name, tw.anchor, tw.expect_pass ? col_max(rows, 0) : col_min(rows, 0),
                tw.expect_pass ? cfg.tol_exact : 0.1, tw.expect_pass);
    }

    // Invariance table over a shared sweep; entries are compared against the
    // expected pattern check by check.
    const int nc = std::min(cfg.samples, 24);
    const auto class_momenta = draw(cfg, "cpt-classification", nc, false);
    const auto table_ops = classification_ops(alg);
    Table table;
    table.name = "classification";
    table.columns.push_back("system");
    for (const auto& op : table_ops) table.columns.push_back(op.name);
    double checked_defect = 0.0;
    for (const auto& sys : standard_systems(alg)) {
        const SystemVerdict verdict = classify_system(alg, sys, table_ops, class_momenta);
        const auto& expected = kExpectedClassification.at(sys.name);
        std::vector<std::string> row{sys.name};
        for (std::size_t k = 0; k < verdict.verdicts.size(); ++k) {
            const OpVerdict& v = verdict.verdicts[k];
            row.push_back(v.invariant ? "yes" : "no");
            rep.add("class_" + sys.name + "_" + v.op, classification_anchor(sys.name),
                    v.invariant == expected[k] ? 0.0 : 1.0, 0.0);
            checked_defect += std::abs(static_cast<double>(v.checked) - static_cast<double>(nc));
        }
        table.rows.push_back(row);
    }
    rep.add("class_momenta_covered", "plumbing", checked_defect, 0.0);
    rep.tables.push_back(table);
    return rep;
}

SuiteReport run_modes(const RunConfig& cfg) {
    const Algebra& alg = Algebra::standard();
    SuiteReport rep;
    rep.suite = "modes";
    const int n = std::min(cfg.samples, 50);
    const auto momenta = draw(cfg, "modes", n, false);

    for (int family = 1; family <= 3; ++family) {
        for (int sign : {+1, -1}) {
            for (double kappa : {0.0, 1.0, -2.5}) {
                const auto rows = sweep_rows<4>(cfg, momenta, [&](const Momentum3& p) {
                    const ModeResiduals r = check_mode(alg, family, sign, kappa, p);
                    return std::array<double, 4>{r.preservation, r.restriction, r.hermiticity,
                                                 r.spectrum};
                });
                std::ostringstream tag;
                tag << "mode_" << family << sign_str(sign) << "_k=" << kappa << "_";
                rep.add(tag.str() + "preservation", "Eq. (7)", col_max(rows, 0), cfg.tol_exact);
                rep.add(tag.str() + "restriction", "Eq. (7)", col_max(rows, 1), cfg.tol_exact);
                rep.add(tag.str() + "hermiticity", "Eq. (7)", col_max(rows, 2), cfg.tol_exact);
                rep.add(tag.str() + "spectrum", "Eq. (7)", col_max(rows, 3), cfg.tol_exact);
            }
        }
    }

    const auto weyl_momenta = draw(cfg, "modes-weyl", cfg.samples, false);
    for (int chi : {+1, -1}) {
        const WeylReducer red(alg, chi);
        const auto rows = sweep_rows<2>(cfg, weyl_momenta, [&](const Momentum3& p) {
            std::array<double, 2> r{};
            r[0] = red.reduction_residual(p);
            const Matrix u = red.intertwiner();
            const Matrix flipped = cplx(-1.0, 0.0) * red.reduced_target(p);
            r[1] = distance(u.adjoint() * red.restriction(p) * u, flipped) / energy(p);
            return r;
        });
        const std::string tag = "weyl_" + sign_str(chi);
        rep.add(tag + "_reduction", "Eq. (7)", col_max(rows, 0), cfg.tol_exact);
        rep.add(tag + "_unitary", "plumbing",
                distance(red.intertwiner().adjoint() * red.intertwiner(), Matrix::identity(2)),
                cfg.tol_exact);
        rep.add("control_" + tag + "_flipped_target", "Eq. (7)", col_min(rows, 1), 0.1, false);
    }
    rep.annotate("weyl",
                 "each chirality half reduces through one momentum-independent unitary; the "
                 "reduced generator carries the opposite sign of the chirality");
    return rep;
}

SuiteReport run_lattice(const RunConfig& cfg) {
    const Algebra& alg = Algebra::standard();
    SuiteReport rep;
    rep.suite = "lattice";
    const int n = std::min(cfg.samples, 50);
    const auto momenta = draw(cfg, "lattice", n, true);

    for (const auto& [eps, lam] : kMinimalLabels) {
        const auto rows = sweep_rows<4>(cfg, momenta, [&](const Momentum3& p) {
            const double e = energy(p);
            const Matrix q = minimal_projector(alg, eps, lam, p);
            std::array<double, 4> r{};
            // Constrained system: expected dimensions 1 at the matching
            // frequency and 2 at the opposite one.
            for (int s : {+1, -1}) {
                const double p0 = s * e;
                const Subspace base = reduced_three_component_space(alg, q, 0.0, p0, p);
                const int want = s == eps ? 1 : 2;
                r[0] += std::abs(static_cast<double>(base.dim() - want));
                for (double kb : {1.0, 10.0}) {
                    const Subspace other = reduced_three_component_space(alg, q, kb, p0, p);
                    if (!subspace_equal(base, other)) r[1] += 1.0;
                }
            }
            // Saturated system: dimension 1 at the matching frequency only.
            const std::array<double, 3> kb0{0.0, 0.0, 0.0};
            const std::array<double, 3> kb1{1.0, 2.0, 3.0};
            const std::array<double, 3> kb2{10.0, -5.0, 0.5};
            for (int s : {+1, -1}) {
                const double p0 = s * e;
                const Subspace base =
                    reduced_one_component_space(alg, q, off_range_perturbation(alg, eps, lam, kb0, p), p0, p);
                const int want = s == eps ? 1 : 0;
                r[2] += std::abs(static_cast<double>(base.dim() - want));
                for (const auto& kb : {kb1, kb2}) {
                    const Subspace other = reduced_one_component_space(
                        alg, q, off_range_perturbation(alg, eps, lam, kb, p), p0, p);
                    if (other.dim() != base.dim()) r[3] += 1.0;
                    if (base.dim() > 0 && !subspace_equal(base, other)) r[3] += 1.0;
                }
            }
            return r;
        });
        const std::string tag = minimal_name(eps, lam);
        rep.add("reduced3_" + tag + "_dims", "Eq. (18)", col_max(rows, 0), 0.0);
        rep.add("reduced3_" + tag + "_coupling_free", "Eq. (18)", col_max(rows, 1), 0.0);
        rep.add("reduced1_" + tag + "_dims", "Eq. (19)", col_max(rows, 2), 0.0);
        rep.add("reduced1_" + tag + "_coupling_free", "Eq. (19)", col_max(rows, 3), 0.0);
    }

    // A constraint that breaks the joint grading does not reproduce the
    // 3 + 1 content counts.
    {
        Matrix qbad = Matrix::zero(4);
        qbad(0, 0) = 1.0;
        const auto rows = sweep_rows<1>(cfg, momenta, [&](const Momentum3& p) {
            const double e = energy(p);
            int sum3 = 0;
            int sum1 = 0;
            for (int s : {+1, -1}) {
                sum3 += reduced_three_component_space(alg, qbad, 0.0, s * e, p).dim();
                sum1 += reduced_one_component_space(alg, qbad, Matrix::zero(4), s * e, p).dim();
            }
            return std::array<double, 1>{std::abs(sum3 - 3.0) + std::abs(sum1 - 1.0)};
        });
        rep.add("control_offgrading_content", "Eq. (18)", col_min(rows, 0), 0.1, false);
    }

    const auto census = enumerate_subsidiary_conditions();
    std::array<int, 5> by_rank{};
    for (const auto& entry : census) by_rank[static_cast<std::size_t>(entry.rank)] += 1;
    rep.add("census_size", "Eqs. (2)-(4), (16), (17)",
            std::abs(static_cast<double>(census.size()) - 14.0), 0.0);
    rep.add("census_rank_counts", "Eqs. (2)-(4), (16), (17)",
            std::abs(by_rank[3] - 4.0) + std::abs(by_rank[2] - 6.0) + std::abs(by_rank[1] - 4.0),
            0.0);

    const auto crows = sweep_rows<4>(cfg, momenta, [&](const Momentum3& p) {
        std::array<double, 4> r{};
        std::vector<int> family_hits(6, 0);
        for (const auto& entry : census) {
            const Matrix q = census_projector(alg, entry, p);
            r[3] = std::max(r[3], distance(q * q, q));
            r[3] = std::max(r[3], distance(q, q.adjoint()));
            r[3] = std::max(r[3], std::abs(q.trace().real() - entry.rank));
            if (entry.rank == 2) {
                int idx = 0;
                for (int family = 1; family <= 3; ++family)
                    for (int sign : {+1, -1}) {
                        if (distance(q, projector(alg, family, sign, p)) < 1e-8)
                            family_hits[static_cast<std::size_t>(idx)] += 1;
                        ++idx;
                    }
            } else if (entry.rank == 3) {
                // One label is annihilated: the retained space is the
                // complement of a single minimal projector.
                std::vector<std::pair<int, int>> killed(kMinimalLabels.begin(), kMinimalLabels.end());
                for (const auto& lab : entry.labels)
                    killed.erase(std::remove(killed.begin(), killed.end(), lab), killed.end());
                r[1] = std::max(r[1], distance(q, Matrix::identity(4) -
                                                      minimal_projector(alg, killed.front().first,
                                                                        killed.front().second, p)));
            } else if (entry.rank == 1) {
                const auto& [eps, lam] = entry.labels.front();
                r[2] = std::max(r[2], distance(q, minimal_projector(alg, eps, lam, p)));
            }
        }
        for (int hits : family_hits)
            r[0] += std::abs(static_cast<double>(hits) - 1.0);
        return r;
    });
    rep.add("census_rank2_families", "Eqs. (2)-(4)", col_max(crows, 0), 0.0);
    rep.add("census_rank3_complements", "Eq. (16)", col_max(crows, 1), cfg.tol_exact);
    rep.add("census_rank1_minimal", "Eq. (17)", col_max(crows, 2), cfg.tol_exact);
    rep.add("census_projector_laws", "plumbing", col_max(crows, 3), cfg.tol_exact);

    std::vector<std::array<double, 1>> inv(census.size() * momenta.size());
    for_each_index(static_cast<int>(inv.size()), cfg.exec, [&](int k) {
        const std::size_t e = static_cast<std::size_t>(k) / momenta.size();
        const Momentum3& p = momenta[static_cast<std::size_t>(k) % momenta.size()];
        const OperatorField f = census_field(alg, census[e]);
        const double v = std::max({translation_residual(alg, f, p) / energy(p),
                                   rotation_residual_max(alg, f, p), boost_residual_max(alg, f, p)});
        inv[static_cast<std::size_t>(k)] = {v};
    });
    rep.add("census_invariance", "Eq. (5)", col_max(inv, 0), cfg.tol_exact);

    Table table;
    table.name = "census";
    table.columns = {"surviving components", "systems", "reference"};
    table.rows.push_back({"3", std::to_string(by_rank[3]), "Eq. (16)"});
    table.rows.push_back({"2", std::to_string(by_rank[2]), "Eqs. (2)-(4)"});
    table.rows.push_back({"1", std::to_string(by_rank[1]), "Eq. (17)"});
    table.rows.push_back({"constrained total", std::to_string(census.size()), ""});
    table.rows.push_back({"with the unconstrained system", std::to_string(census.size() + 1), ""});
    rep.tables.push_back(table);
    rep.annotate("window",
                 "momentum magnitudes held near unity: a coupling far above the energy scale "
                 "squares into an ill conditioned positive form and blurs the kernel directions");
    rep.annotate("count", "fourteen constrained systems plus the unconstrained evolution");
    return rep;
}

SuiteReport run_so4(const RunConfig& cfg) {
    const Algebra& alg = Algebra::standard();
    SuiteReport rep;
    rep.suite = "so4";
    const auto momenta = draw(cfg, "so4", cfg.samples, false);

    const InternalGenerators local = internal_local(alg);
    rep.add("local_closure", "Eq. (20)", closure_residual(local), cfg.tol_exact);
    const Matrix i4 = Matrix::identity(4);
    rep.add("local_casimirs", "Eq. (20)",
            std::max(distance(triple_casimir(local.s), 0.375 * (i4 + alg.g.gamma[0])),
                     distance(triple_casimir(local.tau), 0.375 * (i4 - alg.g.gamma[0]))),
            cfg.tol_exact);

    const auto rows = sweep_rows<8>(cfg, momenta, [&](const Momentum3& p) {
        const double e = energy(p);
        const Matrix h = hamiltonian(alg, p);
        std::array<double, 8> r{};
        const Matrix l1loc = direction_component(local.s, p);
        const Matrix l2loc = direction_component(local.tau, p);
        r[0] = std::min(op_norm(bracket(h, l1loc, BracketSign::commutator)) / e,
                        op_norm(bracket(h, l2loc, BracketSign::commutator)) / e);

        const InternalGenerators rot = internal_rotated(alg, p);
        r[1] = closure_residual(rot);
        const Matrix l1 = direction_component(rot.s, p);
        const Matrix l2 = direction_component(rot.tau, p);
        r[2] = std::max(op_norm(bracket(h, l1, BracketSign::commutator)) / e,
                        op_norm(bracket(h, l2, BracketSign::commutator)) / e);
        r[3] = std::max(distance(triple_casimir(rot.s), 0.75 * projector(alg, 3, +1, p)),
                        distance(triple_casimir(rot.tau), 0.75 * projector(alg, 3, -1, p)));
        r[4] = std::max(distance(l1 * l1, 0.25 * projector(alg, 3, +1, p)),
                        distance(l2 * l2, 0.25 * projector(alg, 3, -1, p)));
        r[5] = distance(l1 + l2, cplx(-0.5, 0.0) * helicity_matrix(alg, p));
        r[6] = closure_residual(internal_mixed(alg, p));

        const auto lines = branch_lines(alg, p);
        const std::vector<std::array<double, 3>> want = {
            {-1.0, 0.0, -0.5}, {-1.0, 0.0, 0.5}, {1.0, -0.5, 0.0}, {1.0, 0.5, 0.0}};
        if (lines.size() != want.size()) {
            r[7] = 1.0;
        } else {
            for (std::size_t k = 0; k < want.size(); ++k) {
                r[7] += std::abs(lines[k].eps - want[k][0]) + std::abs(lines[k].m_s - want[k][1]) +
                        std::abs(lines[k].m_tau - want[k][2]);
            }
        }
        return r;
    });
    rep.add("control_local_conservation", "Eq. (20)", col_min(rows, 0), 0.1, false);
    rep.add("rotated_closure", "Eq. (20)", col_max(rows, 1), cfg.tol_exact);
    rep.add("rotated_conservation", "Eq. (20)", col_max(rows, 2), cfg.tol_exact);
    rep.add("rotated_casimirs", "Eq. (21)", col_max(rows, 3), cfg.tol_exact);
    rep.add("rotated_squares", "Eq. (21)", col_max(rows, 4), cfg.tol_exact);
    rep.add("direction_sum", "Eq. (20)", col_max(rows, 5), cfg.tol_exact);
    rep.add("control_mixed_closure", "Eq. (20)", col_min(rows, 6), 0.1, false);
    rep.add("branching", "Eq. (21)", col_max(rows, 7), cfg.tol_exact);
    rep.annotate("frames",
                 "the momentum-independent triples close but do not commute with the evolution; "
                 "conjugating both halves into the flat-band frame restores conservation, while "
                 "conjugating only one half breaks the closure");
    return rep;
}

SuiteReport run_equivalence(const RunConfig& cfg) {
    const Algebra& alg = Algebra::standard();
    SuiteReport rep;
    rep.suite = "equivalence";
    const int n = std::min(cfg.samples, 100);
    const auto momenta = draw(cfg, "equivalence", n, true);

    const auto add_combo = [&](const std::string& tag, const std::string& space_anchor,
                               const std::string& nilpotent_anchor,
                               const std::string& similarity_anchor,
                               const std::vector<std::array<double, 9>>& rows) {
        rep.add(tag + "_nilpotent", nilpotent_anchor, col_max(rows, 0), cfg.tol_exact);
        rep.add(tag + "_anticommute", nilpotent_anchor, col_max(rows, 1), cfg.tol_exact);
        rep.add(tag + "_inverse", similarity_anchor, col_max(rows, 2), cfg.tol_exact);
        rep.add(tag + "_similarity", similarity_anchor, col_max(rows, 3), cfg.tol_exact);
        rep.add(tag + "_pseudo_hermitian", "Eq. (26)", col_max(rows, 4), cfg.tol_exact);
        rep.add(tag + "_positivity", "Eq. (26)", col_max(rows, 5), cfg.tol_exact);
        rep.add(tag + "_spectrum", space_anchor, col_max(rows, 6), cfg.tol_exact);
        rep.add(tag + "_transport", space_anchor, col_max(rows, 7), cfg.tol_exact);
        rep.add(tag + "_gap_margin", space_anchor, std::max(0.0, 0.01 - col_min(rows, 8)), 0.0);
    };

    for (int sign : {+1, -1}) {
        for (double kappa : {1.0, -3.0}) {
            const auto rows4 = sweep_rows<9>(cfg, momenta, [&](const Momentum3& p) {
                const EquivalenceResiduals r = check_equivalence_dim4(alg, sign, kappa, p);
                return std::array<double, 9>{r.nilpotent,       r.anticommute, r.inverse,
                                             r.similarity,      r.pseudo_hermitian,
                                             r.positivity,      r.spectrum,    r.solution_transport,
                                             r.spectral_gap};
            });
            std::ostringstream tag4;
            tag4 << "dim4_" << sign_str(sign) << "_k=" << kappa;
            add_combo(tag4.str(), "Eq. (22)", "Eq. (23)", "Eq. (25)", rows4);

            const auto rows2 = sweep_rows<9>(cfg, momenta, [&](const Momentum3& p) {
                const EquivalenceResiduals r = check_equivalence_dim2(sign, kappa, p);
                return std::array<double, 9>{r.nilpotent,       r.anticommute, r.inverse,
                                             r.similarity,      r.pseudo_hermitian,
                                             r.positivity,      r.spectrum,    r.solution_transport,
                                             r.spectral_gap};
            });
            std::ostringstream tag2;
            tag2 << "dim2_" << sign_str(sign) << "_k=" << kappa;
            add_combo(tag2.str(), "Eq. (28)", "Eq. (29)", "Eq. (28)", rows2);
        }
    }

    // Additions that fail the square-zero or anticommutation premise do not
    // reach an exact similarity.
    const auto ctl = sweep_rows<3>(cfg, momenta, [&](const Momentum3& p) {
        const double e = energy(p);
        const Matrix h = hamiltonian(alg, p);
        const auto make_pair = [&](const Matrix& lambda) {
            const Matrix x = cplx(0.5 / (e * e), 0.0) * (h * lambda);
            return NilpotentPair{lambda, Matrix::identity(4) - x, Matrix::identity(4) + x};
        };
        std::array<double, 3> r{};
        const EquivalenceResiduals bad_sq =
            check_equivalence(h, make_pair(alg.g.gamma[0] * projector(alg, 2, +1, p)), 2, e);
        r[0] = bad_sq.nilpotent;
        r[1] = bad_sq.inverse;
        const EquivalenceResiduals bad_anti = check_equivalence(h, make_pair(projector(alg, 3, +1, p)), 2, e);
        r[2] = bad_anti.anticommute;
        return r;
    });
    rep.add("control_square", "Eq. (23)", col_min(ctl, 0), 0.1, false);
    rep.add("control_inverse", "Eq. (25)", col_min(ctl, 1), 0.05, false);
    rep.add("control_anticommute", "Eq. (23)", col_min(ctl, 2), 1.0, false);

    // The deformed picture classifies exactly like the free one on a shared
    // momentum sweep.
    const int nc = std::min(cfg.samples, 12);
    const auto class_momenta = draw(cfg, "equivalence-classification", nc, true);
    const auto table_ops = classification_ops(alg);
    const auto systems = standard_systems(alg);
    for (const auto& setup : std::vector<std::pair<int, double>>{{+1, 1.0}, {+1, 5.0}, {-1, 1.0}}) {
        for (const auto& sys : systems) {
            const SystemVerdict plain = classify_system(alg, sys, table_ops, class_momenta);
            const SystemVerdict deformed = classify_deformed_system(alg, sys, table_ops, setup.first,
                                                                    setup.second, class_momenta);
            double mismatches = 0.0;
            for (std::size_t k = 0; k < plain.verdicts.size(); ++k) {
                if (plain.verdicts[k].invariant != deformed.verdicts[k].invariant) mismatches += 1.0;
            }
            std::ostringstream name;
            name << "deformed_" << sign_str(setup.first) << "_k=" << setup.second << "_" << sys.name;
            rep.add(name.str(), "Eq. (22)", mismatches, 0.0);
        }
    }
    rep.annotate("window",
                 "momentum magnitudes held near unity so the similarity stays well conditioned at "
                 "the sampled coupling strengths");
    return rep;
}

using SuiteFn = SuiteReport (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"clifford", run_clifford}, {"projectors", run_projectors}, {"poincare", run_poincare},
        {"irreps", run_irreps},     {"cpt", run_cpt},               {"modes", run_modes},
        {"lattice", run_lattice},   {"so4", run_so4},               {"equivalence", run_equivalence},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<std::string> resolve_suites(const RunConfig& cfg) {
    if (cfg.suites.empty()) return suite_names();
    for (const auto& name : cfg.suites) {
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
            std::string msg = "unknown suite '" + name + "'; valid suites:";
            for (const auto& valid : suite_names()) msg += " " + valid;
            throw ConfigError(msg);
        }
    }
    std::vector<std::string> out;
    for (const auto& name : suite_names()) {
        if (std::find(cfg.suites.begin(), cfg.suites.end(), name) != cfg.suites.end())
            out.push_back(name);
    }
    return out;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
    for (const auto& [key, fn] : registry()) {
        if (key == name) return fn(cfg);
    }
    throw ConfigError("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_suites(const RunConfig& cfg) {
    std::vector<SuiteReport> out;
    for (const auto& name : resolve_suites(cfg)) out.push_back(run_suite(name, cfg));
    return out;
}

}  // namespace zmdirac
