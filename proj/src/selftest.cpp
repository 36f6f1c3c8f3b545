#include "albert/selftest.hpp"

#include <algorithm>
#include <cmath>

#include "albert/diagonalize.hpp"
#include "albert/json_io.hpp"
#include "albert/random.hpp"
#include "albert/split.hpp"

namespace albert {

namespace {

SuiteResult octonion_laws(std::uint64_t seed) {
    SuiteResult r{"octonion-laws", 0.0, 1e-11, false};
    auto bump = [&](double d) { r.max_deviation = std::max(r.max_deviation, d); };
    for (Algebra alg : {Algebra::compact, Algebra::split}) {
        // e4^2 = mu, exactly
        const Octonion e4 = Octonion::basis(4, alg);
        bump((e4 * e4 - Octonion::real(mu(alg), alg)).coeff_norm());
        // basis pairs: conj anti-automorphism and alternativity, exact
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                const Octonion ei = Octonion::basis(i, alg);
                const Octonion ej = Octonion::basis(j, alg);
                bump(((ei * ej).conj() - ej.conj() * ei.conj()).coeff_norm());
                bump((ei * (ei * ej) - (ei * ei) * ej).coeff_norm());
                bump(((ej * ei) * ei - ej * (ei * ei)).coeff_norm());
            }
        RandomSource rs(seed + (alg == Algebra::split));
        for (int t = 0; t < 10000; ++t) {
            const Octonion x = random_octonion(rs, alg);
            const Octonion y = random_octonion(rs, alg);
            const Octonion z = random_octonion(rs, alg);
            bump((x * (x * y) - (x * x) * y).coeff_norm());
            bump(((y * x) * x - y * (x * x)).coeff_norm());
            bump(((x * y) * (z * x) - x * ((y * z) * x)).coeff_norm());
            bump(((x * y).conj() - y.conj() * x.conj()).coeff_norm());
            if (alg == Algebra::compact)
                bump(std::abs((x * y).norm2() - x.norm2() * y.norm2()));
        }
    }
    r.pass = r.max_deviation <= r.bound;
    return r;
}

SuiteResult jordan_identities(std::uint64_t seed) {
    SuiteResult r{"jordan-identities", 0.0, 1e-11, false};
    auto bump = [&](double d) { r.max_deviation = std::max(r.max_deviation, d); };
    for (Algebra alg : {Algebra::compact, Algebra::split}) {
        RandomSource rs(seed + 10 + (alg == Algebra::split));
        for (int t = 0; t < 1000; ++t) {
            const JordanElement x = random_jordan(rs, alg);
            const JordanElement y = random_jordan(rs, alg);
            // closed-form inner product against tr(X o Y)
            bump(std::abs(inner_product(x, y) - trace(jordan_product(x, y))));
            // symmetry
            bump(frobenius_norm(jordan_product(x, y) - jordan_product(y, x)));
            bump(frobenius_norm(freudenthal_cross(x, y) - freudenthal_cross(y, x)));
            bump(std::abs(inner_product(x, y) - inner_product(y, x)));
        }
    }
    r.pass = r.max_deviation <= r.bound;
    return r;
}

SuiteResult pair_correspondence(std::uint64_t seed) {
    SuiteResult r{"pair-correspondence", 0.0, 1e-10, false};
    RandomSource rs(seed + 20);
    for (int t = 0; t < 1000; ++t) {
        const JordanElement x = random_jordan(rs, Algebra::compact);
        const JordanElement y = random_jordan(rs, Algebra::compact);
        const JordanElement via_pair =
            from_pair(pair_cross(to_pair(x), to_pair(y)));
        r.max_deviation = std::max(
            r.max_deviation, frobenius_norm(via_pair - freudenthal_cross(x, y)));
    }
    r.pass = r.max_deviation <= r.bound;
    return r;
}

SuiteResult f4_membership(std::uint64_t seed) {
    SuiteResult r{"f4-membership", 0.0, 1e-9, false};
    RandomSource rs(seed + 30);
    auto bump = [&](const MembershipReport& m) {
        r.max_deviation = std::max({r.max_deviation, m.jordan_dev, m.cross_dev});
    };
    bump(check_f4_membership(DeltaA(random_unit_octonion(rs, Algebra::compact)), 100,
                             seed + 31));
    bump(check_f4_membership(RotO3(random_orthogonal3(rs)), 100, seed + 32));
    bump(check_f4_membership(SpThree(random_sp3_matrix(rs)), 100, seed + 33));
    bump(check_f4_membership(g2_map_to_e1(random_unit_imaginary(rs)), 100, seed + 34));
    r.pass = r.max_deviation <= r.bound;
    return r;
}

SuiteResult g2_transitivity(std::uint64_t seed) {
    SuiteResult r{"g2-transitivity", 0.0, 1e-9, false};
    RandomSource rs(seed + 40);
    for (int t = 0; t < 500; ++t) {
        const Octonion u = random_unit_imaginary(rs);
        const Generator g = g2_map_to_e1(u); // construction runs the 49-pair check
        const Octonion image = g.get<GTwoAuto>().map(u);
        r.max_deviation = std::max(
            r.max_deviation, (image - Octonion::basis(1)).coeff_norm());
    }
    r.pass = r.max_deviation <= r.bound;
    return r;
}

SuiteResult pipeline_soundness(std::uint64_t seed) {
    SuiteResult r{"pipeline-soundness", 0.0, 1e-8, false};
    RandomSource rs(seed + 50);
    for (int t = 0; t < 1000; ++t) {
        const JordanElement x = random_jordan(rs, Algebra::compact);
        const DiagonalizationTranscript tr = diagonalize(x);
        double dev = tr.off_diag_residual;
        // replay must land on the reported diagonal
        const JordanElement replay = apply_sequence(tr.steps, tr.input);
        for (int i = 0; i < 3; ++i)
            dev = std::max(dev, std::abs(replay.diag[i] - tr.diagonal[i]));
        dev = std::max({dev, tr.invariant_drift.trace, tr.invariant_drift.inner,
                        tr.invariant_drift.sigma, tr.invariant_drift.det});
        r.max_deviation = std::max(r.max_deviation, dev);
    }
    r.pass = r.max_deviation <= r.bound;
    return r;
}

SuiteResult split_invariance(std::uint64_t seed) {
    SuiteResult r{"split-invariance", 0.0, 1e-10, false};
    auto bump = [&](double d) { r.max_deviation = std::max(r.max_deviation, d); };
    // exact counterexample value
    const JordanElement x0 = counterexample_X0();
    bump(std::abs(inner_product(x0, x0) - (-2.0)));
    if (diagonalizability_obstruction(x0).verdict != Verdict::obstructed) bump(1.0);
    RandomSource rs(seed + 60);
    for (int t = 0; t < 500; ++t) {
        const JordanElement x = random_jordan(rs, Algebra::split);
        const JordanElement y = random_jordan(rs, Algebra::split);
        const Generator da = DeltaA(random_unit_octonion(rs, Algebra::split));
        const Generator rot = RotO3(random_orthogonal3(rs));
        bump(std::abs(inner_product(albert::apply(da, x), albert::apply(da, y)) - inner_product(x, y)));
        bump(std::abs(inner_product(albert::apply(rot, x), albert::apply(rot, y)) - inner_product(x, y)));
        // no false positive on diagonal split elements
        JordanElement d = JordanElement::diagonal(
            {rs.symmetric(), rs.symmetric(), rs.symmetric()}, Algebra::split);
        if (diagonalizability_obstruction(d).verdict != Verdict::inconclusive) bump(1.0);
    }
    r.pass = r.max_deviation <= r.bound;
    return r;
}

} // namespace

SelftestReport run_selftest(std::uint64_t seed) {
    SelftestReport report;
    report.suites = {octonion_laws(seed),     jordan_identities(seed),
                     pair_correspondence(seed), f4_membership(seed),
                     g2_transitivity(seed),   pipeline_soundness(seed),
                     split_invariance(seed)};
    report.pass = std::all_of(report.suites.begin(), report.suites.end(),
                              [](const SuiteResult& s) { return s.pass; });
    return report;
}

} // namespace albert
