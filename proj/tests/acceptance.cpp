// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one [PASS]/[FAIL] line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "albert/diagonalize.hpp"
#include "albert/random.hpp"
#include "albert/split.hpp"
#include "support/oracles.hpp"

using namespace albert;

namespace {

struct Criterion {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Criterion> results;

void record(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, detail});
    std::printf("[%s] %s (%s)\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), f, a, b);
    return buf;
}

// (X0, X0) = -2 exactly and verdict obstructed, < 1 ms.
void split_obstruction_exact_values() {
    const auto t0 = std::chrono::steady_clock::now();
    const JordanElement x0 = counterexample_X0();
    const double inner = inner_product(x0, x0);
    const ObstructionVerdict v = diagonalizability_obstruction(x0);
    const double elapsed = ms_since(t0);
    const bool pass = inner == -2.0 && v.verdict == Verdict::obstructed && elapsed < 1.0;
    record("split-obstruction-exact-values", pass,
           fmt("inner=%g, obstructed, %.3f ms", inner, elapsed));
}

// 1000 seeded random compact elements: residual <= 1e-9 and relative drift
// of trace, (X,X), sigma, det <= 1e-8; < 5 s total. The same transcripts feed
// the spectral-oracle criterion.
void diagonalization_soundness_and_spectrum() {
    const auto t0 = std::chrono::steady_clock::now();
    RandomSource rs(20240901);
    double max_res = 0.0, max_drift = 0.0, max_spec = 0.0;
    bool ok = true;
    for (int t = 0; t < 1000 && ok; ++t) {
        const JordanElement x = random_jordan(rs, Algebra::compact);
        DiagonalizationTranscript tr;
        try {
            tr = diagonalize(x);
        } catch (const Error&) {
            ok = false;
            break;
        }
        max_res = std::max(max_res, tr.off_diag_residual);
        max_drift = std::max(
            {max_drift, tr.invariant_drift.trace / std::max(1.0, std::abs(trace(x))),
             tr.invariant_drift.inner / std::max(1.0, std::abs(inner_product(x, x))),
             tr.invariant_drift.sigma / std::max(1.0, std::abs(sigma(x))),
             tr.invariant_drift.det / std::max(1.0, std::abs(det(x)))});
        const std::array<double, 3> roots = oracle::spectrum(x);
        for (int i = 0; i < 3; ++i)
            max_spec = std::max(max_spec, std::abs(roots[i] - tr.diagonal[i]));
    }
    const double elapsed = ms_since(t0);
    record("diagonalization-soundness",
           ok && max_res <= 1e-9 && max_drift <= 1e-8 && elapsed < 5000.0,
           fmt("max residual %.2e, max relative drift %.2e", max_res, max_drift) +
               fmt(", %.0f ms", elapsed));
    record("spectral-oracle", ok && max_spec <= 1e-7,
           fmt("max |diagonal - cubic roots| = %.2e", max_spec));
}

// Each generator family preserves both products on 100 random pairs, <= 1e-9.
void f4_membership_suite() {
    RandomSource rs(77);
    const std::vector<std::pair<std::string, Generator>> families = {
        {"delta_a", DeltaA(random_unit_octonion(rs, Algebra::compact))},
        {"rot_o3", RotO3(random_orthogonal3(rs))},
        {"sp3", SpThree(random_sp3_matrix(rs))},
        {"g2", g2_map_to_e1(random_unit_imaginary(rs))},
    };
    double worst = 0.0;
    std::uint64_t seed = 7000;
    for (const auto& [name, g] : families) {
        const MembershipReport r = check_f4_membership(g, 100, seed++);
        worst = std::max({worst, r.jordan_dev, r.cross_dev});
    }
    record("f4-membership", worst <= 1e-9, fmt("max deviation %.2e over 4 families", worst));
}

// Octonion laws: 1e4 random samples within 1e-11, the 64 basis pairs exact,
// e4^2 = mu for both algebras.
void octonion_law_suite() {
    double basis_dev = 0.0;
    bool e4_ok = true;
    for (Algebra alg : {Algebra::compact, Algebra::split}) {
        const Octonion e4 = Octonion::basis(4, alg);
        e4_ok = e4_ok && (e4 * e4 == Octonion::real(mu(alg), alg));
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                const Octonion ei = Octonion::basis(i, alg);
                const Octonion ej = Octonion::basis(j, alg);
                basis_dev = std::max(
                    basis_dev, ((ei * ej).conj() - ej.conj() * ei.conj()).coeff_norm());
                basis_dev =
                    std::max(basis_dev, (ei * (ei * ej) - (ei * ei) * ej).coeff_norm());
            }
    }
    double random_dev = 0.0;
    for (Algebra alg : {Algebra::compact, Algebra::split}) {
        RandomSource rs(alg == Algebra::compact ? 501 : 502);
        for (int t = 0; t < 10000; ++t) {
            const Octonion x = random_octonion(rs, alg);
            const Octonion y = random_octonion(rs, alg);
            const Octonion z = random_octonion(rs, alg);
            random_dev =
                std::max(random_dev, (x * (x * y) - (x * x) * y).coeff_norm());
            random_dev =
                std::max(random_dev, ((y * x) * x - y * (x * x)).coeff_norm());
            random_dev = std::max(
                random_dev, ((x * y) * (z * x) - x * ((y * z) * x)).coeff_norm());
            random_dev = std::max(
                random_dev, ((x * y).conj() - y.conj() * x.conj()).coeff_norm());
            if (alg == Algebra::compact)
                random_dev = std::max(
                    random_dev, std::abs((x * y).norm2() - x.norm2() * y.norm2()));
        }
    }
    record("octonion-law-suite",
           basis_dev == 0.0 && e4_ok && random_dev <= 1e-11,
           fmt("basis pairs exact, random max deviation %.2e", random_dev));
}

// pair_cross matches to_pair(X x Y) on 1000 random compact pairs, <= 1e-10.
void pair_model_correspondence() {
    RandomSource rs(601);
    double dev = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const JordanElement x = random_jordan(rs, Algebra::compact);
        const JordanElement y = random_jordan(rs, Algebra::compact);
        const JordanElement via = from_pair(pair_cross(to_pair(x), to_pair(y)));
        dev = std::max(dev, frobenius_norm(via - freudenthal_cross(x, y)));
    }
    record("pair-model-correspondence", dev <= 1e-10, fmt("max deviation %.2e", dev));
}

// 500 random unit imaginaries: alpha(u) = e1 within 1e-9 and the 49-pair
// automorphism law within 1e-10.
void g2_transitivity() {
    RandomSource rs(701);
    double map_dev = 0.0, law_dev = 0.0;
    for (int t = 0; t < 500; ++t) {
        const Octonion u = random_unit_imaginary(rs);
        const Generator g = g2_map_to_e1(u);
        map_dev = std::max(
            map_dev, (g.get<GTwoAuto>().map(u) - Octonion::basis(1)).coeff_norm());
        law_dev = std::max(law_dev, validation_deviation(g));
    }
    record("g2-transitivity", map_dev <= 1e-9 && law_dev <= 1e-10,
           fmt("max image error %.2e, max law deviation %.2e", map_dev, law_dev));
}

// Pipeline succeeds on zero, E, diagonal elements and every off-diagonal
// support pattern; skipped steps return identity generators.
void degenerate_totality() {
    bool ok = true;
    std::string why = "zero, E, diagonals, all off-diagonal patterns";
    try {
        (void)diagonalize(JordanElement::zero());
        (void)diagonalize(unit_E());
        RandomSource rs(801);
        for (int t = 0; t < 20; ++t)
            (void)diagonalize(JordanElement::diagonal(
                {rs.symmetric(), rs.symmetric(), rs.symmetric()}));
        for (int mask = 0; mask < 8; ++mask) {
            JordanElement x = random_jordan(rs, Algebra::compact);
            for (int i = 0; i < 3; ++i)
                if (!(mask & (1 << i))) x.off[i] = Octonion::real(0.0);
            (void)diagonalize(x);
        }
        // skipped steps hand back identity generators
        const JordanElement d = JordanElement::diagonal({1, 2, 3});
        ok = ok && is_identity(step_make_x1_real(d).g);
        ok = ok && is_identity(step_clear_x1(d).g);
        ok = ok && is_identity(step_make_x2_real(d).g);
        ok = ok && is_identity(step_x3_to_complex(d).g);
        ok = ok && is_identity(step_unitary_diag(d).g);
    } catch (const Error& e) {
        ok = false;
        why = e.what();
    }
    record("degenerate-totality", ok, why);
}

} // namespace

int main() {
    split_obstruction_exact_values();
    diagonalization_soundness_and_spectrum();
    f4_membership_suite();
    octonion_law_suite();
    pair_model_correspondence();
    g2_transitivity();
    degenerate_totality();

    int failures = 0;
    for (const Criterion& c : results)
        if (!c.pass) ++failures;
    std::printf("%d/%zu criteria passed\n", int(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
