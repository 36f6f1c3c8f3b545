#include "albert/diagonalize.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace albert {

namespace {

using Complex = std::complex<double>;
using CMat3 = std::array<std::array<Complex, 3>, 3>;

Generator identity_delta(Algebra alg) { return DeltaA(Octonion::real(1.0, alg)); }

Generator identity_rot() { return RotO3({1, 0, 0, 0, 1, 0, 0, 0, 1}); }

// Complex scalar of an octonion in span{1, e1}.
Complex complex_part(const Octonion& o) { return {o.c[0], o.c[1]}; }

CMat3 complex_matrix(const JordanElement& x) {
    const Complex x1 = complex_part(x.off[0]);
    const Complex x2 = complex_part(x.off[1]);
    const Complex x3 = complex_part(x.off[2]);
    return {{{Complex(x.diag[0]), x3, std::conj(x2)},
             {std::conj(x3), Complex(x.diag[1]), x1},
             {x2, std::conj(x1), Complex(x.diag[2])}}};
}

} // namespace

void Tolerances::validate() const {
    if (zero_tol <= 0 || residual_tol <= 0 || jacobi_tol <= 0 || max_sweeps < 1)
        throw Error("Tolerances: all thresholds must be positive and max_sweeps >= 1");
}

Tolerances Tolerances::scaled(double scale) const {
    Tolerances t = *this;
    if (scale > 1.0) {
        t.zero_tol *= scale;
        t.residual_tol *= scale;
        t.jacobi_tol *= scale;
    }
    return t;
}

StepResult step_make_x1_real(const JordanElement& x, const Tolerances& tol) {
    const Octonion& x1 = x.off[0];
    const double n = x1.norm();
    if (!(n > tol.zero_tol)) return {identity_delta(x.alg), x};
    const Generator g = DeltaA(x1 / n);
    return {g, albert::apply(g, x)};
}

StepResult step_clear_x1(const JordanElement& x, const Tolerances& tol) {
    const Octonion& x1 = x.off[0];
    if (x1.im().coeff_norm() > tol.zero_tol)
        throw X1NotReal("step_clear_x1: x1 has imaginary part " +
                        std::to_string(x1.im().coeff_norm()));
    const double r1 = x1.re();
    if (std::abs(r1) <= tol.zero_tol) return {identity_rot(), x};
    // Jacobi rotation of the real symmetric block [[xi2, r1], [r1, xi3]].
    const double theta = 0.5 * std::atan2(2.0 * r1, x.diag[1] - x.diag[2]);
    const double c = std::cos(theta), s = std::sin(theta);
    const Generator g = RotO3({1, 0, 0, 0, c, s, 0, -s, c});
    return {g, albert::apply(g, x)};
}

StepResult step_make_x2_real(const JordanElement& x, const Tolerances& tol) {
    const Octonion& x2 = x.off[1];
    const double n = x2.norm();
    if (!(n > tol.zero_tol)) return {identity_delta(x.alg), x};
    const Generator g = DeltaA(x2 / n);
    return {g, albert::apply(g, x)};
}

StepResult step_x3_to_complex(const JordanElement& x, const Tolerances& tol) {
    const Octonion im3 = x.off[2].im();
    // already complex once nothing lives outside span{1, e1}
    double outside = 0.0;
    for (int i = 2; i < 8; ++i) outside = std::max(outside, std::abs(im3.c[i]));
    if (im3.coeff_norm() <= tol.zero_tol || outside <= tol.zero_tol) {
        std::array<double, 49> l{};
        for (int i = 0; i < 7; ++i) l[7 * i + i] = 1.0;
        return {GTwoAuto(l), x};
    }
    const Generator g = g2_map_to_e1(im3 / im3.coeff_norm());
    return {g, albert::apply(g, x)};
}

StepResult step_unitary_diag(const JordanElement& x, const Tolerances& tol) {
    for (const Octonion& o : x.off) {
        double outside = 0.0;
        for (int i = 2; i < 8; ++i) outside = std::max(outside, std::abs(o.c[i]));
        if (outside > tol.zero_tol)
            throw NotComplex("step_unitary_diag: entry outside span{1, e1} by " +
                             std::to_string(outside));
    }

    CMat3 h = complex_matrix(x);
    CMat3 acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

    bool converged = false;
    for (int sweep = 0; sweep < tol.max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (auto [p, q] : pairs) off = std::max(off, std::abs(h[p][q]));
        if (off <= tol.jacobi_tol) {
            converged = true;
            break;
        }
        for (auto [pp, qq] : pairs) {
            const int p = pp, q = qq; // plain locals: lambdas may capture these
            const Complex hpq = h[p][q];
            if (std::abs(hpq) <= 1e-300) continue;
            const double phi = std::arg(hpq);
            const double theta =
                0.5 * std::atan2(2.0 * std::abs(hpq), h[p][p].real() - h[q][q].real());
            const double c = std::cos(theta), s = std::sin(theta);
            const Complex eip = std::polar(1.0, phi);
            // U differs from the identity only in rows/cols p and q:
            //   U[p][p] = c, U[p][q] = s e^{i phi}, U[q][p] = -s e^{-i phi}, U[q][q] = c.
            auto rotate_rows = [&](CMat3& m) {
                for (int j = 0; j < 3; ++j) {
                    const Complex mp = m[p][j], mq = m[q][j];
                    m[p][j] = c * mp + s * eip * mq;
                    m[q][j] = -s * std::conj(eip) * mp + c * mq;
                }
            };
            rotate_rows(h);
            rotate_rows(acc);
            for (int i = 0; i < 3; ++i) { // columns of h by U*
                const Complex mp = h[i][p], mq = h[i][q];
                h[i][p] = c * mp + s * std::conj(eip) * mq;
                h[i][q] = -s * eip * mp + c * mq;
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (auto [p, q] : pairs) off = std::max(off, std::abs(h[p][q]));
        if (off > tol.jacobi_tol)
            throw NoConvergence("step_unitary_diag: off-diagonal " + std::to_string(off) +
                                " after " + std::to_string(tol.max_sweeps) + " sweeps");
    }

    std::array<Quaternion, 9> aq;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            aq[3 * i + j] = {acc[i][j].real(), acc[i][j].imag(), 0.0, 0.0};
    const Generator g = SpThree(aq);
    return {g, albert::apply(g, x)};
}

DiagonalizationTranscript diagonalize(const JordanElement& input, const Tolerances& tol) {
    tol.validate();
    if (input.alg != Algebra::compact)
        throw SplitUnsupported(
            "diagonalize handles compact elements; use the split obstruction check");

    const Tolerances eff = tol.scaled(frobenius_norm(input));
    DiagonalizationTranscript tr;
    tr.input = input;

    JordanElement x = input;
    const auto run = [&](StepResult (*step)(const JordanElement&, const Tolerances&)) {
        StepResult r = step(x, eff);
        if (!is_identity(r.g)) tr.steps.push_back(r.g);
        x = std::move(r.x);
    };
    run(step_make_x1_real);
    run(step_clear_x1);
    run(step_make_x2_real);
    run(step_x3_to_complex);
    run(step_unitary_diag);

    // Final permutation: diagonal descending.
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return x.diag[i] > x.diag[j]; });
    if (order != std::array<int, 3>{0, 1, 2}) {
        std::array<double, 9> p{};
        for (int i = 0; i < 3; ++i) p[3 * i + order[i]] = 1.0;
        const Generator g = RotO3(p);
        tr.steps.push_back(g);
        x = albert::apply(g, x);
    }

    tr.diagonal = x.diag;
    tr.off_diag_residual = max_off_diagonal(x);
    if (tr.off_diag_residual > eff.residual_tol)
        throw NoConvergence("diagonalize: residual " + std::to_string(tr.off_diag_residual) +
                            " exceeds tolerance");
    tr.invariant_drift = {std::abs(trace(x) - trace(input)),
                          std::abs(inner_product(x, x) - inner_product(input, input)),
                          std::abs(sigma(x) - sigma(input)),
                          std::abs(det(x) - det(input))};
    return tr;
}

} // namespace albert
