#pragma once

// Test-only oracles, kept independent of the implementation paths they check:
// a trigonometric cubic solver for spectra, and entrywise closed forms for the
// quadratic/cubic invariants that never touch the Freudenthal product code.

#include <algorithm>
#include <array>
#include <cmath>

#include "albert/jordan.hpp"

namespace oracle {

// Real roots of t^3 - a t^2 + b t - c (all real for Hermitian spectra),
// descending. Cardano/Viete trigonometric form.
inline std::array<double, 3> cubic_roots(double a, double b, double c) {
    const double p = b - a * a / 3.0;
    const double q = -2.0 * a * a * a / 27.0 + a * b / 3.0 - c;
    std::array<double, 3> s{};
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (std::abs(p) < 1e-14 && std::abs(q) < 1e-14) {
        s = {0.0, 0.0, 0.0};
    } else if (p >= 0.0 || disc < 0.0) {
        // numerically borderline triple/double roots land here; fall back to
        // one Newton root + quadratic deflation
        double t = a / 3.0;
        for (int it = 0; it < 200; ++it) {
            const double f = ((t - a) * t + b) * t - c;
            const double df = (3.0 * t - 2.0 * a) * t + b;
            if (std::abs(df) < 1e-300) break;
            const double step = f / df;
            t -= step;
            if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(t))) break;
        }
        // deflate: t^2 + (t0 - a) t + (t0^2 - a t0 + b)
        const double b1 = t - a;
        const double c1 = t * t - a * t + b;
        const double d = std::max(0.0, b1 * b1 - 4.0 * c1);
        const double r = std::sqrt(d);
        return [&] {
            std::array<double, 3> out{t, (-b1 + r) / 2.0, (-b1 - r) / 2.0};
            std::sort(out.begin(), out.end(), std::greater<>());
            return out;
        }();
    } else {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double t0 = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            s[k] = m * std::cos(t0 - 2.0 * M_PI * k / 3.0);
    }
    for (double& v : s) v += a / 3.0;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

// Entrywise closed forms (never call freudenthal_cross / jordan_product):
//   trace = xi1 + xi2 + xi3
//   sigma = xi1 xi2 + xi2 xi3 + xi3 xi1 - N(x1) - N(x2) - N(x3)
//   det   = xi1 xi2 xi3 - sum_i xi_i N(x_i) + 2 Re((x1 x2) x3)
inline double trace_closed(const albert::JordanElement& x) {
    return x.diag[0] + x.diag[1] + x.diag[2];
}

inline double sigma_closed(const albert::JordanElement& x) {
    return x.diag[0] * x.diag[1] + x.diag[1] * x.diag[2] + x.diag[2] * x.diag[0] -
           x.off[0].norm2() - x.off[1].norm2() - x.off[2].norm2();
}

inline double det_closed(const albert::JordanElement& x) {
    double d = x.diag[0] * x.diag[1] * x.diag[2];
    for (int i = 0; i < 3; ++i) d -= x.diag[i] * x.off[i].norm2();
    return d + 2.0 * ((x.off[0] * x.off[1]) * x.off[2]).re();
}

// Spectrum of a compact element from its closed-form invariants.
inline std::array<double, 3> spectrum(const albert::JordanElement& x) {
    return cubic_roots(trace_closed(x), sigma_closed(x), det_closed(x));
}

} // namespace oracle
