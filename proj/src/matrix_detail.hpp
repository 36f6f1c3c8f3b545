#pragma once

// Internal full-matrix scratch types shared by the Jordan product and the
// generator actions. Not part of the public API: JordanElement stores only
// its six independent entries, and expansion happens here.

#include <algorithm>
#include <array>
#include <string>

#include "albert/jordan.hpp"

namespace albert::detail {

using OctMat3 = std::array<std::array<Octonion, 3>, 3>;
using QuatMat3 = std::array<std::array<Quaternion, 3>, 3>;

inline OctMat3 expand(const JordanElement& x) {
    const Octonion& x1 = x.off[0];
    const Octonion& x2 = x.off[1];
    const Octonion& x3 = x.off[2];
    return {{{Octonion::real(x.diag[0], x.alg), x3, x2.conj()},
             {x3.conj(), Octonion::real(x.diag[1], x.alg), x1},
             {x2, x1.conj(), Octonion::real(x.diag[2], x.alg)}}};
}

inline OctMat3 mat_mul(const OctMat3& a, const OctMat3& b, Algebra alg) {
    OctMat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Octonion s = Octonion::real(0.0, alg);
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

// Assert Hermiticity of an expanded matrix and repack the six independent
// entries. tol is absolute.
inline JordanElement pack_hermitian(const OctMat3& m, Algebra alg, double tol) {
    double dev = 0.0;
    for (int i = 0; i < 3; ++i) {
        dev = std::max(dev, m[i][i].im().coeff_norm());
        for (int j = i + 1; j < 3; ++j)
            dev = std::max(dev, (m[i][j] - m[j][i].conj()).coeff_norm());
    }
    if (dev > tol)
        throw HermiticityViolation("symmetrized product deviates from Hermitian by " +
                                   std::to_string(dev));
    JordanElement out = JordanElement::zero(alg);
    out.diag = {m[0][0].re(), m[1][1].re(), m[2][2].re()};
    out.off = {m[1][2], m[2][0], m[0][1]};
    return out;
}

inline QuatMat3 expand_pair_m(const PairElement& p) {
    const Quaternion& m1 = p.m_off[0];
    const Quaternion& m2 = p.m_off[1];
    const Quaternion& m3 = p.m_off[2];
    return {{{Quaternion(p.m_diag[0], 0, 0, 0), m3, m2.conj()},
             {m3.conj(), Quaternion(p.m_diag[1], 0, 0, 0), m1},
             {m2, m1.conj(), Quaternion(p.m_diag[2], 0, 0, 0)}}};
}

inline QuatMat3 qmat_mul(const QuatMat3& a, const QuatMat3& b) {
    QuatMat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Quaternion s;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

inline double qtrace(const QuatMat3& m) {
    return m[0][0].re() + m[1][1].re() + m[2][2].re();
}

} // namespace albert::detail
