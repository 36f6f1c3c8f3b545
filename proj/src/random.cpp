#include "albert/random.hpp"

#include <cmath>

namespace albert {

Octonion random_octonion(RandomSource& rs, Algebra alg) {
    Octonion o = Octonion::real(0.0, alg);
    for (double& v : o.c) v = rs.symmetric();
    return o;
}

JordanElement random_jordan(RandomSource& rs, Algebra alg) {
    JordanElement x = JordanElement::zero(alg);
    for (double& d : x.diag) d = rs.symmetric();
    for (Octonion& o : x.off) o = random_octonion(rs, alg);
    return x;
}

Octonion random_unit_octonion(RandomSource& rs, Algebra alg) {
    for (;;) {
        const Octonion o = random_octonion(rs, alg);
        const double n = o.norm2();
        if (n > 0.1) return o / std::sqrt(n);
    }
}

Octonion random_unit_imaginary(RandomSource& rs) {
    for (;;) {
        Octonion o = random_octonion(rs, Algebra::compact);
        o.c[0] = 0.0;
        const double n = o.norm2();
        if (n > 0.01) return o / std::sqrt(n);
    }
}

std::array<double, 9> random_orthogonal3(RandomSource& rs) {
    for (;;) {
        std::array<std::array<double, 3>, 3> col;
        for (auto& v : col)
            for (double& x : v) x = rs.symmetric();
        // Gram-Schmidt on columns.
        bool ok = true;
        for (int j = 0; j < 3 && ok; ++j) {
            for (int k = 0; k < j; ++k) {
                double d = 0.0;
                for (int i = 0; i < 3; ++i) d += col[k][i] * col[j][i];
                for (int i = 0; i < 3; ++i) col[j][i] -= d * col[k][i];
            }
            double n = 0.0;
            for (int i = 0; i < 3; ++i) n += col[j][i] * col[j][i];
            if (n < 1e-6) {
                ok = false;
                break;
            }
            n = std::sqrt(n);
            for (int i = 0; i < 3; ++i) col[j][i] /= n;
        }
        if (!ok) continue;
        std::array<double, 9> t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t[3 * i + j] = col[j][i];
        return t;
    }
}

std::array<Quaternion, 9> random_sp3_matrix(RandomSource& rs) {
    for (;;) {
        std::array<std::array<Quaternion, 3>, 3> col;
        for (auto& v : col)
            for (Quaternion& q : v)
                q = {rs.symmetric(), rs.symmetric(), rs.symmetric(), rs.symmetric()};
        // Modified Gram-Schmidt on columns with <u,v> = sum conj(u_i) v_i.
        bool ok = true;
        for (int j = 0; j < 3 && ok; ++j) {
            for (int k = 0; k < j; ++k) {
                Quaternion d;
                for (int i = 0; i < 3; ++i) d += col[k][i].conj() * col[j][i];
                for (int i = 0; i < 3; ++i) col[j][i] -= col[k][i] * d;
            }
            double n = 0.0;
            for (int i = 0; i < 3; ++i) n += col[j][i].norm2();
            if (n < 1e-6) {
                ok = false;
                break;
            }
            n = std::sqrt(n);
            for (int i = 0; i < 3; ++i) col[j][i] = col[j][i] / n;
        }
        if (!ok) continue;
        std::array<Quaternion, 9> a;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a[3 * i + j] = col[j][i];
        return a;
    }
}

} // namespace albert
