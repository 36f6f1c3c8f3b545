#include "albert/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "matrix_detail.hpp"

namespace albert {

namespace {

using detail::OctMat3;
using detail::QuatMat3;

QuatMat3 qmat_lin(double fa, const QuatMat3& a, double fb, const QuatMat3& b) {
    QuatMat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[i][j] = fa * a[i][j] + fb * b[i][j];
    return c;
}

// Freudenthal product on quaternion-Hermitian matrices, as full 3x3 data.
QuatMat3 qcross(const QuatMat3& m, const QuatMat3& n) {
    const QuatMat3 mn = detail::qmat_mul(m, n);
    const QuatMat3 nm = detail::qmat_mul(n, m);
    const QuatMat3 sym = qmat_lin(0.5, mn, 0.5, nm);
    const double trm = detail::qtrace(m);
    const double trn = detail::qtrace(n);
    const double inner = detail::qtrace(sym);
    QuatMat3 out = qmat_lin(1.0, sym, -0.5 * trm, n);
    out = qmat_lin(1.0, out, -0.5 * trn, m);
    const double c = 0.5 * (trm * trn - inner);
    for (int i = 0; i < 3; ++i) out[i][i].w += c;
    return out;
}

void require_same_algebra(const JordanElement& x, const JordanElement& y,
                          const char* what) {
    if (x.alg != y.alg) throw AlgebraMismatch(std::string(what) + ": compact/split mix");
}

} // namespace

JordanElement JordanElement::operator-() const {
    JordanElement r = *this;
    for (double& d : r.diag) d = -d;
    for (Octonion& o : r.off) o = -o;
    return r;
}

JordanElement operator+(const JordanElement& x, const JordanElement& y) {
    require_same_algebra(x, y, "JordanElement +");
    JordanElement r = x;
    for (int i = 0; i < 3; ++i) {
        r.diag[i] += y.diag[i];
        r.off[i] += y.off[i];
    }
    return r;
}

JordanElement operator-(const JordanElement& x, const JordanElement& y) { return x + (-y); }

JordanElement operator*(double s, const JordanElement& x) {
    JordanElement r = x;
    for (double& d : r.diag) d *= s;
    for (Octonion& o : r.off) o = s * o;
    return r;
}

JordanElement unit_E(Algebra alg) { return JordanElement::diagonal({1.0, 1.0, 1.0}, alg); }

double trace(const JordanElement& x) { return x.diag[0] + x.diag[1] + x.diag[2]; }

double frobenius_norm(const JordanElement& x) {
    double s = 0.0;
    for (double d : x.diag) s += d * d;
    for (const Octonion& o : x.off) s += 2.0 * o.coeff_norm2();
    return std::sqrt(s);
}

double max_off_diagonal(const JordanElement& x) {
    double m = 0.0;
    for (const Octonion& o : x.off) m = std::max(m, o.coeff_norm());
    return m;
}

JordanElement jordan_product(const JordanElement& x, const JordanElement& y) {
    require_same_algebra(x, y, "jordan_product");
    const OctMat3 a = detail::expand(x);
    const OctMat3 b = detail::expand(y);
    const OctMat3 ab = detail::mat_mul(a, b, x.alg);
    const OctMat3 ba = detail::mat_mul(b, a, x.alg);
    OctMat3 sym;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sym[i][j] = 0.5 * (ab[i][j] + ba[i][j]);
    const double scale = std::max(1.0, frobenius_norm(x)) * std::max(1.0, frobenius_norm(y));
    return detail::pack_hermitian(sym, x.alg, 1e-11 * scale);
}

double inner_product(const JordanElement& x, const JordanElement& y) {
    require_same_algebra(x, y, "inner_product");
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
        s += x.diag[i] * y.diag[i];
        s += 2.0 * (x.off[i] * y.off[i].conj()).re();
    }
    return s;
}

JordanElement freudenthal_cross(const JordanElement& x, const JordanElement& y) {
    require_same_algebra(x, y, "freudenthal_cross");
    JordanElement r = 2.0 * jordan_product(x, y) - trace(x) * y - trace(y) * x;
    const double c = trace(x) * trace(y) - inner_product(x, y);
    r = r + c * unit_E(x.alg);
    return 0.5 * r;
}

double sigma(const JordanElement& x) { return trace(freudenthal_cross(x, x)); }

double det(const JordanElement& x) {
    return inner_product(freudenthal_cross(x, x), x) / 3.0;
}

PairElement to_pair(const JordanElement& x) {
    if (x.alg != Algebra::compact)
        throw SplitUnsupported("pair model is defined over the compact algebra only");
    PairElement p;
    p.m_diag = x.diag;
    for (int i = 0; i < 3; ++i) {
        p.m_off[i] = x.off[i].quat_part();
        p.a[i] = x.off[i].e4_part();
    }
    return p;
}

JordanElement from_pair(const PairElement& p) {
    JordanElement x = JordanElement::zero(Algebra::compact);
    x.diag = p.m_diag;
    for (int i = 0; i < 3; ++i)
        x.off[i] = Octonion(p.m_off[i], p.a[i], Algebra::compact);
    return x;
}

PairElement pair_cross(const PairElement& p, const PairElement& q) {
    const QuatMat3 m = detail::expand_pair_m(p);
    const QuatMat3 n = detail::expand_pair_m(q);
    QuatMat3 mpart = qcross(m, n);
    // - (a* b + b* a)/2, entrywise conj(a_i) b_j.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            mpart[i][j] -= 0.5 * (p.a[i].conj() * q.a[j] + q.a[i].conj() * p.a[j]);

    PairElement out;
    out.m_diag = {mpart[0][0].re(), mpart[1][1].re(), mpart[2][2].re()};
    out.m_off = {mpart[1][2], mpart[2][0], mpart[0][1]};
    // - (a N + b M)/2, row vector times matrix.
    for (int j = 0; j < 3; ++j) {
        Quaternion s;
        for (int i = 0; i < 3; ++i) s += p.a[i] * n[i][j] + q.a[i] * m[i][j];
        out.a[j] = -0.5 * s;
    }
    return out;
}

} // namespace albert
