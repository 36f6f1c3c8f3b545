#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "albert/errors.hpp"
#include "albert/quaternion.hpp"

namespace albert {

enum class Algebra { compact, split };

// Doubling sign: e4^2 = mu.
constexpr double mu(Algebra alg) { return alg == Algebra::compact ? -1.0 : 1.0; }

constexpr const char* algebra_name(Algebra alg) {
    return alg == Algebra::compact ? "compact" : "split";
}

// Octonion over the basis {1, e1..e7}, built by Cayley-Dickson doubling of
// the quaternions: x = m + a*e4 with m, a quaternions and e4^2 = mu.
//
// Coefficients c[0..3] are the quaternion part m, c[4..7] the e4 part a,
// so c[5] is the coefficient of e5 = e1*e4 and so on.
//
// The product convention is
//   (m1 + a1 e4)(m2 + a2 e4) = (m1 m2 + mu conj(a2) a1) + (a2 m1 + a1 conj(m2)) e4.
struct Octonion {
    std::array<double, 8> c{};
    Algebra alg = Algebra::compact;

    constexpr Octonion() = default;
    constexpr explicit Octonion(const std::array<double, 8>& coeffs,
                                Algebra a = Algebra::compact)
        : c(coeffs), alg(a) {}
    constexpr Octonion(const Quaternion& m, const Quaternion& a, Algebra algebra)
        : c{m.w, m.x, m.y, m.z, a.w, a.x, a.y, a.z}, alg(algebra) {}

    static constexpr Octonion real(double r, Algebra a = Algebra::compact) {
        return Octonion({r, 0, 0, 0, 0, 0, 0, 0}, a);
    }
    // e_i, with e_0 = 1.
    static constexpr Octonion basis(std::size_t i, Algebra a = Algebra::compact) {
        if (i > 7) throw Error("octonion basis index out of range");
        Octonion o({0, 0, 0, 0, 0, 0, 0, 0}, a);
        o.c[i] = 1.0;
        return o;
    }

    constexpr Quaternion quat_part() const { return {c[0], c[1], c[2], c[3]}; }
    constexpr Quaternion e4_part() const { return {c[4], c[5], c[6], c[7]}; }

    constexpr double re() const { return c[0]; }
    constexpr Octonion im() const {
        Octonion o = *this;
        o.c[0] = 0.0;
        return o;
    }
    constexpr Octonion conj() const {
        return Octonion({c[0], -c[1], -c[2], -c[3], -c[4], -c[5], -c[6], -c[7]}, alg);
    }

    // Quadratic form N(x) = Re(x conj(x)) = |m|^2 - mu |a|^2.
    // Positive definite for the compact algebra, signature (4,4) for the split.
    constexpr double norm2() const {
        return quat_part().norm2() - mu(alg) * e4_part().norm2();
    }
    double norm() const { return std::sqrt(norm2()); }

    // Euclidean length of the coefficient vector; a genuine norm for both
    // algebras (norm2 degenerates on split null vectors).
    constexpr double coeff_norm2() const {
        double s = 0.0;
        for (double v : c) s += v * v;
        return s;
    }
    double coeff_norm() const { return std::sqrt(coeff_norm2()); }

    Octonion inverse(double tol = 1e-10) const {
        const double n = norm2();
        if (std::abs(n) < tol)
            throw NullElement("octonion inverse: quadratic form vanishes");
        return conj() / n;
    }

    constexpr bool operator==(const Octonion&) const = default;

    constexpr Octonion operator-() const {
        Octonion o = *this;
        for (double& v : o.c) v = -v;
        return o;
    }
    friend constexpr Octonion operator+(const Octonion& p, const Octonion& q) {
        if (p.alg != q.alg) throw AlgebraMismatch("octonion +: compact/split mix");
        Octonion o = p;
        for (std::size_t i = 0; i < 8; ++i) o.c[i] += q.c[i];
        return o;
    }
    friend constexpr Octonion operator-(const Octonion& p, const Octonion& q) {
        return p + (-q);
    }
    friend constexpr Octonion operator*(double s, const Octonion& q) {
        Octonion o = q;
        for (double& v : o.c) v *= s;
        return o;
    }
    friend constexpr Octonion operator*(const Octonion& q, double s) { return s * q; }
    friend constexpr Octonion operator/(const Octonion& q, double s) { return (1.0 / s) * q; }

    friend constexpr Octonion operator*(const Octonion& p, const Octonion& q) {
        if (p.alg != q.alg) throw AlgebraMismatch("octonion *: compact/split mix");
        const Quaternion m1 = p.quat_part(), a1 = p.e4_part();
        const Quaternion m2 = q.quat_part(), a2 = q.e4_part();
        const Quaternion m = m1 * m2 + mu(p.alg) * (a2.conj() * a1);
        const Quaternion a = a2 * m1 + a1 * m2.conj();
        return Octonion(m, a, p.alg);
    }

    Octonion& operator+=(const Octonion& q) { return *this = *this + q; }
    Octonion& operator-=(const Octonion& q) { return *this = *this - q; }
};

constexpr double oct_re(const Octonion& x) { return x.re(); }
constexpr Octonion oct_im(const Octonion& x) { return x.im(); }
constexpr Octonion oct_conj(const Octonion& x) { return x.conj(); }
constexpr double oct_norm2(const Octonion& x) { return x.norm2(); }

// Signed basis product: e_i * e_j = sign * e_index. Derived from the doubling
// formula; every basis product lands on a single signed basis element.
struct BasisProduct {
    std::size_t index;
    int sign;
};
BasisProduct basis_product(std::size_t i, std::size_t j, Algebra alg);

} // namespace albert
