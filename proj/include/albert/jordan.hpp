#pragma once

#include <array>

#include "albert/octonion.hpp"

namespace albert {

// Hermitian 3x3 matrix over the (compact or split) octonions, stored as its
// six independent entries:
//
//     [ xi1       x3        conj(x2) ]
//     [ conj(x3)  xi2       x1       ]
//     [ x2        conj(x1)  xi3      ]
//
// off[0] = x1 (the (2,3)-entry), off[1] = x2 ((3,1)), off[2] = x3 ((1,2)).
// Hermiticity is structural; the full matrix is only ever expanded inside
// products.
struct JordanElement {
    std::array<double, 3> diag{};
    std::array<Octonion, 3> off{};
    Algebra alg = Algebra::compact;

    JordanElement() = default;
    JordanElement(const std::array<double, 3>& d, const Octonion& x1, const Octonion& x2,
                  const Octonion& x3)
        : diag(d), off{x1, x2, x3}, alg(x1.alg) {
        if (x2.alg != alg || x3.alg != alg)
            throw AlgebraMismatch("JordanElement: entries from different algebras");
    }

    static JordanElement zero(Algebra a = Algebra::compact) {
        JordanElement e;
        e.alg = a;
        for (Octonion& x : e.off) x.alg = a;
        return e;
    }
    static JordanElement diagonal(const std::array<double, 3>& d,
                                  Algebra a = Algebra::compact) {
        JordanElement e = zero(a);
        e.diag = d;
        return e;
    }

    bool operator==(const JordanElement&) const = default;

    JordanElement operator-() const;
    friend JordanElement operator+(const JordanElement&, const JordanElement&);
    friend JordanElement operator-(const JordanElement&, const JordanElement&);
    friend JordanElement operator*(double, const JordanElement&);
    friend JordanElement operator*(const JordanElement& x, double s) { return s * x; }
};

// The 3x3 unit matrix E.
JordanElement unit_E(Algebra alg = Algebra::compact);

double trace(const JordanElement& x);

// X o Y = (XY + YX)/2, computed on the expanded octonion matrices. Throws
// HermiticityViolation if the symmetrized product drifts off Hermitian
// (tolerance 1e-11, scaled by the operand Frobenius norms above unit scale).
JordanElement jordan_product(const JordanElement& x, const JordanElement& y);

// (X, Y) = tr(X o Y), evaluated in closed form:
//   sum_i xi_i eta_i + 2 sum_i Re(x_i conj(y_i)).
double inner_product(const JordanElement& x, const JordanElement& y);

// Freudenthal product
//   X x Y = (2 X o Y - tr(X) Y - tr(Y) X + (tr(X)tr(Y) - (X,Y)) E) / 2.
JordanElement freudenthal_cross(const JordanElement& x, const JordanElement& y);

// Quadratic and cubic invariants built from the Freudenthal product:
// sigma(X) = tr(X x X), det(X) = (X x X, X)/3. On diagonal elements these
// are the elementary symmetric functions e2 and e3 of the diagonal.
double sigma(const JordanElement& x);
double det(const JordanElement& x);

// Euclidean matrix norm sqrt(sum xi^2 + 2 sum |x_i|_coeff^2); used for
// tolerance scaling (well-defined for both algebras).
double frobenius_norm(const JordanElement& x);

// Largest Euclidean norm among the three off-diagonal entries.
double max_off_diagonal(const JordanElement& x);

// ---------------------------------------------------------------------------
// Pair model: J(3,C) ~ J(3,H) + H^3, compact algebra only. Each off-diagonal
// octonion splits as x_i = m_i + a_i e4; M collects the quaternion parts in
// the same slot layout as JordanElement and a = (a1, a2, a3) is a row triple.
struct PairElement {
    std::array<double, 3> m_diag{};
    std::array<Quaternion, 3> m_off{};
    std::array<Quaternion, 3> a{};

    bool operator==(const PairElement&) const = default;
};

PairElement to_pair(const JordanElement& x); // throws SplitUnsupported
JordanElement from_pair(const PairElement& p);

// (M + a) x (N + b) = (M x N - (a* b + b* a)/2) - (a N + b M)/2, where a* b is
// the 3x3 quaternion matrix (column a*)(row b) and a N is row-vector times
// matrix. Corresponds to the Freudenthal product under to_pair.
PairElement pair_cross(const PairElement& p, const PairElement& q);

} // namespace albert
