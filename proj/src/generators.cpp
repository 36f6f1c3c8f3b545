#include "albert/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "albert/random.hpp"
#include "matrix_detail.hpp"

namespace albert {

namespace {

double rot_deviation(const std::array<double, 9>& t) {
    // max |(T^t T - E)_ij|
    double dev = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += t[3 * k + i] * t[3 * k + j];
            dev = std::max(dev, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    return dev;
}

double sp3_deviation(const std::array<Quaternion, 9>& a) {
    // max coefficient of (A* A - E)_ij
    double dev = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Quaternion s;
            for (int k = 0; k < 3; ++k) s += a[3 * k + i].conj() * a[3 * k + j];
            if (i == j) s.w -= 1.0;
            dev = std::max(dev, (s - Quaternion()).norm());
        }
    return dev;
}

// Identity on Re, the 7x7 block l on Im.
Octonion apply_imaginary_block(const std::array<double, 49>& l, const Octonion& x) {
    Octonion out = Octonion::real(x.re());
    for (int i = 0; i < 7; ++i) {
        double s = 0.0;
        for (int j = 0; j < 7; ++j) s += l[7 * i + j] * x.c[j + 1];
        out.c[i + 1] = s;
    }
    return out;
}

double g2_deviation(const std::array<double, 49>& l) {
    double dev = 0.0;
    // orthogonality of the 7x7 block
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            double s = 0.0;
            for (int k = 0; k < 7; ++k) s += l[7 * k + i] * l[7 * k + j];
            dev = std::max(dev, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    // automorphism law on the 49 imaginary basis pairs
    for (std::size_t i = 1; i < 8; ++i)
        for (std::size_t j = 1; j < 8; ++j) {
            const Octonion ei = Octonion::basis(i);
            const Octonion ej = Octonion::basis(j);
            const Octonion lhs = apply_imaginary_block(l, ei * ej);
            const Octonion rhs = apply_imaginary_block(l, ei) * apply_imaginary_block(l, ej);
            dev = std::max(dev, (lhs - rhs).coeff_norm());
        }
    return dev;
}

Octonion entry_conjugation(const Octonion& a, const Octonion& x) {
    // a x a; the two bracketings agree by Artin two-generator associativity.
    return (a * x) * a;
}

} // namespace

DeltaA::DeltaA(const Octonion& a, double tol) : a_(a) {
    if (std::abs(a.norm2() - 1.0) > tol)
        throw NotUnit("DeltaA: |a| must be 1 (N(a) = " + std::to_string(a.norm2()) + ")");
}

RotO3::RotO3(const std::array<double, 9>& t, double tol) : t_(t) {
    const double dev = rot_deviation(t);
    if (dev > tol)
        throw InvalidGenerator("RotO3: T^t T deviates from E by " + std::to_string(dev));
}

SpThree::SpThree(const std::array<Quaternion, 9>& a, double tol) : a_(a) {
    const double dev = sp3_deviation(a);
    if (dev > tol)
        throw InvalidGenerator("SpThree: A* A deviates from E by " + std::to_string(dev));
}

GTwoAuto::GTwoAuto(const std::array<double, 49>& l, double tol) : l_(l) {
    const double dev = g2_deviation(l);
    if (dev > tol)
        throw InvalidGenerator("GTwoAuto: automorphism invariant deviates by " +
                               std::to_string(dev));
}

Octonion GTwoAuto::map(const Octonion& x) const {
    if (x.alg != Algebra::compact)
        throw SplitUnsupported("GTwoAuto acts on the compact algebra");
    return apply_imaginary_block(l_, x);
}

namespace {

JordanElement apply_delta_a(const DeltaA& g, const JordanElement& x) {
    if (g.a().alg != x.alg)
        throw AlgebraMismatch("DeltaA and element live in different algebras");
    const Octonion& a = g.a();
    JordanElement out = x;
    out.off[0] = a.conj() * x.off[0];          // x1 -> conj(a) x1
    out.off[1] = x.off[1] * a.conj();          // x2 -> x2 conj(a)
    out.off[2] = entry_conjugation(a, x.off[2]); // x3 -> a x3 a
    return out;
}

JordanElement apply_rot(const RotO3& g, const JordanElement& x) {
    const detail::OctMat3 m = detail::expand(x);
    detail::OctMat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Octonion s = Octonion::real(0.0, x.alg);
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q) s += (g.at(i, p) * g.at(j, q)) * m[p][q];
            out[i][j] = s;
        }
    const double scale = std::max(1.0, frobenius_norm(x));
    return detail::pack_hermitian(out, x.alg, 1e-11 * scale);
}

JordanElement apply_sp3(const SpThree& g, const JordanElement& x) {
    if (x.alg != Algebra::compact)
        throw SplitUnsupported("SpThree acts on compact elements via the pair model");
    const PairElement p = to_pair(x);
    const detail::QuatMat3 m = detail::expand_pair_m(p);
    detail::QuatMat3 am;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Quaternion s;
            for (int k = 0; k < 3; ++k) s += g.at(i, k) * m[k][j];
            am[i][j] = s;
        }
    PairElement out;
    detail::QuatMat3 ama;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Quaternion s;
            for (int k = 0; k < 3; ++k) s += am[i][k] * g.at(j, k).conj();
            ama[i][j] = s;
        }
    out.m_diag = {ama[0][0].re(), ama[1][1].re(), ama[2][2].re()};
    out.m_off = {ama[1][2], ama[2][0], ama[0][1]};
    for (int j = 0; j < 3; ++j) {
        Quaternion s;
        for (int i = 0; i < 3; ++i) s += p.a[i] * g.at(j, i).conj(); // a A*
        out.a[j] = s;
    }
    return from_pair(out);
}

JordanElement apply_g2(const GTwoAuto& g, const JordanElement& x) {
    if (x.alg != Algebra::compact)
        throw SplitUnsupported("GTwoAuto acts on compact elements");
    JordanElement out = x;
    for (int i = 0; i < 3; ++i) out.off[i] = g.map(x.off[i]);
    return out;
}

} // namespace

JordanElement apply(const Generator& g, const JordanElement& x) {
    return std::visit(
        [&](const auto& gen) -> JordanElement {
            using T = std::decay_t<decltype(gen)>;
            if constexpr (std::is_same_v<T, DeltaA>) return apply_delta_a(gen, x);
            else if constexpr (std::is_same_v<T, RotO3>) return apply_rot(gen, x);
            else if constexpr (std::is_same_v<T, SpThree>) return apply_sp3(gen, x);
            else return apply_g2(gen, x);
        },
        g.payload());
}

JordanElement apply_sequence(const GeneratorSequence& gs, JordanElement x) {
    for (const Generator& g : gs) x = albert::apply(g, x);
    return x;
}

const char* generator_kind(const Generator& g) {
    return std::visit(
        [](const auto& gen) -> const char* {
            using T = std::decay_t<decltype(gen)>;
            if constexpr (std::is_same_v<T, DeltaA>) return "delta_a";
            else if constexpr (std::is_same_v<T, RotO3>) return "rot_o3";
            else if constexpr (std::is_same_v<T, SpThree>) return "sp3";
            else return "g2";
        },
        g.payload());
}

bool is_identity(const Generator& g) {
    return std::visit(
        [](const auto& gen) -> bool {
            using T = std::decay_t<decltype(gen)>;
            if constexpr (std::is_same_v<T, DeltaA>) {
                return gen.a() == Octonion::real(1.0, gen.a().alg);
            } else if constexpr (std::is_same_v<T, RotO3>) {
                static constexpr std::array<double, 9> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
                return gen.t() == id;
            } else if constexpr (std::is_same_v<T, SpThree>) {
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        if (gen.at(i, j) != (i == j ? Quaternion::one() : Quaternion()))
                            return false;
                return true;
            } else {
                for (int i = 0; i < 7; ++i)
                    for (int j = 0; j < 7; ++j)
                        if (gen.l()[7 * i + j] != (i == j ? 1.0 : 0.0)) return false;
                return true;
            }
        },
        g.payload());
}

double validation_deviation(const Generator& g) {
    return std::visit(
        [](const auto& gen) -> double {
            using T = std::decay_t<decltype(gen)>;
            if constexpr (std::is_same_v<T, DeltaA>)
                return std::abs(gen.a().norm2() - 1.0);
            else if constexpr (std::is_same_v<T, RotO3>)
                return rot_deviation(gen.t());
            else if constexpr (std::is_same_v<T, SpThree>)
                return sp3_deviation(gen.a());
            else
                return g2_deviation(gen.l());
        },
        g.payload());
}

namespace {

// Component of cand orthogonal to the (orthonormal) frame vectors collected
// so far, normalized; empty norm reported via the bool.
bool gram_schmidt(const Octonion& cand, const std::vector<Octonion>& frame,
                  Octonion& out) {
    Octonion v = cand.im();
    for (const Octonion& b : frame) {
        double d = 0.0;
        for (int i = 1; i < 8; ++i) d += v.c[i] * b.c[i];
        v -= d * b;
    }
    const double n = v.coeff_norm();
    if (n <= 1e-6) return false;
    out = v / n;
    return true;
}

Octonion pick_orthogonal(const std::vector<Octonion>& frame, RandomSource& fallback) {
    Octonion out;
    for (std::size_t i = 1; i < 8; ++i)
        if (gram_schmidt(Octonion::basis(i), frame, out)) return out;
    for (;;)
        if (gram_schmidt(random_unit_imaginary(fallback), frame, out)) return out;
}

} // namespace

Generator g2_map_to_e1(const Octonion& u, double tol) {
    if (u.alg != Algebra::compact)
        throw SplitUnsupported("g2_map_to_e1 is defined over the compact algebra");
    if (std::abs(u.re()) > tol)
        throw NotImaginary("g2_map_to_e1: u must be purely imaginary");
    if (std::abs(u.norm2() - 1.0) > tol)
        throw NotUnit("g2_map_to_e1: u must be a unit octonion");

    RandomSource fallback(0x9e3779b97f4a7c15ULL); // fixed seed, deterministic
    const Octonion uu = u.im() / u.im().coeff_norm();
    const Octonion v = pick_orthogonal({uu}, fallback);
    const Octonion uv = uu * v;
    const Octonion w = pick_orthogonal({uu, v, uv}, fallback);

    const std::array<Octonion, 7> frame = {uu, v, uv, w, uu * w, v * w, uv * w};
    // alpha sends frame_k to e_{k+1}; with B the orthogonal matrix whose
    // columns are the frame coordinates, alpha's matrix is B^t.
    std::array<double, 49> l;
    for (int k = 0; k < 7; ++k)
        for (int i = 0; i < 7; ++i) l[7 * k + i] = frame[k].c[i + 1];
    return GTwoAuto(l, tol);
}

MembershipReport check_f4_membership(const Generator& g, int trials, std::uint64_t seed) {
    const Algebra alg = g.holds<DeltaA>() ? g.get<DeltaA>().a().alg : Algebra::compact;
    RandomSource rs(seed);
    MembershipReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const JordanElement x = random_jordan(rs, alg);
        const JordanElement y = random_jordan(rs, alg);
        const JordanElement gx = albert::apply(g, x);
        const JordanElement gy = albert::apply(g, y);
        const JordanElement j1 = albert::apply(g, jordan_product(x, y));
        const JordanElement j2 = jordan_product(gx, gy);
        report.jordan_dev = std::max(report.jordan_dev, frobenius_norm(j1 - j2));
        const JordanElement c1 = albert::apply(g, freudenthal_cross(x, y));
        const JordanElement c2 = freudenthal_cross(gx, gy);
        report.cross_dev = std::max(report.cross_dev, frobenius_norm(c1 - c2));
    }
    return report;
}

} // namespace albert
