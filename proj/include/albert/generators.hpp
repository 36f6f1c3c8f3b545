#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "albert/jordan.hpp"

namespace albert {

// The four generator families. Each validates its defining invariant at
// construction (default tolerance 1e-10) and is immutable afterwards, so a
// constructed Generator is always safe to apply.

// X -> D X conj(D) with D = diag(a, conj(a), 1) for a unit octonion a.
// Entrywise: x1 -> conj(a) x1, x2 -> x2 conj(a), x3 -> a x3 a, diagonal fixed.
class DeltaA {
public:
    DeltaA() : a_(Octonion::real(1.0)) {} // identity
    explicit DeltaA(const Octonion& a, double tol = 1e-10);
    const Octonion& a() const { return a_; }
    bool operator==(const DeltaA&) const = default;

private:
    Octonion a_;
};

// X -> T X T^t for T in O(3), row-major storage.
class RotO3 {
public:
    explicit RotO3(const std::array<double, 9>& t, double tol = 1e-10);
    const std::array<double, 9>& t() const { return t_; }
    double at(int i, int j) const { return t_[3 * i + j]; }
    bool operator==(const RotO3&) const = default;

private:
    std::array<double, 9> t_;
};

// (M + a) -> (A M A*, a A*) through the pair model, for A in Sp(3)
// (3x3 quaternion matrix with A* A = E), row-major storage.
class SpThree {
public:
    explicit SpThree(const std::array<Quaternion, 9>& a, double tol = 1e-10);
    const std::array<Quaternion, 9>& a() const { return a_; }
    const Quaternion& at(int i, int j) const { return a_[3 * i + j]; }
    bool operator==(const SpThree&) const = default;

private:
    std::array<Quaternion, 9> a_;
};

// Entrywise x_i -> alpha(x_i) for an octonion automorphism alpha, stored as
// its orthogonal 7x7 action on the imaginary coefficients c1..c7 (row-major).
// Construction checks orthogonality and the automorphism law
// alpha(e_i e_j) = alpha(e_i) alpha(e_j) on all 49 imaginary basis pairs.
class GTwoAuto {
public:
    explicit GTwoAuto(const std::array<double, 49>& l, double tol = 1e-10);
    const std::array<double, 49>& l() const { return l_; }
    Octonion map(const Octonion& x) const; // identity on Re, l_ on Im
    bool operator==(const GTwoAuto&) const = default;

private:
    std::array<double, 49> l_;
};

// Tagged union over the four families. A thin wrapper (rather than a bare
// std::variant alias) so the generator API lives in this namespace for
// argument-dependent lookup.
class Generator {
public:
    using Payload = std::variant<DeltaA, RotO3, SpThree, GTwoAuto>;

    Generator(DeltaA g) : v_(std::move(g)) {}
    Generator(RotO3 g) : v_(std::move(g)) {}
    Generator(SpThree g) : v_(std::move(g)) {}
    Generator(GTwoAuto g) : v_(std::move(g)) {}

    const Payload& payload() const { return v_; }
    template <typename T> bool holds() const { return std::holds_alternative<T>(v_); }
    template <typename T> const T& get() const { return std::get<T>(v_); }

    bool operator==(const Generator&) const = default;

private:
    Payload v_;
};

// "delta_a", "rot_o3", "sp3" or "g2".
const char* generator_kind(const Generator& g);

// Composition applies left to right in list order.
using GeneratorSequence = std::vector<Generator>;

JordanElement apply(const Generator& g, const JordanElement& x);
JordanElement apply_sequence(const GeneratorSequence& gs, JordanElement x);

// Exact structural identity (payload equals the identity payload).
bool is_identity(const Generator& g);

// Max deviation of the generator's defining invariant; what construction
// checks, re-exposed for transcript verification.
double validation_deviation(const Generator& g);

// Constructive G2 transitivity on the unit 6-sphere of imaginary octonions:
// returns alpha with alpha(u) = e1, built by completing u to a basic triple
// (u, v, w) and mapping the induced orthonormal frame
//   (u, v, uv, w, uw, vw, (uv)w)  ->  (e1, e2, e3, e4, e5, e6, e7).
// u must be purely imaginary and unit, compact algebra.
Generator g2_map_to_e1(const Octonion& u, double tol = 1e-10);

// Numerical F4-membership evidence: max deviation of g from preserving the
// Jordan and Freudenthal products over random pairs.
struct MembershipReport {
    double jordan_dev = 0.0;
    double cross_dev = 0.0;
    int trials = 0;
};
MembershipReport check_f4_membership(const Generator& g, int trials,
                                     std::uint64_t seed = 20240901);

} // namespace albert
