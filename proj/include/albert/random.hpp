#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "albert/jordan.hpp"

namespace albert {

// Deterministic draws for reproducible elements and property sweeps.
//
// The generator is std::mt19937_64, which the C++ standard pins bit-exactly,
// seeded directly with the user seed. Doubles are derived as
// (word >> 11) * 2^-53 in [0,1), so the stream is identical on every
// platform and easy to reproduce in other languages.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next_word() { return rng_(); }
    // [0, 1)
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    // [-1, 1)
    double symmetric() { return 2.0 * unit() - 1.0; }

private:
    std::mt19937_64 rng_;
};

// Eight coefficients drawn in basis order c0..c7.
Octonion random_octonion(RandomSource& rs, Algebra alg);

// Draw order: diagonal (xi1, xi2, xi3), then x1, x2, x3 coefficients; all
// i.i.d. uniform in [-1, 1).
JordanElement random_jordan(RandomSource& rs, Algebra alg);

// Unit with respect to the quadratic form: N(a) = 1. The split algebra
// rejects draws with N too close to zero or negative before normalizing.
Octonion random_unit_octonion(RandomSource& rs, Algebra alg);

// Unit imaginary octonion, compact algebra.
Octonion random_unit_imaginary(RandomSource& rs);

// Haar-ish random O(3) / Sp(3) matrices via Gram-Schmidt; row-major.
std::array<double, 9> random_orthogonal3(RandomSource& rs);
std::array<Quaternion, 9> random_sp3_matrix(RandomSource& rs);

} // namespace albert
