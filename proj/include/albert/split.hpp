#pragma once

#include "albert/jordan.hpp"

namespace albert {

enum class Verdict { obstructed, inconclusive };

constexpr const char* verdict_name(Verdict v) {
    return v == Verdict::obstructed ? "obstructed" : "inconclusive";
}

// Certificate of non-diagonalizability over the split algebra. A diagonal
// form would have (X, X) = xi1^2 + xi2^2 + xi3^2 >= 0, and the inner product
// is invariant under the full automorphism group, so (X, X) < 0 proves no
// diagonal form exists. A nonnegative value proves nothing either way.
struct ObstructionVerdict {
    double inner_square = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

// The split element with zero diagonal and x1 = e4'; (X0, X0) = -2.
JordanElement counterexample_X0();

// Throws CompactUnsupported for compact input (always diagonalizable).
ObstructionVerdict diagonalizability_obstruction(const JordanElement& x,
                                                 double certificate_tol = 1e-9);

} // namespace albert
