#include "albert/split.hpp"

namespace albert {

JordanElement counterexample_X0() {
    JordanElement x = JordanElement::zero(Algebra::split);
    x.off[0] = Octonion::basis(4, Algebra::split);
    return x;
}

ObstructionVerdict diagonalizability_obstruction(const JordanElement& x,
                                                 double certificate_tol) {
    if (x.alg != Algebra::split)
        throw CompactUnsupported(
            "obstruction certificate applies to split elements; compact elements "
            "are always diagonalizable");
    ObstructionVerdict v;
    v.inner_square = inner_product(x, x);
    v.verdict = v.inner_square < -certificate_tol ? Verdict::obstructed
                                                  : Verdict::inconclusive;
    return v;
}

} // namespace albert
