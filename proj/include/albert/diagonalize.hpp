#pragma once

#include "albert/generators.hpp"

namespace albert {

struct Tolerances {
    double zero_tol = 1e-10;     // entry treated as zero
    double residual_tol = 1e-9;  // final off-diagonal bound
    double jacobi_tol = 1e-12;   // sweep stop threshold
    int max_sweeps = 30;

    void validate() const;
    // Tolerances for an element of Frobenius norm `scale` (> 1); the zero,
    // residual and jacobi thresholds grow linearly with scale.
    Tolerances scaled(double scale) const;
};

// Absolute drift of each invariant between input and final diagonal.
struct InvariantDrift {
    double trace = 0.0;
    double inner = 0.0;
    double sigma = 0.0;
    double det = 0.0;
};

// Replayable record of one diagonalization run:
// apply_sequence(steps, input) reproduces diag(diagonal) within
// off_diag_residual.
struct DiagonalizationTranscript {
    JordanElement input;
    GeneratorSequence steps;
    std::array<double, 3> diagonal{};
    double off_diag_residual = 0.0;
    InvariantDrift invariant_drift;
};

struct StepResult {
    Generator g;
    JordanElement x;
};

// (i) Make the x1-entry real with delta_a, a = x1/|x1|; identity when
// |x1| <= zero_tol.
StepResult step_make_x1_real(const JordanElement& x, const Tolerances& tol = {});

// (ii) Zero the (now real) x1-entry with T = diag(1, T'), T' the Jacobi
// rotation of the lower-right 2x2 block, angle theta = atan2(2 r1, xi2 - xi3)/2.
// Throws X1NotReal if x1 still has an imaginary part above zero_tol.
StepResult step_clear_x1(const JordanElement& x, const Tolerances& tol = {});

// (iii) Make the x2-entry real with delta_a, a = x2/|x2|; x1 stays zero.
StepResult step_make_x2_real(const JordanElement& x, const Tolerances& tol = {});

// (iv) Rotate the imaginary part of x3 onto e1 with a G2 automorphism, so
// x3 lands in C = span{1, e1}; x2 and the zero x1 are fixed.
StepResult step_x3_to_complex(const JordanElement& x, const Tolerances& tol = {});

// (v) Cyclic complex Jacobi sweeps (C embedded as span{1, e1}) until the
// largest off-diagonal magnitude is below jacobi_tol; returns the
// accumulated Sp(3) rotation. Throws NotComplex / NoConvergence.
StepResult step_unitary_diag(const JordanElement& x, const Tolerances& tol = {});

// Chain (i)-(v), then sort the diagonal descending with a final permutation
// in O(3). Steps that act as the identity are skipped in the transcript.
// Compact elements only; throws SplitUnsupported for split input.
DiagonalizationTranscript diagonalize(const JordanElement& x, const Tolerances& tol = {});

} // namespace albert
