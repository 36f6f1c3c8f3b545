#pragma once

#include <stdexcept>
#include <string>

namespace albert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary operation on values from different algebras (compact vs split).
struct AlgebraMismatch : Error {
    using Error::Error;
};

// Inversion of an element whose quadratic form vanishes (zero, or a split
// null vector such as 1 + e4').
struct NullElement : Error {
    using Error::Error;
};

// The symmetrized matrix product failed the Hermiticity assertion.
struct HermiticityViolation : Error {
    using Error::Error;
};

// Operation defined only over the compact algebra was given a split element.
struct SplitUnsupported : Error {
    using Error::Error;
};

// Operation defined only over the split algebra was given a compact element.
struct CompactUnsupported : Error {
    using Error::Error;
};

struct NotImaginary : Error {
    using Error::Error;
};

struct NotUnit : Error {
    using Error::Error;
};

// Rotation step applied before the (2,3)-entry was made real.
struct X1NotReal : Error {
    using Error::Error;
};

// Unitary diagonalization applied to an element outside J(3,C).
struct NotComplex : Error {
    using Error::Error;
};

// Jacobi sweeps exhausted without reaching the requested tolerance.
struct NoConvergence : Error {
    using Error::Error;
};

// Generator payload failed its construction-time invariant.
struct InvalidGenerator : Error {
    using Error::Error;
};

// Malformed or schema-violating JSON input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace albert
