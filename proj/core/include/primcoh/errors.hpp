#pragma once

#include <stdexcept>

namespace primcoh {

// Base class of every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix or form dimensions do not line up.
struct ShapeError : Error { using Error::Error; };

// Square-matrix operation hit a singular input.
struct SingularMatrixError : Error { using Error::Error; };

// Requested form degree outside 0..m.
struct DegreeError : Error { using Error::Error; };

// Operation requires a rank-1 line bundle.
struct RankError : Error { using Error::Error; };

// Malformed textual input (rational literals, model documents, files).
struct ParseError : Error { using Error::Error; };

// Structurally broken model data (index bounds, i >= j terms, bad shapes).
struct FormatError : Error { using Error::Error; };

// Model failed a mathematical validation check (d^2 != 0, d(eta) != 0, ...).
struct ValidationError : Error { using Error::Error; };

// Bundle is not cone-flat where an operation requires it.
struct FlatnessError : Error { using Error::Error; };

// Cohomology requested on a non-complex (A^2 != 0).
struct ComplexError : Error { using Error::Error; };

// Contraction input is not a cocycle.
struct CocycleError : Error { using Error::Error; };

} // namespace primcoh
