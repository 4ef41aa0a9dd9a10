#pragma once

#include "primcoh/matrix.hpp"

#include <vector>

namespace primcoh {

// Exact rank over the rationals, computed by fraction-free (Bareiss)
// elimination on a row-scaled integer copy, so no rounding can occur.
int rank(const RatMatrix& m);

// Basis of the right null space; size == cols - rank(m), and m * v = 0 holds
// exactly for each returned v. Vectors come out as primitive integer vectors
// (entries coprime) with positive coordinate at their free column, ordered by
// ascending free column, which makes the basis deterministic.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// Exact determinant; ShapeError unless square.
Rational det(const RatMatrix& m);

// Exact inverse; ShapeError unless square, SingularMatrixError when det == 0.
RatMatrix invert(const RatMatrix& m);

// Exact matrix-vector product, for kernel checks and coordinate evaluation.
std::vector<Rational> matvec(const RatMatrix& m, const std::vector<Rational>& v);

} // namespace primcoh
