#pragma once

#include "primcoh/bundle.hpp"
#include "primcoh/matrix.hpp"
#include "primcoh/model.hpp"

#include <vector>

namespace primcoh {

// Degree-i element (alpha, beta) of the mapping-cone complex: alpha a
// bundle-valued i-form, beta a bundle-valued (i-1)-form. At the boundary
// degrees one slot is the zero space (empty coefficient vector).
struct ConeElement {
    int degree = 0;
    EForm alpha;
    EForm beta;

    bool is_zero() const { return alpha.is_zero() && beta.is_zero(); }

    bool operator==(const ConeElement&) const = default;
};

ConeElement zero_cone_element(int m, int rank, int degree);
ConeElement make_cone_element(int degree, EForm alpha, EForm beta); // ShapeError on bad degrees

// Coordinate dimension r*(C(m,i) + C(m,i-1)) of the degree-i cochain space.
int cone_dim(int m, int rank, int degree);

// Coordinates: alpha block before beta block, each block component-major then
// monomial-lex.
std::vector<Rational> cone_coordinates(const ConeElement& z);
ConeElement cone_element_from_coordinates(int m, int rank, int degree,
                                          const std::vector<Rational>& coords);

// The mapping-cone covariant derivative
//   (alpha, beta) |-> (nabla alpha + eta ^ beta, Phi alpha - nabla beta)
// at degree z.degree + 1; linear over the rationals.
ConeElement apply(const BundleData& b, const ModelSpec& spec, const ConeElement& z);

// Matrix realization of the full complex: one matrix per degree 0..m+1 with
// block layout [[nabla_i, eta^.], [Phi, -nabla_{i-1}]], plus the stored
// flatness certificate.
struct ConeComplex {
    ModelSpec spec;
    BundleData bundle;
    std::vector<RatMatrix> matrices; // index i = 0..m+1
    FlatnessReport flatness;
};

// Assembles every degree; ValidationError when the model fails validate_model.
ConeComplex assemble(const BundleData& b, const ModelSpec& spec);

// True iff matrix(i+1) * matrix(i) = 0 exactly for all i.
bool verify_complex(const ConeComplex& c);

// h^i = (cols_i - rank_i) - rank_{i-1} for i = 0..m+1; ComplexError unless
// verify_complex holds.
std::vector<int> cohomology_dims(const ConeComplex& c);

// Explicit contraction ((Phi)^{-1} beta, 0) at degree z.degree - 1 for a
// cocycle z; the returned w satisfies apply(w) = z exactly (checked before
// returning). SingularMatrixError when Phi is singular, CocycleError when
// apply(z) != 0.
ConeElement contract(const ConeComplex& c, const ConeElement& z);

} // namespace primcoh
