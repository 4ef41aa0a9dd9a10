#pragma once

#include "primcoh/form.hpp"
#include "primcoh/matrix.hpp"
#include "primcoh/model.hpp"
#include "primcoh/polynomial.hpp"

#include <string>
#include <vector>

namespace primcoh {

// Cone-flat bundle candidate in a global invariant trivialization: the
// connection is d + A with A an r x r matrix of degree-1 forms, and Phi is a
// constant r x r endomorphism matrix. Immutable after construction.
struct BundleData {
    int rank = 0;
    std::vector<Form> A; // rank*rank, row major; every entry a degree-1 form
    RatMatrix phi;       // rank x rank

    const Form& a(int i, int j) const { return A[static_cast<std::size_t>(i) * rank + j]; }
    Form& a(int i, int j) { return A[static_cast<std::size_t>(i) * rank + j]; }

    bool operator==(const BundleData&) const = default;
};

// A = 0, Phi = 0.
BundleData trivial_bundle(int m, int rank = 1);

// Bundle-valued homogeneous form: r components of equal degree.
struct EForm {
    int degree = 0;
    std::vector<Form> components;

    int rank() const { return static_cast<int>(components.size()); }
    bool is_zero() const;

    bool operator==(const EForm&) const = default;
};

EForm zero_eform(int m, int rank, int degree);

// ShapeError unless the bundle entries are degree-1 forms over spec's model
// with a rank x rank Phi.
void require_bundle_shape(const BundleData& b, const ModelSpec& spec);

// Covariant derivative (nabla x)_i = d(x_i) + sum_j A_ij ^ x_j; raises the
// degree by one. The connection entries wedge from the left.
EForm nabla(const BundleData& b, const EForm& x, const ModelSpec& spec);

// F_ij = d(A_ij) + sum_k A_ik ^ A_kj; applying nabla twice equals wedging F
// onto the form entry-wise.
std::vector<Form> curvature(const BundleData& b, const ModelSpec& spec);

// Matrix of nabla : EForm^degree -> EForm^{degree+1}, coordinates
// component-major then monomial-lex.
RatMatrix nabla_matrix(const BundleData& b, const ModelSpec& spec, int degree);

struct FlatnessFailure {
    int condition = 0; // 1: curvature + eta*Phi != 0, 2: A*Phi - Phi*A != 0
    int row = 0;       // 1-based entry
    int col = 0;
    Form residual;
};

struct FlatnessReport {
    bool passed = false;
    std::vector<FlatnessFailure> failures;
};

std::string to_string(const FlatnessFailure& f);

// Checks the two cone-flatness conditions against spec's eta:
//   (i)  curvature(b) + Phi_ij * eta = 0 entry-wise,
//   (ii) A*Phi - Phi*A = 0 as a matrix of 1-forms.
// Failure is a report listing each bad entry, not an error.
FlatnessReport check_cone_flat(const BundleData& b, const ModelSpec& spec);

// Kronecker tensor product: rank r1*r2, A = A1 (x) I + I (x) A2, and
// Phi = Phi1 (x) I + I (x) Phi2; product basis index (i-1)*r2 + j.
BundleData tensor_product(const BundleData& b1, const BundleData& b2);

// E (x) L^n for a rank-1 bundle l = (a, f), in closed form:
// A = A^E + n*a*I, Phi = Phi^E + n*f*I. RankError unless l.rank == 1.
BundleData tensor_power(const BundleData& e, const BundleData& l, int n);

// det(Phi^E + n*f*I) as an exact polynomial in n of degree <= rank(e); the
// leading coefficient is f^rank when f != 0. RankError unless l.rank == 1.
Polynomial phi_det_poly(const BundleData& e, const BundleData& l);

} // namespace primcoh
