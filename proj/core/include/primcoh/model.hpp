#pragma once

#include "primcoh/form.hpp"
#include "primcoh/matrix.hpp"

#include <string>
#include <vector>

namespace primcoh {

// Finite commutative differential graded model on m degree-1 generators
// e_1..e_m: the differential is determined by the 2-forms d(e_k), and eta is
// the distinguished closed 2-form of the complex. Immutable after validation.
struct ModelSpec {
    std::string name;
    int m = 0;
    std::vector<Form> d; // size m; d[k] = d(e_{k+1}), a 2-form
    Form eta;            // 2-form
    bool symplectic = false;

    bool operator==(const ModelSpec&) const = default;
};

struct TwoFormTerm {
    Rational coeff;
    int i = 0;
    int j = 0;
};

struct OneFormTerm {
    Rational coeff;
    int i = 0;
};

// Builders used by the loaders; FormatError on out-of-range indices or i >= j.
Form two_form(int m, const std::vector<TwoFormTerm>& terms);
Form one_form(int m, const std::vector<OneFormTerm>& terms);

// Inverse of the builders: the nonzero terms of a 2-form/1-form in basis order.
std::vector<TwoFormTerm> two_form_terms(const Form& f);
std::vector<OneFormTerm> one_form_terms(const Form& f);

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    bool passed = false;
    std::vector<ValidationCheck> checks;
};

// Exterior derivative extended from the generators by the graded Leibniz
// rule; raises degree by one and is linear over the rationals.
Form differential(const Form& a, const ModelSpec& spec);

// All C(m, degree) basis monomials in lexicographic order; DegreeError
// outside 0..m.
std::vector<Monomial> basis(const ModelSpec& spec, int degree);

// Checks d^2 = 0 on every generator, d(eta) = 0, and (when the symplectic
// flag is set) that m is even with eta^(m/2) != 0. Structurally broken specs
// (wrong vector sizes, mismatched degrees) throw FormatError instead.
ValidationReport validate_model(const ModelSpec& spec);

// Matrix of d : Omega^degree -> Omega^{degree+1} in the monomial bases.
RatMatrix differential_matrix(const ModelSpec& spec, int degree);

// Matrix of (a ^ .) : Omega^degree -> Omega^{degree + deg a}.
RatMatrix wedge_left_matrix(const Form& a, int degree);

} // namespace primcoh
