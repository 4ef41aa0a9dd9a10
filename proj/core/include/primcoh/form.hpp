#pragma once

#include "primcoh/errors.hpp"
#include "primcoh/rational.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace primcoh {

// Largest supported number of degree-1 generators. Desk-scale models stay far
// below this; the cap only bounds the bitmask width and basis-table size.
inline constexpr int kMaxGenerators = 24;

// Basis monomial e_{i1} ^ ... ^ e_{ik}, i1 < ... < ik: bit g-1 set for
// generator g.
struct Monomial {
    std::uint32_t mask = 0;

    int degree() const;
    std::vector<int> indices() const; // ascending, 1-based

    bool operator==(const Monomial&) const = default;
};

// Sign of e_A ^ e_B relative to the sorted merge: (-1)^inversions, or 0 when
// the index sets overlap.
int merge_sign(std::uint32_t a, std::uint32_t b);

// Per-degree monomial bases of the exterior algebra on m generators, in
// lexicographic order of the index sets. Shared and immutable per m.
class BasisTable {
public:
    explicit BasisTable(int m);

    int m() const { return m_; }
    // C(m, degree); 0 outside 0..m.
    int dim(int degree) const;
    const std::vector<std::uint32_t>& masks(int degree) const;
    int index_of(int degree, std::uint32_t mask) const;

private:
    int m_;
    std::vector<std::vector<std::uint32_t>> masks_;
    std::vector<std::unordered_map<std::uint32_t, int>> pos_;
};

// Cached, thread-safe lookup; FormatError unless 1 <= m <= kMaxGenerators.
const BasisTable& basis_table(int m);

// Number of degree-`degree` basis monomials on m generators (0 outside 0..m).
int form_dim(int m, int degree);

// Homogeneous exterior form on m degree-1 generators, stored as the exact
// coefficient vector over the degree's monomial basis. Degrees outside 0..m
// are representable as the zero space (empty coefficient vector), which is
// what the boundary degrees of the cone complex need.
class Form {
public:
    Form() = default;
    Form(int m, int degree);

    static Form monomial(int m, Monomial mono, const Rational& coeff = 1);
    static Form generator(int m, int index); // e_index, degree 1

    int m() const { return m_; }
    int degree() const { return degree_; }
    int dim() const { return static_cast<int>(coeffs_.size()); }

    const Rational& operator[](int q) const { return coeffs_[q]; }
    Rational& operator[](int q) { return coeffs_[q]; }

    bool is_zero() const;

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Rational& c);

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Rational& c, Form a) { return a *= c; }
    friend Form operator-(Form a) { return a *= Rational(-1); }

    bool operator==(const Form&) const = default;

private:
    int m_ = 0;
    int degree_ = 0;
    std::vector<Rational> coeffs_;
};

// Exterior product. Bilinear, associative, graded-commutative; beyond the top
// degree it returns the canonical zero form of degree min(a+b, m+1).
Form wedge(const Form& a, const Form& b);

// "e1^e3", "1" for the empty monomial.
std::string to_string(const Monomial& mono);
// "e1^e2 - 2/3 e1^e3", "0" for the zero form. Terms follow basis order.
std::string to_string(const Form& f);

} // namespace primcoh
