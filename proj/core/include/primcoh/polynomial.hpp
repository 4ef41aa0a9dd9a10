#pragma once

#include "primcoh/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace primcoh {

// Univariate polynomial with exact rational coefficients, ascending powers.
class Polynomial {
public:
    Polynomial() = default; // zero polynomial
    explicit Polynomial(std::vector<Rational> coeffs);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // coefficient of x^k; 0 beyond the degree
    Rational coeff(int k) const;

    Rational operator()(const Rational& x) const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<Rational> coeffs_;
};

// Unique interpolating polynomial through distinct nodes (Lagrange, exact).
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// Largest integer root >= 0, or nullopt when there is none. The polynomial
// must not be identically zero. Roots are found exactly: integer roots of the
// cleared primitive integer polynomial divide its trailing coefficient.
std::optional<Int> largest_nonnegative_integer_root(const Polynomial& p);

// "n^2 - 2*n + 1", "0"; coefficients rendered as exact rationals.
std::string to_string(const Polynomial& p, std::string_view var = "n");

} // namespace primcoh
