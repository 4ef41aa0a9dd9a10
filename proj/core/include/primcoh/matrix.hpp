#pragma once

#include "primcoh/errors.hpp"
#include "primcoh/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace primcoh {

// Dense exact-rational matrix, row major. Degenerate shapes (0 rows or
// 0 columns) are valid and behave as the corresponding zero maps.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    // Bounds-checked access; throws ShapeError when (i, j) is outside.
    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const RatMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

// Exact product; ShapeError unless a.cols == b.rows. Skips zero entries, so
// products of the sparse cone-complex blocks stay cheap.
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& c, const RatMatrix& a);

// Kronecker product, row-major block convention: entry ((i1*b.rows+i2), (j1*b.cols+j2)).
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

std::string to_string(const RatMatrix& a);

} // namespace primcoh
