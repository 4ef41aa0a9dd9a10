#include "primcoh/matrix.hpp"

#include <sstream>

namespace primcoh {

namespace {

void require_shape(bool ok, const std::string& what) {
    if (!ok) throw ShapeError(what);
}

} // namespace

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require_shape(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    data_.resize(static_cast<std::size_t>(rows) * cols);
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        require_shape(static_cast<int>(r.size()) == cols_, "ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Rational& RatMatrix::at(int i, int j) {
    require_shape(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of bounds");
    return (*this)(i, j);
}

const Rational& RatMatrix::at(int i, int j) const {
    require_shape(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of bounds");
    return (*this)(i, j);
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_) {
        if (x != 0) return false;
    }
    return true;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
    require_shape(a.cols() == b.rows(), "matmul shape mismatch: " + std::to_string(a.rows()) +
                                            "x" + std::to_string(a.cols()) + " * " +
                                            std::to_string(b.rows()) + "x" +
                                            std::to_string(b.cols()));
    RatMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b(k, j);
                if (bkj == 0) continue;
                c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

RatMatrix operator*(const Rational& c, const RatMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    return r;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            if (a(i1, j1) == 0) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int j2 = 0; j2 < b.cols(); ++j2)
                    c(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
        }
    return c;
}

std::string to_string(const RatMatrix& a) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < a.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < a.cols(); ++j) os << (j ? " " : "") << to_string(a(i, j));
    }
    os << "]";
    return os.str();
}

} // namespace primcoh
