#include "primcoh/linalg.hpp"

#include <numeric>
#include <utility>

namespace primcoh {

namespace {

/*
 * Fraction-free Gaussian elimination (Bareiss). Rows are first scaled to
 * integers; the one-step Bareiss update
 *
 *     E[i][j] <- (E[i][j]*pivot - E[i][col]*E[k][j]) / prev_pivot
 *
 * keeps every intermediate entry an integer minor of the scaled matrix, so
 * the division is exact and entry growth stays polynomial (Hadamard bound).
 * Pivoting picks the largest-magnitude candidate in the current column.
 */
struct Echelon {
    std::vector<std::vector<Int>> e; // echelon form of the scaled integer matrix
    std::vector<int> pivot_cols;     // ascending; pivot row t sits at e[t]
    std::vector<Int> row_scale;      // original row i was multiplied by row_scale[i] > 0
    int swaps = 0;
    int cols = 0;
};

Int row_lcm_of_denominators(const RatMatrix& m, int i) {
    Int l = 1;
    for (int j = 0; j < m.cols(); ++j) {
        l = lcm(l, denominator(m(i, j)));
    }
    return l;
}

Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    divide_qr(a, b, q, r);
    if (r != 0) throw Error("internal: fraction-free elimination produced a non-exact division");
    return q;
}

// Eliminates only the leftmost `pivot_limit` columns; trailing columns are
// carried along (used for the augmented inverse computation).
Echelon eliminate(const RatMatrix& m, int pivot_limit) {
    Echelon out;
    out.cols = m.cols();
    const int rows = m.rows();
    out.e.resize(rows);
    out.row_scale.resize(rows);
    for (int i = 0; i < rows; ++i) {
        Int l = row_lcm_of_denominators(m, i);
        out.row_scale[i] = l;
        out.e[i].resize(m.cols());
        for (int j = 0; j < m.cols(); ++j) {
            out.e[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
        }
    }

    Int prev = 1;
    int r = 0; // next pivot row
    for (int col = 0; col < pivot_limit && r < rows; ++col) {
        int best = -1;
        for (int i = r; i < rows; ++i) {
            if (out.e[i][col] == 0) continue;
            if (best < 0 || abs(out.e[i][col]) > abs(out.e[best][col])) best = i;
        }
        if (best < 0) continue;
        if (best != r) {
            std::swap(out.e[best], out.e[r]);
            ++out.swaps;
        }
        const Int pivot = out.e[r][col];
        for (int i = r + 1; i < rows; ++i) {
            if (out.e[i][col] == 0) {
                // row already clear in this column; still must rescale per Bareiss
                for (int j = col + 1; j < out.cols; ++j) {
                    if (out.e[i][j] == 0) continue;
                    out.e[i][j] = exact_div(out.e[i][j] * pivot, prev);
                }
                continue;
            }
            for (int j = col + 1; j < out.cols; ++j) {
                out.e[i][j] = exact_div(out.e[i][j] * pivot - out.e[i][col] * out.e[r][j], prev);
            }
            out.e[i][col] = 0;
        }
        prev = pivot;
        out.pivot_cols.push_back(col);
        ++r;
    }
    return out;
}

// Back substitution on the echelon form: given values for the free columns,
// solves for the pivot columns over the rationals.
std::vector<Rational> back_substitute(const Echelon& ech, std::vector<Rational> v) {
    for (int t = static_cast<int>(ech.pivot_cols.size()) - 1; t >= 0; --t) {
        const int c = ech.pivot_cols[t];
        Rational sum = 0;
        for (int j = c + 1; j < ech.cols; ++j) {
            if (ech.e[t][j] == 0 || v[j] == 0) continue;
            sum += Rational(ech.e[t][j]) * v[j];
        }
        v[c] = -sum / Rational(ech.e[t][c]);
    }
    return v;
}

void normalize_primitive(std::vector<Rational>& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    Int g = 0;
    std::vector<Int> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, ints[i]);
    }
    if (g == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(ints[i] / g);
}

} // namespace

int rank(const RatMatrix& m) {
    return static_cast<int>(eliminate(m, m.cols()).pivot_cols.size());
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    Echelon ech = eliminate(m, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        v = back_substitute(ech, std::move(v));
        normalize_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational det(const RatMatrix& m) {
    if (!m.is_square()) throw ShapeError("det requires a square matrix");
    if (m.rows() == 0) return 1; // empty product
    Echelon ech = eliminate(m, m.cols());
    if (static_cast<int>(ech.pivot_cols.size()) < m.rows()) return 0;
    Rational d(ech.e[m.rows() - 1][m.cols() - 1]);
    if (ech.swaps % 2 != 0) d = -d;
    for (const Int& s : ech.row_scale) d /= Rational(s);
    return d;
}

RatMatrix invert(const RatMatrix& m) {
    if (!m.is_square()) throw ShapeError("invert requires a square matrix");
    const int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon ech = eliminate(aug, n);
    if (static_cast<int>(ech.pivot_cols.size()) < n) {
        throw SingularMatrixError("matrix is singular");
    }
    RatMatrix inv(n, n);
    for (int q = 0; q < n; ++q) {
        std::vector<Rational> v(2 * n, Rational(0));
        v[n + q] = -1; // rhs column moved across the equality sign
        v = back_substitute(ech, std::move(v));
        for (int i = 0; i < n; ++i) inv(i, q) = v[i];
    }
    return inv;
}

std::vector<Rational> matvec(const RatMatrix& m, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != m.cols()) {
        throw ShapeError("matvec shape mismatch");
    }
    std::vector<Rational> out(m.rows(), Rational(0));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j) == 0 || v[j] == 0) continue;
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

} // namespace primcoh
