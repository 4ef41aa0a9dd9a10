#include "primcoh/linalg.hpp"

#include "support/generators.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace primcoh;

namespace {

RatMatrix random_rat_matrix(testgen::Rng& rng, int rows, int cols) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.rat();
    return m;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank examples") {
    CHECK(rank(RatMatrix(3, 5)) == 0);
    CHECK(rank(RatMatrix::identity(3)) == 3);
    CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(RatMatrix::identity(2)).empty());

    const auto k = kernel_basis(RatMatrix{{1, 2}, {2, 4}});
    REQUIRE(k.size() == 1);
    // proportional to (2, -1)
    CHECK(k[0][0] * Rational(-1) == k[0][1] * Rational(2));
    CHECK(k[0][0] * 1 + k[0][1] * 2 == 0);

    const auto empty_constraints = kernel_basis(RatMatrix(0, 3));
    REQUIRE(empty_constraints.size() == 3);
    for (int f = 0; f < 3; ++f) {
        for (int j = 0; j < 3; ++j) {
            CHECK(empty_constraints[f][j] == (f == j ? 1 : 0));
        }
    }
}

TEST_CASE("det examples") {
    CHECK(det(RatMatrix::identity(4)) == 1);
    CHECK(det(RatMatrix{{0, 1}, {0, 0}}) == 0);
    CHECK(det(RatMatrix{{1, 1}, {0, 2}}) == 2);
    CHECK_THROWS_AS(det(RatMatrix(2, 3)), ShapeError);
}

TEST_CASE("invert examples") {
    CHECK(invert(RatMatrix::identity(3)) == RatMatrix::identity(3));
    CHECK(invert(RatMatrix{{2, 0}, {0, Rational(1, 2)}}) ==
          RatMatrix{{Rational(1, 2), 0}, {0, 2}});
    // [[n,1],[0,n]] with n = 3
    const RatMatrix inv = invert(RatMatrix{{3, 1}, {0, 3}});
    CHECK(inv == RatMatrix{{Rational(1, 3), Rational(-1, 9)}, {0, Rational(1, 3)}});
    CHECK_THROWS_AS(invert(RatMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST_CASE("matmul examples") {
    testgen::Rng rng(11);
    const RatMatrix a = random_rat_matrix(rng, 3, 3);
    CHECK(matmul(a, RatMatrix::identity(3)) == a);
    CHECK(matmul(RatMatrix::identity(3), a) == a);
    const RatMatrix n{{0, 1}, {0, 0}};
    CHECK(matmul(n, n).is_zero());
    CHECK_THROWS_AS(matmul(RatMatrix(2, 3), RatMatrix(2, 3)), ShapeError);
}

TEST_CASE("rank-nullity and kernel exactness on random matrices") {
    testgen::Rng rng(101);
    for (int iter = 0; iter < 60; ++iter) {
        const int rows = rng.uniform(0, 6);
        const int cols = rng.uniform(0, 6);
        RatMatrix m = random_rat_matrix(rng, rows, cols);
        if (rng.uniform(0, 1) == 1 && rows > 0 && cols > 0) {
            // force rank deficiency via a low-rank product
            const int inner = rng.uniform(0, std::min(rows, cols));
            m = matmul(random_rat_matrix(rng, rows, inner), random_rat_matrix(rng, inner, cols));
        }
        const int r = rank(m);
        const auto kernel = kernel_basis(m);
        CHECK(r + static_cast<int>(kernel.size()) == cols);
        for (const auto& v : kernel) {
            for (const auto& entry : matvec(m, v)) CHECK(entry == 0);
        }
        CHECK(r == oracle::rank(oracle::of_production(m)));
    }
}

TEST_CASE("det nonzero iff full rank, and inverse is exact") {
    testgen::Rng rng(202);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = rng.uniform(0, 5);
        const RatMatrix m = random_rat_matrix(rng, n, n);
        const bool invertible = det(m) != 0;
        CHECK(invertible == (rank(m) == n));
        if (invertible) {
            CHECK(matmul(invert(m), m) == RatMatrix::identity(n));
            CHECK(matmul(m, invert(m)) == RatMatrix::identity(n));
        } else {
            CHECK_THROWS_AS(invert(m), SingularMatrixError);
        }
    }
}

TEST_CASE("rank invariant under permutations and row scaling") {
    testgen::Rng rng(303);
    for (int iter = 0; iter < 30; ++iter) {
        const int rows = rng.uniform(1, 6);
        const int cols = rng.uniform(1, 6);
        const RatMatrix m = random_rat_matrix(rng, rows, cols);
        const int r = rank(m);

        RatMatrix permuted(rows, cols);
        std::vector<int> rp(rows), cp(cols);
        for (int i = 0; i < rows; ++i) rp[i] = i;
        for (int j = 0; j < cols; ++j) cp[j] = j;
        std::shuffle(rp.begin(), rp.end(), rng.eng);
        std::shuffle(cp.begin(), cp.end(), rng.eng);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) permuted(i, j) = m(rp[i], cp[j]);
        CHECK(rank(permuted) == r);

        RatMatrix scaled = m;
        const int row = rng.uniform(0, rows - 1);
        const Rational c = rng.nonzero_rat();
        for (int j = 0; j < cols; ++j) scaled(row, j) *= c;
        CHECK(rank(scaled) == r);
    }
}

TEST_CASE("huge-entry elimination stays exact") {
    // Hilbert-style matrix: small rationals whose elimination mixes many
    // denominators; inverse entries grow large but must stay exact.
    const int n = 6;
    RatMatrix h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = Rational(1, i + j + 1);
    CHECK(rank(h) == n);
    CHECK(matmul(invert(h), h) == RatMatrix::identity(n));
}

} // TEST_SUITE
