#include "primcoh/bundle.hpp"

#include "primcoh/linalg.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace primcoh;

namespace {

ModelSpec kodaira_thurston() {
    ModelSpec spec;
    spec.name = "kt";
    spec.m = 4;
    spec.d.assign(4, Form(4, 2));
    spec.d[3] = two_form(4, {{1, 1, 2}});
    spec.eta = two_form(4, {{1, 1, 2}});
    return spec;
}

// rank-1 bundle a = -e4, f = 1 (the invertible-Phi line bundle on kt)
BundleData kt_line_bundle() {
    BundleData l = trivial_bundle(4, 1);
    l.a(0, 0) = Rational(-1) * Form::generator(4, 4);
    l.phi(0, 0) = 1;
    return l;
}

Form mono(int m, std::initializer_list<int> indices, const Rational& c = 1) {
    std::uint32_t mask = 0;
    for (int g : indices) mask |= 1u << (g - 1);
    return Form::monomial(m, Monomial{mask}, c);
}

EForm random_eform(testgen::Rng& rng, int m, int rank, int degree) {
    EForm x = zero_eform(m, rank, degree);
    for (auto& c : x.components)
        for (int q = 0; q < c.dim(); ++q) c[q] = rng.rat();
    return x;
}

} // namespace

TEST_SUITE("bundle") {

TEST_CASE("nabla with zero connection is the componentwise differential") {
    testgen::Rng rng(1);
    const ModelSpec kt = kodaira_thurston();
    const BundleData b = trivial_bundle(4, 2);
    for (int deg = 0; deg <= 4; ++deg) {
        const EForm x = random_eform(rng, 4, 2, deg);
        const EForm dx = nabla(b, x, kt);
        for (int i = 0; i < 2; ++i) {
            CHECK(dx.components[i] == differential(x.components[i], kt));
        }
    }
}

TEST_CASE("nabla on the kt line bundle") {
    const ModelSpec kt = kodaira_thurston();
    const BundleData l = kt_line_bundle();

    EForm one = zero_eform(4, 1, 0);
    one.components[0][0] = 1;
    const EForm d_one = nabla(l, one, kt);
    CHECK(d_one.components[0] == mono(4, {4}, -1));

    EForm e4 = zero_eform(4, 1, 1);
    e4.components[0] = Form::generator(4, 4);
    const EForm d_e4 = nabla(l, e4, kt);
    CHECK(d_e4.components[0] == mono(4, {1, 2})); // d(e4) + (-e4)^e4 = e1^e2
}

TEST_CASE("curvature examples") {
    const ModelSpec kt = kodaira_thurston();

    const auto zero_curv = curvature(trivial_bundle(4, 3), kt);
    for (const auto& f : zero_curv) CHECK(f.is_zero());

    const auto line_curv = curvature(kt_line_bundle(), kt);
    CHECK(line_curv[0] == mono(4, {1, 2}, -1)); // d(-e4) = -e1^e2

    ModelSpec t4 = kt;
    t4.d[3] = Form(4, 2);
    t4.eta = two_form(4, {{1, 1, 3}, {1, 2, 4}});
    BundleData flat = trivial_bundle(4, 1);
    flat.a(0, 0) = Form::generator(4, 1);
    CHECK(curvature(flat, t4)[0].is_zero());
}

TEST_CASE("nabla twice equals curvature wedged on") {
    testgen::Rng rng(99);
    for (int iter = 0; iter < 25; ++iter) {
        const auto rm = testgen::random_model(rng, 5);
        const BundleData b = testgen::random_flat_bundle(rng, rm, 2);
        const int deg = rng.uniform(0, rm.spec.m - 1);
        const EForm x = random_eform(rng, rm.spec.m, b.rank, deg);
        const EForm ddx = nabla(b, nabla(b, x, rm.spec), rm.spec);
        const auto f = curvature(b, rm.spec);
        for (int i = 0; i < b.rank; ++i) {
            Form expected(rm.spec.m, deg + 2 > rm.spec.m ? rm.spec.m + 1 : deg + 2);
            for (int j = 0; j < b.rank; ++j) {
                expected += wedge(f[static_cast<std::size_t>(i) * b.rank + j], x.components[j]);
            }
            CHECK(ddx.components[i] == expected);
        }
    }
}

TEST_CASE("check_cone_flat examples") {
    const ModelSpec kt = kodaira_thurston();

    CHECK(check_cone_flat(trivial_bundle(4, 2), kt).passed);
    CHECK(check_cone_flat(kt_line_bundle(), kt).passed);

    BundleData f2 = kt_line_bundle();
    f2.phi(0, 0) = 2;
    const auto report = check_cone_flat(f2, kt);
    CHECK_FALSE(report.passed);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].condition == 1);
    CHECK(report.failures[0].residual == mono(4, {1, 2})); // da + 2*eta = e1^e2
}

TEST_CASE("rank mismatch raises ShapeError") {
    const ModelSpec kt = kodaira_thurston();
    const BundleData b = trivial_bundle(4, 2);
    CHECK_THROWS_AS(nabla(b, zero_eform(4, 3, 1), kt), ShapeError);
}

TEST_CASE("tensor_product examples") {
    const ModelSpec kt = kodaira_thurston();
    const BundleData l = kt_line_bundle();
    const BundleData unit = trivial_bundle(4, 1);

    CHECK(tensor_product(l, unit) == l);
    CHECK(tensor_product(unit, l) == l);

    BundleData e2 = trivial_bundle(4, 2);
    e2.phi = RatMatrix{{0, 1}, {0, 0}};
    BundleData one = trivial_bundle(4, 1);
    one.phi(0, 0) = 1;
    CHECK(tensor_product(e2, one).phi == RatMatrix{{1, 1}, {0, 1}});

    BundleData l2 = trivial_bundle(4, 1);
    l2.a(0, 0) = Form::generator(4, 1);
    l2.phi(0, 0) = Rational(-1, 2);
    const BundleData prod = tensor_product(l, l2);
    CHECK(prod.rank == 1);
    CHECK(prod.a(0, 0) == l.a(0, 0) + l2.a(0, 0));
    CHECK(prod.phi(0, 0) == Rational(1, 2));
}

TEST_CASE("tensor product of flat bundles is flat") {
    testgen::Rng rng(314);
    for (int iter = 0; iter < 20; ++iter) {
        const auto rm = testgen::random_model(rng, 5);
        const BundleData b1 = testgen::random_flat_bundle(rng, rm, 2);
        const BundleData b2 = testgen::random_flat_bundle(rng, rm, 2);
        REQUIRE(check_cone_flat(b1, rm.spec).passed);
        REQUIRE(check_cone_flat(b2, rm.spec).passed);
        CHECK(check_cone_flat(tensor_product(b1, b2), rm.spec).passed);
    }
}

TEST_CASE("tensor_power examples") {
    const BundleData l = kt_line_bundle();

    BundleData e2 = trivial_bundle(4, 2);
    e2.phi = RatMatrix{{0, 1}, {0, 0}};
    CHECK(tensor_power(e2, l, 0) == e2);
    CHECK(tensor_power(e2, l, 3).phi == RatMatrix{{3, 1}, {0, 3}});

    const BundleData triv = trivial_bundle(4, 1);
    const BundleData p5 = tensor_power(triv, l, 5);
    CHECK(p5.a(0, 0) == Rational(5) * l.a(0, 0));
    CHECK(p5.phi(0, 0) == 5);

    CHECK_THROWS_AS(tensor_power(l, trivial_bundle(4, 2), 1), RankError);
}

TEST_CASE("tensor_power equals iterated tensor_product") {
    testgen::Rng rng(2718);
    for (int iter = 0; iter < 10; ++iter) {
        const auto rm = testgen::random_model(rng, 5);
        const BundleData e = testgen::random_flat_bundle(rng, rm, 3);
        const BundleData l = testgen::random_flat_bundle(rng, rm, 1);
        BundleData iterated = e;
        for (int n = 1; n <= 4; ++n) {
            iterated = tensor_product(iterated, l);
            CHECK(tensor_power(e, l, n) == iterated);
        }
    }
}

TEST_CASE("phi_det_poly examples") {
    const int m = 4;
    BundleData l = trivial_bundle(m, 1);
    l.phi(0, 0) = 1;

    // Phi^E = 0 (rank r), f = c: det = (c n)^r
    BundleData zero3 = trivial_bundle(m, 3);
    BundleData lc = trivial_bundle(m, 1);
    lc.phi(0, 0) = Rational(2, 3);
    const Polynomial p = phi_det_poly(zero3, lc);
    CHECK(p.degree() == 3);
    CHECK(p.coeff(3) == Rational(8, 27));
    for (int k = 0; k < 3; ++k) CHECK(p.coeff(k) == 0);

    // nilpotent 2x2, f = 1: det = n^2
    BundleData e2 = trivial_bundle(m, 2);
    e2.phi = RatMatrix{{0, 1}, {0, 0}};
    const Polynomial q = phi_det_poly(e2, l);
    CHECK(q == Polynomial({0, 0, 1}));

    // f = 0: constant det(Phi^E)
    BundleData f0 = trivial_bundle(m, 1);
    BundleData e_const = trivial_bundle(m, 2);
    e_const.phi = RatMatrix{{2, 1}, {1, 1}};
    const Polynomial c = phi_det_poly(e_const, f0);
    CHECK(c.degree() == 0);
    CHECK(c.coeff(0) == 1);
}

TEST_CASE("phi_det_poly matches the tensor-power determinant, degree r when f != 0") {
    testgen::Rng rng(1618);
    for (int iter = 0; iter < 15; ++iter) {
        const auto rm = testgen::random_model(rng, 4);
        BundleData e = trivial_bundle(rm.spec.m, rng.uniform(1, 3));
        e.phi = testgen::random_matrix(rng, e.rank);
        BundleData l = trivial_bundle(rm.spec.m, 1);
        l.phi(0, 0) = rng.rat();

        const Polynomial p = phi_det_poly(e, l);
        for (int n = 0; n <= 10; ++n) {
            CHECK(p(Rational(n)) == det(tensor_power(e, l, n).phi));
        }
        if (l.phi(0, 0) != 0) {
            CHECK(p.degree() == e.rank);
            Rational fr = 1;
            for (int k = 0; k < e.rank; ++k) fr *= l.phi(0, 0);
            CHECK(p.coeff(e.rank) == fr);
        }
    }
}

} // TEST_SUITE
