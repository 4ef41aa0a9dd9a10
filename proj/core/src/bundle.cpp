#include "primcoh/bundle.hpp"

#include "primcoh/linalg.hpp"

#include <sstream>

namespace primcoh {

BundleData trivial_bundle(int m, int rank) {
    BundleData b;
    b.rank = rank;
    b.A.assign(static_cast<std::size_t>(rank) * rank, Form(m, 1));
    b.phi = RatMatrix(rank, rank);
    return b;
}

bool EForm::is_zero() const {
    for (const auto& c : components) {
        if (!c.is_zero()) return false;
    }
    return true;
}

EForm zero_eform(int m, int rank, int degree) {
    EForm x;
    x.degree = degree;
    x.components.assign(rank, Form(m, degree));
    return x;
}

void require_bundle_shape(const BundleData& b, const ModelSpec& spec) {
    if (b.rank < 1) throw ShapeError("bundle rank must be >= 1");
    if (static_cast<int>(b.A.size()) != b.rank * b.rank) {
        throw ShapeError("connection matrix A must have rank x rank entries");
    }
    for (const auto& a : b.A) {
        if (a.m() != spec.m || a.degree() != 1) {
            throw ShapeError("every connection entry must be a degree-1 form on the model");
        }
    }
    if (b.phi.rows() != b.rank || b.phi.cols() != b.rank) {
        throw ShapeError("Phi must be rank x rank");
    }
}

namespace {

void require_eform_shape(const BundleData& b, const EForm& x, const ModelSpec& spec) {
    if (x.rank() != b.rank) {
        throw ShapeError("bundle rank " + std::to_string(b.rank) + " does not match form rank " +
                         std::to_string(x.rank()));
    }
    for (const auto& c : x.components) {
        if (c.m() != spec.m || c.degree() != x.degree) {
            throw ShapeError("bundle-valued form has inconsistent component degrees");
        }
    }
}

} // namespace

EForm nabla(const BundleData& b, const EForm& x, const ModelSpec& spec) {
    require_bundle_shape(b, spec);
    require_eform_shape(b, x, spec);
    EForm out = zero_eform(spec.m, b.rank, x.degree + 1);
    if (form_dim(spec.m, x.degree + 1) == 0) return out;
    for (int i = 0; i < b.rank; ++i) {
        out.components[i] = differential(x.components[i], spec);
        for (int j = 0; j < b.rank; ++j) {
            if (b.a(i, j).is_zero() || x.components[j].is_zero()) continue;
            out.components[i] += wedge(b.a(i, j), x.components[j]);
        }
    }
    return out;
}

std::vector<Form> curvature(const BundleData& b, const ModelSpec& spec) {
    require_bundle_shape(b, spec);
    std::vector<Form> f;
    f.reserve(static_cast<std::size_t>(b.rank) * b.rank);
    for (int i = 0; i < b.rank; ++i) {
        for (int j = 0; j < b.rank; ++j) {
            Form fij = differential(b.a(i, j), spec);
            for (int k = 0; k < b.rank; ++k) {
                if (b.a(i, k).is_zero() || b.a(k, j).is_zero()) continue;
                fij += wedge(b.a(i, k), b.a(k, j));
            }
            f.push_back(std::move(fij));
        }
    }
    return f;
}

RatMatrix nabla_matrix(const BundleData& b, const ModelSpec& spec, int degree) {
    require_bundle_shape(b, spec);
    const int m = spec.m;
    const int ck = form_dim(m, degree);
    const int ck1 = form_dim(m, degree + 1);
    RatMatrix out(b.rank * ck1, b.rank * ck);
    if (ck == 0 || ck1 == 0) return out;
    const RatMatrix d = differential_matrix(spec, degree);
    for (int c = 0; c < b.rank; ++c) {
        for (int p = 0; p < ck1; ++p)
            for (int q = 0; q < ck; ++q)
                if (d(p, q) != 0) out(c * ck1 + p, c * ck + q) = d(p, q);
        for (int e = 0; e < b.rank; ++e) {
            if (b.a(c, e).is_zero()) continue;
            const RatMatrix w = wedge_left_matrix(b.a(c, e), degree);
            for (int p = 0; p < ck1; ++p)
                for (int q = 0; q < ck; ++q)
                    if (w(p, q) != 0) out(c * ck1 + p, e * ck + q) += w(p, q);
        }
    }
    return out;
}

std::string to_string(const FlatnessFailure& f) {
    std::ostringstream os;
    if (f.condition == 1) {
        os << "curvature + eta*Phi, entry (" << f.row << "," << f.col
           << "): " << to_string(f.residual);
    } else {
        os << "A*Phi - Phi*A, entry (" << f.row << "," << f.col << "): " << to_string(f.residual);
    }
    return os.str();
}

FlatnessReport check_cone_flat(const BundleData& b, const ModelSpec& spec) {
    require_bundle_shape(b, spec);
    FlatnessReport report;
    const std::vector<Form> f = curvature(b, spec);
    for (int i = 0; i < b.rank; ++i) {
        for (int j = 0; j < b.rank; ++j) {
            Form residual = f[static_cast<std::size_t>(i) * b.rank + j];
            residual += b.phi(i, j) * spec.eta;
            if (!residual.is_zero()) {
                report.failures.push_back({1, i + 1, j + 1, std::move(residual)});
            }
        }
    }
    // with constant Phi the commutation condition reduces to A*Phi = Phi*A
    for (int i = 0; i < b.rank; ++i) {
        for (int j = 0; j < b.rank; ++j) {
            Form residual(spec.m, 1);
            for (int k = 0; k < b.rank; ++k) {
                residual += b.phi(k, j) * b.a(i, k);
                residual -= b.phi(i, k) * b.a(k, j);
            }
            if (!residual.is_zero()) {
                report.failures.push_back({2, i + 1, j + 1, std::move(residual)});
            }
        }
    }
    report.passed = report.failures.empty();
    return report;
}

BundleData tensor_product(const BundleData& b1, const BundleData& b2) {
    const int r1 = b1.rank;
    const int r2 = b2.rank;
    const int m = b1.A.empty() ? 0 : b1.A.front().m();
    if (!b2.A.empty() && b2.A.front().m() != m) {
        throw ShapeError("tensor_product of bundles over different models");
    }
    BundleData out = trivial_bundle(m, r1 * r2);
    // A = A1 (x) I2 + I1 (x) A2, with 1-form entries
    for (int i1 = 0; i1 < r1; ++i1)
        for (int j1 = 0; j1 < r1; ++j1) {
            if (b1.a(i1, j1).is_zero()) continue;
            for (int k = 0; k < r2; ++k) out.a(i1 * r2 + k, j1 * r2 + k) += b1.a(i1, j1);
        }
    for (int i2 = 0; i2 < r2; ++i2)
        for (int j2 = 0; j2 < r2; ++j2) {
            if (b2.a(i2, j2).is_zero()) continue;
            for (int k = 0; k < r1; ++k) out.a(k * r2 + i2, k * r2 + j2) += b2.a(i2, j2);
        }
    out.phi = kron(b1.phi, RatMatrix::identity(r2)) + kron(RatMatrix::identity(r1), b2.phi);
    return out;
}

namespace {

void require_line_bundle(const BundleData& l) {
    if (l.rank != 1) {
        throw RankError("L must be a line bundle (rank 1), got rank " + std::to_string(l.rank));
    }
}

} // namespace

BundleData tensor_power(const BundleData& e, const BundleData& l, int n) {
    require_line_bundle(l);
    if (n < 0) throw Error("tensor power exponent must be >= 0");
    BundleData out = e;
    const Rational nf = Rational(n) * l.phi(0, 0);
    for (int i = 0; i < out.rank; ++i) {
        out.a(i, i) += Rational(n) * l.a(0, 0);
        out.phi(i, i) += nf;
    }
    return out;
}

Polynomial phi_det_poly(const BundleData& e, const BundleData& l) {
    require_line_bundle(l);
    const int r = e.phi.rows();
    // det(Phi + t I) via exact interpolation at t = 0..r, then t = f*n.
    std::vector<std::pair<Rational, Rational>> points;
    for (int t = 0; t <= r; ++t) {
        RatMatrix shifted = e.phi;
        for (int i = 0; i < r; ++i) shifted(i, i) += t;
        points.emplace_back(Rational(t), det(shifted));
    }
    const Polynomial in_t = interpolate(points);
    const Rational f = l.phi(0, 0);
    std::vector<Rational> coeffs(in_t.degree() + 1);
    Rational fk = 1;
    for (int k = 0; k <= in_t.degree(); ++k) {
        coeffs[k] = in_t.coeff(k) * fk;
        fk *= f;
    }
    return Polynomial(std::move(coeffs));
}

} // namespace primcoh
