#include "primcoh/cone.hpp"

#include "primcoh/linalg.hpp"

#include <sstream>

namespace primcoh {

ConeElement zero_cone_element(int m, int rank, int degree) {
    ConeElement z;
    z.degree = degree;
    z.alpha = zero_eform(m, rank, degree);
    z.beta = zero_eform(m, rank, degree - 1);
    return z;
}

ConeElement make_cone_element(int degree, EForm alpha, EForm beta) {
    if (alpha.degree != degree || beta.degree != degree - 1 || alpha.rank() != beta.rank()) {
        throw ShapeError("cone element needs alpha of the stated degree, beta one lower, equal ranks");
    }
    ConeElement z;
    z.degree = degree;
    z.alpha = std::move(alpha);
    z.beta = std::move(beta);
    return z;
}

int cone_dim(int m, int rank, int degree) {
    return rank * (form_dim(m, degree) + form_dim(m, degree - 1));
}

std::vector<Rational> cone_coordinates(const ConeElement& z) {
    std::vector<Rational> out;
    for (const Form& c : z.alpha.components)
        for (int q = 0; q < c.dim(); ++q) out.push_back(c[q]);
    for (const Form& c : z.beta.components)
        for (int q = 0; q < c.dim(); ++q) out.push_back(c[q]);
    return out;
}

ConeElement cone_element_from_coordinates(int m, int rank, int degree,
                                          const std::vector<Rational>& coords) {
    if (static_cast<int>(coords.size()) != cone_dim(m, rank, degree)) {
        throw ShapeError("coordinate vector length does not match the cochain space dimension");
    }
    ConeElement z = zero_cone_element(m, rank, degree);
    std::size_t at = 0;
    for (Form& c : z.alpha.components)
        for (int q = 0; q < c.dim(); ++q) c[q] = coords[at++];
    for (Form& c : z.beta.components)
        for (int q = 0; q < c.dim(); ++q) c[q] = coords[at++];
    return z;
}

ConeElement apply(const BundleData& b, const ModelSpec& spec, const ConeElement& z) {
    require_bundle_shape(b, spec);
    if (z.alpha.rank() != b.rank || z.beta.rank() != b.rank) {
        throw ShapeError("cone element rank does not match the bundle");
    }
    if (z.degree < 0 || z.degree > spec.m + 1) {
        throw DegreeError("cone element degree outside 0..m+1");
    }
    const int m = spec.m;
    ConeElement out = zero_cone_element(m, b.rank, z.degree + 1);

    // alpha' = nabla alpha + eta ^ beta
    out.alpha = nabla(b, z.alpha, spec);
    if (form_dim(m, z.degree + 1) > 0) {
        for (int i = 0; i < b.rank; ++i) {
            if (z.beta.components[i].is_zero()) continue;
            out.alpha.components[i] += wedge(spec.eta, z.beta.components[i]);
        }
    }

    // beta' = Phi alpha - nabla beta
    EForm phi_alpha = zero_eform(m, b.rank, z.degree);
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) {
            if (b.phi(i, j) == 0 || z.alpha.components[j].is_zero()) continue;
            phi_alpha.components[i] += b.phi(i, j) * z.alpha.components[j];
        }
    EForm nabla_beta = nabla(b, z.beta, spec);
    for (int i = 0; i < b.rank; ++i) {
        out.beta.components[i] = phi_alpha.components[i] - nabla_beta.components[i];
    }
    return out;
}

namespace {

RatMatrix cone_matrix(const BundleData& b, const ModelSpec& spec, int degree) {
    const int m = spec.m;
    const int r = b.rank;
    const int ca = form_dim(m, degree);
    const int cb = form_dim(m, degree - 1);
    const int ca1 = form_dim(m, degree + 1);
    RatMatrix out(r * (ca1 + ca), r * (ca + cb));

    // top-left: nabla on degree-i alpha block
    {
        const RatMatrix n = nabla_matrix(b, spec, degree);
        for (int p = 0; p < n.rows(); ++p)
            for (int q = 0; q < n.cols(); ++q)
                if (n(p, q) != 0) out(p, q) = n(p, q);
    }
    // top-right: eta ^ . on the beta block, block diagonal per component
    if (cb > 0 && ca1 > 0) {
        const RatMatrix w = wedge_left_matrix(spec.eta, degree - 1);
        for (int c = 0; c < r; ++c)
            for (int p = 0; p < ca1; ++p)
                for (int q = 0; q < cb; ++q)
                    if (w(p, q) != 0) out(c * ca1 + p, r * ca + c * cb + q) = w(p, q);
    }
    // bottom-left: Phi acting on components, identity on monomials
    for (int c = 0; c < r; ++c)
        for (int e = 0; e < r; ++e) {
            if (b.phi(c, e) == 0) continue;
            for (int q = 0; q < ca; ++q) out(r * ca1 + c * ca + q, e * ca + q) = b.phi(c, e);
        }
    // bottom-right: -nabla on the degree-(i-1) beta block
    if (cb > 0) {
        const RatMatrix n = nabla_matrix(b, spec, degree - 1);
        for (int p = 0; p < n.rows(); ++p)
            for (int q = 0; q < n.cols(); ++q)
                if (n(p, q) != 0) out(r * ca1 + p, r * ca + q) = -n(p, q);
    }
    return out;
}

} // namespace

ConeComplex assemble(const BundleData& b, const ModelSpec& spec) {
    const ValidationReport v = validate_model(spec);
    if (!v.passed) {
        std::string what = "model failed validation:";
        for (const auto& c : v.checks) {
            if (!c.passed) what += " [" + c.name + "] " + c.detail;
        }
        throw ValidationError(what);
    }
    require_bundle_shape(b, spec);

    ConeComplex c;
    c.spec = spec;
    c.bundle = b;
    c.flatness = check_cone_flat(b, spec);
    for (int i = 0; i <= spec.m + 1; ++i) c.matrices.push_back(cone_matrix(b, spec, i));
    return c;
}

bool verify_complex(const ConeComplex& c) {
    for (std::size_t i = 0; i + 1 < c.matrices.size(); ++i) {
        if (!matmul(c.matrices[i + 1], c.matrices[i]).is_zero()) return false;
    }
    return true;
}

std::vector<int> cohomology_dims(const ConeComplex& c) {
    if (!verify_complex(c)) {
        throw ComplexError("A^2 != 0: cohomology is undefined (bundle is not cone-flat)");
    }
    std::vector<int> dims;
    int prev_rank = 0;
    for (const RatMatrix& mat : c.matrices) {
        const int r = rank(mat);
        dims.push_back(mat.cols() - r - prev_rank);
        prev_rank = r;
    }
    return dims;
}

ConeElement contract(const ConeComplex& c, const ConeElement& z) {
    const int m = c.spec.m;
    const int r = c.bundle.rank;
    if (z.is_zero()) {
        // identity holds trivially in the zero space
        return zero_cone_element(m, r, z.degree > 0 ? z.degree - 1 : 0);
    }
    if (det(c.bundle.phi) == 0) {
        throw SingularMatrixError("Phi is singular: the contraction needs an invertible Phi");
    }
    const ConeElement residual = apply(c.bundle, c.spec, z);
    if (!residual.is_zero()) {
        std::ostringstream os;
        os << "input is not a cocycle; A(z) has alpha = [";
        for (int i = 0; i < r; ++i) os << (i ? ", " : "") << to_string(residual.alpha.components[i]);
        os << "], beta = [";
        for (int i = 0; i < r; ++i) os << (i ? ", " : "") << to_string(residual.beta.components[i]);
        os << "]";
        throw CocycleError(os.str());
    }

    const RatMatrix phi_inv = invert(c.bundle.phi);
    ConeElement w = zero_cone_element(m, r, z.degree - 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (phi_inv(i, j) == 0 || z.beta.components[j].is_zero()) continue;
            w.alpha.components[i] += phi_inv(i, j) * z.beta.components[j];
        }

    if (apply(c.bundle, c.spec, w) != z) {
        throw Error("internal: contraction identity A((Phi^-1) beta, 0) = (alpha, beta) violated");
    }
    return w;
}

} // namespace primcoh
