#include "primcoh/model.hpp"

#include <bit>
#include <sstream>

namespace primcoh {

Form two_form(int m, const std::vector<TwoFormTerm>& terms) {
    Form f(m, 2);
    const BasisTable& table = basis_table(m);
    for (const auto& t : terms) {
        if (t.i < 1 || t.j < 1 || t.i > m || t.j > m || t.i >= t.j) {
            std::ostringstream os;
            os << "bad 2-form term (" << to_string(t.coeff) << ", " << t.i << ", " << t.j
               << "): need 1 <= i < j <= " << m;
            throw FormatError(os.str());
        }
        const std::uint32_t mask = (1u << (t.i - 1)) | (1u << (t.j - 1));
        f[table.index_of(2, mask)] += t.coeff;
    }
    return f;
}

Form one_form(int m, const std::vector<OneFormTerm>& terms) {
    Form f(m, 1);
    const BasisTable& table = basis_table(m);
    for (const auto& t : terms) {
        if (t.i < 1 || t.i > m) {
            std::ostringstream os;
            os << "bad 1-form term (" << to_string(t.coeff) << ", " << t.i << "): need 1 <= i <= "
               << m;
            throw FormatError(os.str());
        }
        f[table.index_of(1, 1u << (t.i - 1))] += t.coeff;
    }
    return f;
}

std::vector<TwoFormTerm> two_form_terms(const Form& f) {
    if (f.degree() != 2) throw ShapeError("two_form_terms needs a 2-form");
    std::vector<TwoFormTerm> out;
    const auto& masks = basis_table(f.m()).masks(2);
    for (int q = 0; q < f.dim(); ++q) {
        if (f[q] == 0) continue;
        const auto idx = Monomial{masks[q]}.indices();
        out.push_back({f[q], idx[0], idx[1]});
    }
    return out;
}

std::vector<OneFormTerm> one_form_terms(const Form& f) {
    if (f.degree() != 1) throw ShapeError("one_form_terms needs a 1-form");
    std::vector<OneFormTerm> out;
    const auto& masks = basis_table(f.m()).masks(1);
    for (int q = 0; q < f.dim(); ++q) {
        if (f[q] == 0) continue;
        out.push_back({f[q], Monomial{masks[q]}.indices()[0]});
    }
    return out;
}

namespace {

void require_well_formed(const ModelSpec& spec) {
    if (spec.m < 1 || spec.m > kMaxGenerators) {
        throw FormatError("model dimension m must be in 1.." + std::to_string(kMaxGenerators));
    }
    if (static_cast<int>(spec.d.size()) != spec.m) {
        throw FormatError("d must list one 2-form per generator (" + std::to_string(spec.m) +
                          " expected, " + std::to_string(spec.d.size()) + " given)");
    }
    for (int k = 0; k < spec.m; ++k) {
        if (spec.d[k].m() != spec.m || spec.d[k].degree() != 2) {
            throw FormatError("d(e" + std::to_string(k + 1) + ") is not a 2-form on " +
                              std::to_string(spec.m) + " generators");
        }
    }
    if (spec.eta.m() != spec.m || spec.eta.degree() != 2) {
        throw FormatError("eta is not a 2-form on " + std::to_string(spec.m) + " generators");
    }
}

// d of a single basis monomial: sum over positions of the Leibniz expansion
// e_{s1} ^ ... ^ d(e_{st}) ^ ... ^ e_{sk}. The degree-2 factor commutes past
// the leading 1-forms without sign, so each term is (-1)^t (d e_{st}) ^ rest.
Form d_monomial(std::uint32_t mask, const ModelSpec& spec) {
    const int m = spec.m;
    const BasisTable& table = basis_table(m);
    const int k = std::popcount(mask);
    Form out(m, k + 1);
    if (out.dim() == 0) return out;
    int pos = 0;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1, ++pos) {
        const int g = std::countr_zero(bits); // 0-based generator
        const Form& dg = spec.d[g];
        if (dg.is_zero()) continue;
        const std::uint32_t rest = mask & ~(1u << g);
        const auto& masks2 = table.masks(2);
        for (int q = 0; q < dg.dim(); ++q) {
            if (dg[q] == 0) continue;
            const int s = merge_sign(masks2[q], rest);
            if (s == 0) continue;
            const int sign = (pos % 2 == 0) ? s : -s;
            const int idx = table.index_of(k + 1, masks2[q] | rest);
            if (sign > 0) {
                out[idx] += dg[q];
            } else {
                out[idx] -= dg[q];
            }
        }
    }
    return out;
}

} // namespace

Form differential(const Form& a, const ModelSpec& spec) {
    require_well_formed(spec);
    if (a.m() != spec.m) throw ShapeError("form does not belong to this model");
    const int m = spec.m;
    const int dg = a.degree() + 1;
    Form out(m, dg > m ? m + 1 : dg);
    if (a.dim() == 0 || out.dim() == 0) return out;
    const auto& masks = basis_table(m).masks(a.degree());
    for (int q = 0; q < a.dim(); ++q) {
        if (a[q] == 0) continue;
        out += a[q] * d_monomial(masks[q], spec);
    }
    return out;
}

std::vector<Monomial> basis(const ModelSpec& spec, int degree) {
    require_well_formed(spec);
    if (degree < 0 || degree > spec.m) {
        throw DegreeError("degree " + std::to_string(degree) + " outside 0.." +
                          std::to_string(spec.m));
    }
    std::vector<Monomial> out;
    for (std::uint32_t mask : basis_table(spec.m).masks(degree)) out.push_back(Monomial{mask});
    return out;
}

ValidationReport validate_model(const ModelSpec& spec) {
    require_well_formed(spec);
    ValidationReport report;

    // structural bounds were enforced above; recorded so the report is complete
    report.checks.push_back({"indexing", true, "all generator indices within 1.." +
                                                   std::to_string(spec.m)});

    {
        std::string bad;
        for (int k = 0; k < spec.m; ++k) {
            Form dd = differential(spec.d[k], spec);
            if (!dd.is_zero()) {
                if (!bad.empty()) bad += "; ";
                bad += "d^2(e" + std::to_string(k + 1) + ") = " + to_string(dd);
            }
        }
        report.checks.push_back({"d_squared_zero", bad.empty(),
                                 bad.empty() ? "d^2 = 0 on all generators" : bad});
    }
    {
        Form de = differential(spec.eta, spec);
        report.checks.push_back(
            {"eta_closed", de.is_zero(),
             de.is_zero() ? "d(eta) = 0" : "d(eta) = " + to_string(de)});
    }
    if (spec.symplectic) {
        bool ok = spec.m % 2 == 0;
        std::string detail;
        if (!ok) {
            detail = "m = " + std::to_string(spec.m) + " is odd";
        } else {
            Form power(spec.m, 0);
            power[0] = 1;
            for (int i = 0; i < spec.m / 2; ++i) power = wedge(power, spec.eta);
            ok = !power.is_zero();
            detail = "eta^(m/2) = " + to_string(power);
        }
        report.checks.push_back({"symplectic_nondegenerate", ok, detail});
    }

    report.passed = true;
    for (const auto& c : report.checks) report.passed = report.passed && c.passed;
    return report;
}

RatMatrix differential_matrix(const ModelSpec& spec, int degree) {
    require_well_formed(spec);
    const int m = spec.m;
    RatMatrix out(form_dim(m, degree + 1), form_dim(m, degree));
    const auto& masks = basis_table(m).masks(degree);
    for (int q = 0; q < out.cols(); ++q) {
        Form img = d_monomial(masks[q], spec);
        for (int p = 0; p < img.dim(); ++p) out(p, q) = img[p];
    }
    return out;
}

RatMatrix wedge_left_matrix(const Form& a, int degree) {
    const int m = a.m();
    const BasisTable& table = basis_table(m);
    const int target = degree + a.degree();
    RatMatrix out(form_dim(m, target), form_dim(m, degree));
    if (out.rows() == 0 || out.cols() == 0 || a.dim() == 0) return out;
    const auto& ma = table.masks(a.degree());
    const auto& mb = table.masks(degree);
    for (int q = 0; q < out.cols(); ++q) {
        for (int qa = 0; qa < a.dim(); ++qa) {
            if (a[qa] == 0) continue;
            const int s = merge_sign(ma[qa], mb[q]);
            if (s == 0) continue;
            const int p = table.index_of(target, ma[qa] | mb[q]);
            if (s > 0) {
                out(p, q) += a[qa];
            } else {
                out(p, q) -= a[qa];
            }
        }
    }
    return out;
}

} // namespace primcoh
