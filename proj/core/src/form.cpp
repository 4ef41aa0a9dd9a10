#include "primcoh/form.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace primcoh {

int Monomial::degree() const {
    return std::popcount(mask);
}

std::vector<int> Monomial::indices() const {
    std::vector<int> out;
    for (std::uint32_t b = mask; b != 0; b &= b - 1) {
        out.push_back(std::countr_zero(b) + 1);
    }
    return out;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
    if ((a & b) != 0) return 0;
    int inversions = 0;
    for (std::uint32_t bb = b; bb != 0; bb &= bb - 1) {
        const int y = std::countr_zero(bb);
        inversions += std::popcount(a >> (y + 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

BasisTable::BasisTable(int m) : m_(m) {
    masks_.resize(m + 1);
    pos_.resize(m + 1);
    for (int k = 0; k <= m; ++k) {
        // combinations of {1..m} choose k in lexicographic order
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) c[i] = i + 1;
        while (true) {
            std::uint32_t mask = 0;
            for (int g : c) mask |= 1u << (g - 1);
            pos_[k].emplace(mask, static_cast<int>(masks_[k].size()));
            masks_[k].push_back(mask);
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && c[i] == m - (k - 1 - i)) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
}

int BasisTable::dim(int degree) const {
    if (degree < 0 || degree > m_) return 0;
    return static_cast<int>(masks_[degree].size());
}

const std::vector<std::uint32_t>& BasisTable::masks(int degree) const {
    static const std::vector<std::uint32_t> empty;
    if (degree < 0 || degree > m_) return empty;
    return masks_[degree];
}

int BasisTable::index_of(int degree, std::uint32_t mask) const {
    return pos_[degree].at(mask);
}

const BasisTable& basis_table(int m) {
    if (m < 1 || m > kMaxGenerators) {
        throw FormatError("model dimension m must be in 1.." + std::to_string(kMaxGenerators) +
                          ", got " + std::to_string(m));
    }
    static std::mutex mu;
    static std::map<int, std::unique_ptr<BasisTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<BasisTable>(m);
    return *slot;
}

int form_dim(int m, int degree) {
    return basis_table(m).dim(degree);
}

Form::Form(int m, int degree) : m_(m), degree_(degree) {
    coeffs_.resize(form_dim(m, degree));
}

Form Form::monomial(int m, Monomial mono, const Rational& coeff) {
    Form f(m, mono.degree());
    f[basis_table(m).index_of(mono.degree(), mono.mask)] = coeff;
    return f;
}

Form Form::generator(int m, int index) {
    if (index < 1 || index > m) {
        throw FormatError("generator index " + std::to_string(index) + " outside 1.." +
                          std::to_string(m));
    }
    return monomial(m, Monomial{1u << (index - 1)});
}

bool Form::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

namespace {

void require_same_space(const Form& a, const Form& b) {
    if (a.m() != b.m() || a.degree() != b.degree()) {
        throw ShapeError("form arithmetic needs matching model dimension and degree");
    }
}

} // namespace

Form& Form::operator+=(const Form& o) {
    require_same_space(*this, o);
    for (int q = 0; q < dim(); ++q) coeffs_[q] += o[q];
    return *this;
}

Form& Form::operator-=(const Form& o) {
    require_same_space(*this, o);
    for (int q = 0; q < dim(); ++q) coeffs_[q] -= o[q];
    return *this;
}

Form& Form::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Form wedge(const Form& a, const Form& b) {
    if (a.m() != b.m()) throw ShapeError("wedge of forms over different models");
    const int m = a.m();
    const BasisTable& table = basis_table(m);
    const int dg = a.degree() + b.degree();
    Form out(m, dg > m ? m + 1 : dg);
    if (out.dim() == 0 || a.dim() == 0 || b.dim() == 0) return out;
    const auto& ma = table.masks(a.degree());
    const auto& mb = table.masks(b.degree());
    for (int qa = 0; qa < a.dim(); ++qa) {
        if (a[qa] == 0) continue;
        for (int qb = 0; qb < b.dim(); ++qb) {
            if (b[qb] == 0) continue;
            const int s = merge_sign(ma[qa], mb[qb]);
            if (s == 0) continue;
            const int q = table.index_of(dg, ma[qa] | mb[qb]);
            if (s > 0) {
                out[q] += a[qa] * b[qb];
            } else {
                out[q] -= a[qa] * b[qb];
            }
        }
    }
    return out;
}

std::string to_string(const Monomial& mono) {
    if (mono.mask == 0) return "1";
    std::string s;
    for (int g : mono.indices()) {
        if (!s.empty()) s += "^";
        s += "e" + std::to_string(g);
    }
    return s;
}

std::string to_string(const Form& f) {
    if (f.dim() == 0 || f.is_zero()) return "0";
    const auto& masks = basis_table(f.m()).masks(f.degree());
    std::ostringstream os;
    bool first = true;
    for (int q = 0; q < f.dim(); ++q) {
        const Rational& c = f[q];
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const std::string mono = to_string(Monomial{masks[q]});
        if (mag != 1 || mono == "1") {
            os << to_string(mag);
            if (mono != "1") os << " ";
        }
        if (mono != "1") os << mono;
    }
    return os.str();
}

} // namespace primcoh
